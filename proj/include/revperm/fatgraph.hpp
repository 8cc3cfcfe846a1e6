#pragma once

// Orientable fatgraphs as permutation triples (alpha, beta, gamma) with
// gamma = alpha∘beta and alpha a fixed-point-free involution: alpha-pairs are
// edges, beta-cycles vertices (counterclockwise half-edge order), gamma-cycles
// faces. The doubling ("hat") construction turns any plane permutation into
// one whose diagonal is such an involution, which is how a signed permutation
// acquires a fatgraph and a genus.

#include <string>
#include <vector>

#include "revperm/permutation.hpp"
#include "revperm/plane_permutation.hpp"
#include "revperm/signed_permutation.hpp"

namespace revperm {

// Doubling of a plane permutation: a companion element bar(v) = v + bar_offset
// is inserted after each v in the s-row. pi restricted to originals is
// unchanged, bar(v) maps to bar(pi⁻¹(s(v))), and the diagonal of the result
// is the perfect matching bar(v) <-> pi(v).
struct HatResult {
    PlanePermutation plane;
    GroundSet originals;
    int bar_offset;

    int bar(int v) const { return v + bar_offset; }
    bool is_barred(int x) const { return !originals.contains(x); }
    int unbar(int x) const { return x - bar_offset; }

    // Like PlanePermutation::two_row_render, with barred elements printed as
    // the original value plus a prime (e.g. 5').
    std::string two_row_render() const;
};

HatResult hat(const PlanePermutation& pp);

class Fatgraph {
public:
    // Validates alpha is a fixed-point-free involution and gamma = alpha∘beta.
    Fatgraph(Permutation alpha, Permutation beta, Permutation gamma);
    static Fatgraph from_alpha_beta(Permutation alpha, Permutation beta);

    const GroundSet& half_edges() const { return alpha_.ground(); }
    const Permutation& alpha() const { return alpha_; }
    const Permutation& beta() const { return beta_; }
    const Permutation& gamma() const { return gamma_; }

    bool is_connected() const;

    bool operator==(const Fatgraph& o) const {
        return alpha_ == o.alpha_ && beta_ == o.beta_;
    }

private:
    Permutation alpha_;
    Permutation beta_;
    Permutation gamma_;
};

struct FatgraphStats {
    int vertices;  // C(beta)
    int edges;     // C(alpha)
    int faces;     // C(gamma)
    int genus;
};

// Fatgraph of a signed permutation via the doubled skew-symmetric instance:
// alpha the hat diagonal, beta the hat pi, gamma the hat s (one long cycle).
Fatgraph fatgraph_from_signed(const SignedPermutation& a);

// Euler characteristic: C(beta) - C(alpha) + C(gamma) = 2 - 2g. Throws on a
// disconnected fatgraph or a non-integral/negative genus.
FatgraphStats genus(const Fatgraph& fg);

enum class FatgraphFormat { json, dot };

std::string export_fatgraph(const Fatgraph& fg, FatgraphFormat format);
Fatgraph fatgraph_from_json(const std::string& text);

}  // namespace revperm
