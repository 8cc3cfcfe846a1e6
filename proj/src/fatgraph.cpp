#include "revperm/fatgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace revperm {

namespace {

int max_abs_element(const GroundSet& g) {
    int m = 0;
    for (int v : g.elements()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

std::string HatResult::two_row_render() const {
    auto label = [&](int x) {
        return is_barred(x) ? std::to_string(unbar(x)) + "'" : std::to_string(x);
    };
    auto join = [&](const std::vector<int>& row) {
        std::string out;
        for (size_t k = 0; k < row.size(); ++k) {
            if (k) out += ' ';
            out += label(row[k]);
        }
        return out;
    };
    return "s : " + join(plane.s_row()) + "\npi: " + join(plane.pi_row()) + "\n";
}

HatResult hat(const PlanePermutation& pp) {
    const GroundSet& g = pp.s().ground();
    const int offset = 10 * (max_abs_element(g) + 1);

    std::vector<int> doubled = g.elements();
    for (int v : g.elements()) doubled.push_back(v + offset);
    GroundSet hat_ground(std::move(doubled));

    // s-row with a companion after every element
    std::vector<int> hat_row;
    hat_row.reserve(static_cast<size_t>(2 * g.size()));
    for (int v : pp.s_row()) {
        hat_row.push_back(v);
        hat_row.push_back(v + offset);
    }
    Permutation hat_s = Permutation::from_cycle_row(hat_ground, hat_row);

    const Permutation pi_inv = pp.pi().inverse();
    std::vector<int> images;
    images.reserve(static_cast<size_t>(hat_ground.size()));
    for (int x : hat_ground.elements()) {
        if (g.contains(x))
            images.push_back(pp.pi().apply(x));
        else
            images.push_back(pi_inv.apply(pp.s().apply(x - offset)) + offset);
    }
    Permutation hat_pi = Permutation::from_images(hat_ground, images);

    return HatResult{PlanePermutation(std::move(hat_s), std::move(hat_pi), pp.anchor()),
                     g, offset};
}

Fatgraph::Fatgraph(Permutation alpha, Permutation beta, Permutation gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    if (alpha_.ground() != beta_.ground() || alpha_.ground() != gamma_.ground())
        throw std::invalid_argument("fatgraph: permutations must share a ground set");
    if (alpha_.ground().size() % 2 != 0)
        throw std::invalid_argument("fatgraph: half-edge count must be even");
    if (!alpha_.is_involution() || !alpha_.fixed_points().empty())
        throw std::invalid_argument("fatgraph: alpha must be a fixed-point-free involution");
    if (gamma_ != compose(alpha_, beta_))
        throw std::invalid_argument("fatgraph: gamma must equal alpha∘beta");
}

Fatgraph Fatgraph::from_alpha_beta(Permutation alpha, Permutation beta) {
    Permutation gamma = compose(alpha, beta);
    return Fatgraph(std::move(alpha), std::move(beta), std::move(gamma));
}

bool Fatgraph::is_connected() const {
    // union half-edges along both alpha and beta orbits
    const int m = half_edges().size();
    std::vector<int> parent(static_cast<size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (int i = 0; i < m; ++i) {
        const int x = half_edges().element(i);
        unite(i, half_edges().index_of(alpha_.apply(x)));
        unite(i, half_edges().index_of(beta_.apply(x)));
    }
    const int root = find(0);
    for (int i = 1; i < m; ++i)
        if (find(i) != root) return false;
    return true;
}

Fatgraph fatgraph_from_signed(const SignedPermutation& a) {
    const HatResult h = hat(skew_symmetric(a).plane());
    Permutation alpha = h.plane.diagonal();
    Permutation beta = h.plane.pi();
    Permutation gamma = h.plane.s();
    return Fatgraph(std::move(alpha), std::move(beta), std::move(gamma));
}

FatgraphStats genus(const Fatgraph& fg) {
    if (!fg.is_connected())
        throw std::invalid_argument("genus: fatgraph is disconnected");
    const int v = fg.beta().cycle_count();
    const int e = fg.alpha().cycle_count();
    const int f = fg.gamma().cycle_count();
    const int euler_defect = 2 - (v - e + f);  // = 2g
    if (euler_defect % 2 != 0 || euler_defect < 0)
        throw std::logic_error("genus: Euler characteristic does not yield a genus");
    return FatgraphStats{v, e, f, euler_defect / 2};
}

std::string export_fatgraph(const Fatgraph& fg, FatgraphFormat format) {
    if (format == FatgraphFormat::json) {
        const FatgraphStats st = genus(fg);
        nlohmann::json j;
        j["half_edges"] = fg.half_edges().elements();
        j["alpha"] = fg.alpha().cycles();
        j["beta"] = fg.beta().cycles();
        j["gamma"] = fg.gamma().cycles();
        j["vertices"] = st.vertices;
        j["edges"] = st.edges;
        j["faces"] = st.faces;
        j["genus"] = st.genus;
        return j.dump(2) + "\n";
    }

    // dot: beta-cycles as nodes labeled with their cyclic half-edge order,
    // alpha-pairs as undirected edges
    const auto vertices = fg.beta().cycles();
    std::vector<int> vertex_of(static_cast<size_t>(fg.half_edges().size()), -1);
    for (size_t v = 0; v < vertices.size(); ++v)
        for (int x : vertices[v])
            vertex_of[static_cast<size_t>(fg.half_edges().index_of(x))] = static_cast<int>(v);

    std::string out = "graph fatgraph {\n";
    for (size_t v = 0; v < vertices.size(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"(";
        for (size_t k = 0; k < vertices[v].size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(vertices[v][k]);
        }
        out += ")\"];\n";
    }
    for (const auto& pair : fg.alpha().cycles()) {
        const int a = vertex_of[static_cast<size_t>(fg.half_edges().index_of(pair[0]))];
        const int b = vertex_of[static_cast<size_t>(fg.half_edges().index_of(pair[1]))];
        out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    }
    out += "}\n";
    return out;
}

Fatgraph fatgraph_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    GroundSet ground(j.at("half_edges").get<std::vector<int>>());
    const auto cycles_field = [&](const char* key) {
        return Permutation::from_cycles(ground,
                                        j.at(key).get<std::vector<std::vector<int>>>());
    };
    Permutation alpha = cycles_field("alpha");
    Permutation beta = cycles_field("beta");
    Permutation gamma = cycles_field("gamma");
    return Fatgraph(std::move(alpha), std::move(beta), std::move(gamma));
}

}  // namespace revperm
