#include "revperm/oracle.hpp"

#include <chrono>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "revperm/bounds.hpp"
#include "revperm/plane_permutation.hpp"

namespace revperm {

namespace {

// One state per machine word: 4 bits per position, (magnitude-1) << 1 | sign.
// Covers n <= 8; the default cap of 7 keeps a worst-case search under a
// second (645k states).
constexpr int kPackLimit = 8;

std::uint32_t pack(const std::vector<int>& entries) {
    std::uint32_t code = 0;
    for (size_t k = 0; k < entries.size(); ++k) {
        const int v = entries[k];
        const std::uint32_t mag = static_cast<std::uint32_t>(v < 0 ? -v : v) - 1;
        const std::uint32_t sign = v < 0 ? 1u : 0u;
        code |= ((mag << 1) | sign) << (4 * k);
    }
    return code;
}

std::uint32_t packed_identity(int n) {
    std::uint32_t code = 0;
    for (int k = 0; k < n; ++k)
        code |= (static_cast<std::uint32_t>(k) << 1) << (4 * k);
    return code;
}

void unpack(std::uint32_t code, int n, int* out) {
    for (int k = 0; k < n; ++k) {
        const std::uint32_t nib = (code >> (4 * k)) & 0xFu;
        const int mag = static_cast<int>(nib >> 1) + 1;
        out[k] = (nib & 1u) ? -mag : mag;
    }
}

std::uint32_t packed_reverse(std::uint32_t code, int n, int i, int j) {
    int buf[kPackLimit];
    unpack(code, n, buf);
    for (int lo = i - 1, hi = j - 1; lo <= hi; ++lo, --hi) {
        const int a = buf[lo], b = buf[hi];
        buf[lo] = -b;
        buf[hi] = -a;
    }
    std::uint32_t out = 0;
    for (int k = 0; k < n; ++k) {
        const int v = buf[k];
        const std::uint32_t mag = static_cast<std::uint32_t>(v < 0 ? -v : v) - 1;
        const std::uint32_t sign = v < 0 ? 1u : 0u;
        out |= ((mag << 1) | sign) << (4 * k);
    }
    return out;
}

void check_cap(int n, int max_n) {
    if (max_n > kPackLimit) max_n = kPackLimit;
    if (n > max_n)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " exceeds the search cap of " + std::to_string(max_n));
}

// Distance of every state from the identity. Reversals are involutions, so
// the state graph is undirected and these equal distances to the identity.
std::unordered_map<std::uint32_t, int> distances_from_identity(int n) {
    std::unordered_map<std::uint32_t, int> dist;
    const std::uint32_t start = packed_identity(n);
    dist.reserve(1u << (2 * n));
    dist[start] = 0;
    std::deque<std::uint32_t> queue{start};
    while (!queue.empty()) {
        const std::uint32_t cur = queue.front();
        queue.pop_front();
        const int d = dist[cur];
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const std::uint32_t nxt = packed_reverse(cur, n, i, j);
                if (dist.emplace(nxt, d + 1).second) queue.push_back(nxt);
            }
    }
    return dist;
}

SurveyReport finish_report(SurveyReport r,
                           std::chrono::steady_clock::time_point t0) {
    std::uint64_t sum = 0;
    for (const auto& [gap, count] : r.histogram) {
        if (gap < 0) throw std::logic_error("survey: negative gap (bound above exact)");
        sum += count;
    }
    if (sum != r.total) throw std::logic_error("survey: histogram does not sum to total");
    r.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

}  // namespace

int exact_distance(const SignedPermutation& a, int max_n) {
    const int n = a.size();
    check_cap(n, max_n);
    if (a.is_identity()) return 0;

    const std::uint32_t start = pack(a.entries());
    const std::uint32_t target = packed_identity(n);
    std::unordered_set<std::uint32_t> seen{start};
    std::deque<std::pair<std::uint32_t, int>> queue{{start, 0}};
    while (!queue.empty()) {
        const auto [cur, d] = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const std::uint32_t nxt = packed_reverse(cur, n, i, j);
                if (nxt == target) return d + 1;
                if (seen.insert(nxt).second) queue.emplace_back(nxt, d + 1);
            }
    }
    throw std::logic_error("exact_distance: identity unreachable");
}

bool validate(const SortCertificate& cert) {
    SignedPermutation cur = cert.start;
    for (const ReversalStep& step : cert.steps) {
        if (step.j > cur.size()) return false;
        cur = reverse(cur, step);
    }
    return cur.is_identity();
}

SortCertificate greedy_sort(const SignedPermutation& a) {
    const int n = a.size();
    SortCertificate cert{a, {}};
    SignedPermutation cur = a;
    const int step_budget = 4 * n;
    while (!cur.is_identity()) {
        if (static_cast<int>(cert.steps.size()) >= step_budget)
            throw std::runtime_error("greedy_sort: no certificate within " +
                                     std::to_string(step_budget) + " steps");
        const SkewSymmetricInstance inst = skew_symmetric(cur);
        ReversalStep step(1, 1);
        if (auto two = find_2_reversal(inst)) {
            step = *two;
        } else {
            const int base = inst.pi().cycle_count();
            int best_delta = 0;
            bool have = false;
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    const int delta =
                        apply_reversal(inst, i, j).pi().cycle_count() - base;
                    if (!have || delta > best_delta) {
                        have = true;
                        best_delta = delta;
                        step = ReversalStep(i, j);
                    }
                }
        }
        cur = reverse(cur, step);
        cert.steps.push_back(step);
    }
    return cert;
}

std::string SurveyReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["total"] = total;
    j["tight"] = tight;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [gap, count] : histogram) hist[std::to_string(gap)] = count;
    j["histogram"] = hist;
    j["runtime_ms"] = runtime_ms;
    return j.dump();
}

std::string SurveyReport::to_csv() const {
    std::string out = "gap,count\n";
    for (const auto& [gap, count] : histogram)
        out += std::to_string(gap) + "," + std::to_string(count) + "\n";
    return out;
}

SurveyReport survey_exhaustive(int n, int max_n) {
    if (n > 6) throw std::invalid_argument("exhaustive survey capped at n = 6");
    check_cap(n, max_n);
    const auto t0 = std::chrono::steady_clock::now();
    const auto dist = distances_from_identity(n);

    SurveyReport r;
    r.n = n;
    enumerate_all(n, [&](const SignedPermutation& a) {
        const int gap = dist.at(pack(a.entries())) - bound_plane(a);
        ++r.total;
        ++r.histogram[gap];
        if (gap == 0) ++r.tight;
    });
    return finish_report(std::move(r), t0);
}

SurveyReport survey_sampled(int n, std::uint64_t count, std::uint64_t seed, int max_n) {
    check_cap(n, max_n);
    const auto t0 = std::chrono::steady_clock::now();
    const auto dist = distances_from_identity(n);

    SurveyReport r;
    r.n = n;
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < count; ++k) {
        const SignedPermutation a = draw_random(n, rng);
        const int gap = dist.at(pack(a.entries())) - bound_plane(a);
        ++r.total;
        ++r.histogram[gap];
        if (gap == 0) ++r.tight;
    }
    return finish_report(std::move(r), t0);
}

}  // namespace revperm
