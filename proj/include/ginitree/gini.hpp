#pragma once
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ginitree/tree_state.hpp"

namespace ginitree {

// Sum over all unordered node pairs of |deg_i - deg_j|, computed over the
// degree histogram via the sorted-prefix identity:
//   sum_{i<j} c_i c_j (d_j - d_i) = sum_j c_j (d_j * C_{<j} - S_{<j})
// with C, S the running count and degree-weighted count. Exact integer
// arithmetic; O(k) over the k distinct degrees (the map is already
// sorted).
inline std::uint64_t sum_abs_pairwise_diffs(const DegreeMultiset& degrees) {
    if (degrees.order == 0) throw std::invalid_argument("empty degree multiset");
    std::uint64_t total = 0;
    std::uint64_t cum_count = 0;
    std::uint64_t cum_degsum = 0;
    for (const auto& [deg, cnt] : degrees.counts) {
        total += cnt * (deg * cum_count - cum_degsum);
        cum_count += cnt;
        cum_degsum += deg * cnt;
    }
    return total;
}

// Topological degree Gini index:
//   G = sum |D_j - D_i| / (n^2 * mean degree) = sum |D_j - D_i| / (n * degsum).
// Undefined when the total degree is zero (an isolated node).
inline double degree_gini(const DegreeMultiset& degrees) {
    if (degrees.order == 0) throw std::invalid_argument("empty degree multiset");
    const std::uint64_t degsum = degrees.degree_sum();
    if (degsum == 0)
        throw std::domain_error("degree Gini undefined: total degree is zero");
    return static_cast<double>(sum_abs_pairwise_diffs(degrees)) /
           (static_cast<double>(degrees.order) * static_cast<double>(degsum));
}

// Closed form for a binary tree with n1/n2/n3 nodes of degree 1/2/3:
//   (n1 n2 + n2 n3 + 2 n1 n3) / (n (n1 + 2 n2 + 3 n3)).
inline double binary_gini(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
    const std::uint64_t n = n1 + n2 + n3;
    const std::uint64_t degsum = n1 + 2 * n2 + 3 * n3;
    if (degsum == 0)
        throw std::domain_error("degree Gini undefined: total degree is zero");
    return static_cast<double>(n1 * n2 + n2 * n3 + 2 * n1 * n3) /
           (static_cast<double>(n) * static_cast<double>(degsum));
}

// One replicate's contribution to the class-relative estimator.
struct GiniSample {
    double abs_diff_sum = 0.0;
    std::uint64_t order = 0;
    std::uint64_t degree_sum = 0;
};

// Plug-in class-relative Gini: per-graph pairwise-difference sums
// normalized by class-level means,
//   mean(abs_diff_sum) / (mean(order)^2 * mean(degree_sum / order)).
// With a single sample of deterministic order this reduces to the
// topological index.
inline double class_gini_estimate(const std::vector<GiniSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    double num = 0.0, mean_order = 0.0, mean_degree = 0.0;
    for (const auto& s : samples) {
        if (s.order == 0) throw std::invalid_argument("sample with order 0");
        num += s.abs_diff_sum;
        mean_order += static_cast<double>(s.order);
        mean_degree += static_cast<double>(s.degree_sum) / static_cast<double>(s.order);
    }
    const double r = static_cast<double>(samples.size());
    num /= r;
    mean_order /= r;
    mean_degree /= r;
    if (mean_degree == 0.0)
        throw std::domain_error("class Gini undefined: all degree sums are zero");
    return num / (mean_order * mean_order * mean_degree);
}

// Wealth Gini over spine nodes, plug-in per realization:
//   sum_{i,j} |W_i - W_j| / (2 s n),  n = total attachments.
inline double wealth_gini(const SpineState& spine) {
    const std::uint64_t n = spine.total_attachments();
    if (n == 0) throw std::domain_error("wealth Gini undefined: no attachments");
    if (spine.s == 1) return 0.0;
    // ordered pairs = 2 * unordered pairs; reuse the prefix identity
    DegreeMultiset wealth;
    for (std::uint64_t w : spine.attachments) wealth.counts[w] += 1;
    wealth.order = spine.s;
    const std::uint64_t unordered = sum_abs_pairwise_diffs(wealth);
    return static_cast<double>(2 * unordered) /
           (2.0 * static_cast<double>(spine.s) * static_cast<double>(n));
}

// Limiting proportions of degree-1/2/3 nodes.
struct LimitProfile {
    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
};

// Limiting class Gini implied by a degree-proportion triple:
//   (p1 p2 + p2 p3 + 2 p1 p3) / (p1 + 2 p2 + 3 p3).
inline double limit_gini(const LimitProfile& p) {
    return (p.p1 * p.p2 + p.p2 * p.p3 + 2.0 * p.p1 * p.p3) /
           (p.p1 + 2.0 * p.p2 + 3.0 * p.p3);
}

}  // namespace ginitree
