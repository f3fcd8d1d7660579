#include "ginitree/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ginitree/gini.hpp"
#include "ginitree/growth_discrete.hpp"
#include "ginitree/tree_state.hpp"

namespace ginitree {

namespace {

void check_range(std::uint64_t n) {
    if (n < 1 || n > 8) throw std::invalid_argument("brute force supports 1 <= n <= 8");
}

// Exact Gini of a degree multiset as a rational: sum_abs / (n * degsum).
Rational exact_gini(const DegreeMultiset& m) {
    const std::uint64_t degsum = m.degree_sum();
    if (degsum == 0) throw std::domain_error("degree Gini undefined");
    return Rational(static_cast<std::int64_t>(sum_abs_pairwise_diffs(m)),
                    static_cast<std::int64_t>(m.order * degsum));
}

}  // namespace

Rational brute_force_bst(std::uint64_t n) {
    check_range(n);
    if (n == 1) throw std::domain_error("degree Gini undefined for order 1");
    std::vector<std::uint64_t> keys(n);
    std::iota(keys.begin(), keys.end(), std::uint64_t{1});
    Rational sum(0);
    std::int64_t count = 0;
    do {
        sum = sum + exact_gini(degree_multiset_from_binary(bst_from_permutation(keys)));
        ++count;
    } while (std::next_permutation(keys.begin(), keys.end()));
    return sum * Rational(1, count);
}

namespace {

// Weighted recursion over pyramid recruitment histories. outdeg[i] is the
// outdegree of the i-th node (index 0 = founder/root).
void pyramid_dfs(std::vector<int>& outdeg, std::uint64_t n, const Rational& prob,
                 std::vector<std::uint64_t>& parents,
                 const std::function<void(const std::vector<int>&,
                                          const std::vector<std::uint64_t>&,
                                          const Rational&)>& leaf) {
    if (outdeg.size() == n) {
        leaf(outdeg, parents, prob);
        return;
    }
    std::vector<std::size_t> unsat;
    for (std::size_t i = 0; i < outdeg.size(); ++i)
        if (outdeg[i] < 2) unsat.push_back(i);
    const Rational step = prob * Rational(1, static_cast<std::int64_t>(unsat.size()));
    for (std::size_t i : unsat) {
        outdeg[i] += 1;
        outdeg.push_back(0);
        parents.push_back(i + 1);  // 1-based
        pyramid_dfs(outdeg, n, step, parents, leaf);
        parents.pop_back();
        outdeg.pop_back();
        outdeg[i] -= 1;
    }
}

DegreeMultiset pyramid_degrees(const std::vector<int>& outdeg) {
    DegreeMultiset m;
    m.order = outdeg.size();
    for (std::size_t i = 0; i < outdeg.size(); ++i) {
        const std::uint64_t deg = outdeg[i] + (i == 0 ? 0 : 1);
        m.counts[deg] += 1;
    }
    return m;
}

}  // namespace

Rational brute_force_pyramid(std::uint64_t n) {
    check_range(n);
    if (n == 1) throw std::domain_error("degree Gini undefined for order 1");
    Rational sum(0);
    std::vector<int> outdeg{0};
    std::vector<std::uint64_t> parents;
    pyramid_dfs(outdeg, n, Rational(1), parents,
                [&](const std::vector<int>& od, const std::vector<std::uint64_t>&,
                    const Rational& p) { sum = sum + p * exact_gini(pyramid_degrees(od)); });
    return sum;
}

std::vector<PyramidShape> pyramid_shape_marginals(std::uint64_t n) {
    check_range(n);
    std::map<std::vector<std::uint64_t>, Rational> acc;
    std::vector<int> outdeg{0};
    std::vector<std::uint64_t> parents;
    pyramid_dfs(outdeg, n, Rational(1), parents,
                [&](const std::vector<int>&, const std::vector<std::uint64_t>& par,
                    const Rational& p) {
                    auto it = acc.find(par);
                    if (it == acc.end()) acc.emplace(par, p);
                    else it->second = it->second + p;
                });
    std::vector<PyramidShape> out;
    out.reserve(acc.size());
    for (auto& [key, p] : acc) out.push_back({key, p});
    return out;
}

namespace {

Rational caterpillar_expectation(std::uint64_t s, std::uint64_t n, bool preferential,
                                 const std::function<Rational(const SpineState&)>& payoff) {
    if (s == 0) throw std::invalid_argument("spine length must be >= 1");
    SpineState spine(s);
    Rational sum(0);
    std::function<void(std::uint64_t, const Rational&)> dfs =
        [&](std::uint64_t placed, const Rational& prob) {
            if (placed == n) {
                sum = sum + prob * payoff(spine);
                return;
            }
            if (!preferential) {
                const Rational step = prob * Rational(1, static_cast<std::int64_t>(s));
                for (std::uint64_t i = 0; i < s; ++i) {
                    spine.attachments[i] += 1;
                    dfs(placed + 1, step);
                    spine.attachments[i] -= 1;
                }
                return;
            }
            const std::int64_t total =
                (s == 1) ? static_cast<std::int64_t>(spine.attachments[0] + 1)
                         : static_cast<std::int64_t>(placed + 2 * s - 2);
            for (std::uint64_t i = 0; i < s; ++i) {
                const std::int64_t w = static_cast<std::int64_t>(
                    spine.attachments[i] + ((s == 1 || i == 0 || i == s - 1) ? 1 : 2));
                spine.attachments[i] += 1;
                dfs(placed + 1, prob * Rational(w, total));
                spine.attachments[i] -= 1;
            }
        };
    dfs(0, Rational(1));
    return sum;
}

}  // namespace

Rational brute_force_caterpillar(std::uint64_t s, std::uint64_t n,
                                 bool preferential) {
    if (s + n < 2) throw std::domain_error("degree Gini undefined for order 1");
    return caterpillar_expectation(s, n, preferential, [](const SpineState& sp) {
        return exact_gini(degree_multiset_from_spine(sp));
    });
}

Rational brute_force_caterpillar_wealth(std::uint64_t s, std::uint64_t n,
                                        bool preferential) {
    if (n == 0) throw std::domain_error("wealth Gini undefined without attachments");
    return caterpillar_expectation(s, n, preferential, [](const SpineState& sp) {
        if (sp.s == 1) return Rational(0);
        std::int64_t pairs = 0;
        for (std::uint64_t i = 0; i < sp.s; ++i)
            for (std::uint64_t j = 0; j < sp.s; ++j) {
                const std::int64_t d = static_cast<std::int64_t>(sp.attachments[i]) -
                                       static_cast<std::int64_t>(sp.attachments[j]);
                pairs += d < 0 ? -d : d;
            }
        return Rational(pairs, 2 * static_cast<std::int64_t>(sp.s) *
                                   static_cast<std::int64_t>(sp.total_attachments()));
    });
}

}  // namespace ginitree
