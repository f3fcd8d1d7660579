#include "ginitree/growth_discrete.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ginitree {

BinaryTreeState grow_bst(std::uint64_t n, RandomSource& rng) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    BinaryTreeState st = BinaryTreeState::root(BinaryModel::Bst);
    for (std::uint64_t i = 1; i < n; ++i)
        st.apply_insertion(BinaryModel::Bst, rng.uniform_below(st.total_slots()));
    return st;
}

BinaryTreeState bst_from_permutation(const std::vector<std::uint64_t>& keys) {
    if (keys.empty()) throw std::invalid_argument("n must be >= 1");
    struct Node {
        std::uint64_t key;
        std::int64_t left = -1, right = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(keys.size());
    nodes.push_back({keys[0]});
    for (std::size_t i = 1; i < keys.size(); ++i) {
        std::int64_t cur = 0;
        for (;;) {
            auto& nd = nodes[cur];
            std::int64_t& child = (keys[i] < nd.key) ? nd.left : nd.right;
            if (child < 0) {
                child = static_cast<std::int64_t>(nodes.size());
                nodes.push_back({keys[i]});
                break;
            }
            cur = child;
        }
    }
    BinaryTreeState st;
    st.size = nodes.size();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const int outdeg = (nodes[i].left >= 0) + (nodes[i].right >= 0);
        if (i == 0) st.root_outdegree = outdeg;
        if (outdeg == 0) st.leaf_nodes++;
        else if (outdeg == 1) st.one_child_nodes++;
        else st.saturated_nodes++;
        const int degree = outdeg + (i == 0 ? 0 : 1);
        if (degree == 1) st.n1++;
        else if (degree == 2) st.n2++;
        else if (degree == 3) st.n3++;
    }
    st.white_slots = 2 * st.leaf_nodes;
    st.blue_slots = st.one_child_nodes;
    return st;
}

BinaryTreeState grow_bst_via_permutation(std::uint64_t n, RandomSource& rng) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    std::vector<std::uint64_t> keys(n);
    std::iota(keys.begin(), keys.end(), std::uint64_t{1});
    // Fisher-Yates with the deterministic source
    for (std::uint64_t i = n - 1; i > 0; --i)
        std::swap(keys[i], keys[rng.uniform_below(i + 1)]);
    return bst_from_permutation(keys);
}

BinaryTreeState grow_pyramid(std::uint64_t n, RandomSource& rng) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    BinaryTreeState st = BinaryTreeState::root(BinaryModel::Pyramid);
    for (std::uint64_t i = 1; i < n; ++i)
        st.apply_insertion(BinaryModel::Pyramid, rng.uniform_below(st.total_slots()));
    return st;
}

SpineState grow_caterpillar_uniform(std::uint64_t s, std::uint64_t n,
                                    RandomSource& rng) {
    if (s == 0) throw std::invalid_argument("spine length must be >= 1");
    SpineState st(s);
    for (std::uint64_t i = 0; i < n; ++i)
        st.attachments[rng.uniform_below(s)] += 1;
    return st;
}

SpineState grow_caterpillar_pa(std::uint64_t s, std::uint64_t n,
                               RandomSource& rng) {
    if (s == 0) throw std::invalid_argument("spine length must be >= 1");
    SpineState st(s);
    if (s == 1) {  // the only node always wins
        st.attachments[0] = n;
        return st;
    }
    // integer weights: X_i + 1 at the ends, X_i + 2 in the interior
    std::uint64_t total_weight = 2 * s - 2;
    for (std::uint64_t ev = 0; ev < n; ++ev) {
        std::uint64_t u = rng.uniform_below(total_weight);
        std::uint64_t i = 0;
        for (;; ++i) {
            const std::uint64_t w =
                st.attachments[i] + ((i == 0 || i == s - 1) ? 1 : 2);
            if (u < w) break;
            u -= w;
        }
        st.attachments[i] += 1;
        total_weight += 1;
    }
    return st;
}

}  // namespace ginitree
