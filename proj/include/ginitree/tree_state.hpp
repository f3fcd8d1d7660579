#pragma once
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ginitree {

// Degree histogram of a tree: the only structural information the Gini
// formulas consume.
struct DegreeMultiset {
    std::map<std::uint64_t, std::uint64_t> counts;  // degree -> node count
    std::uint64_t order = 0;

    std::uint64_t degree_sum() const {
        std::uint64_t s = 0;
        for (const auto& [deg, cnt] : counts) s += deg * cnt;
        return s;
    }
};

// Slot multiplicity rule: a BST's unsaturated leaf holds two insertion
// positions, a pyramid's holds one.
enum class BinaryModel { Bst, Pyramid };

// Extended binary tree reduced to degree-class counts plus insertion-slot
// counts. n1/n2/n3 are graph (undirected) degrees with the root included;
// the lone root of a size-1 tree has degree 0 and is not counted in any
// of them.
struct BinaryTreeState {
    std::uint64_t n1 = 0, n2 = 0, n3 = 0;
    std::uint64_t white_slots = 0;
    std::uint64_t blue_slots = 0;
    std::uint64_t size = 0;
    int root_outdegree = 0;
    // outdegree-class counts (root included)
    std::uint64_t leaf_nodes = 0;
    std::uint64_t one_child_nodes = 0;
    std::uint64_t saturated_nodes = 0;

    static BinaryTreeState root(BinaryModel model) {
        BinaryTreeState s;
        s.size = 1;
        s.leaf_nodes = 1;
        s.white_slots = (model == BinaryModel::Bst) ? 2 : 1;
        s.blue_slots = 0;
        s.root_outdegree = 0;
        return s;
    }

    std::uint64_t total_slots() const { return white_slots + blue_slots; }

    // Applies one insertion, given a uniform slot index in
    // [0, white_slots + blue_slots). White slots come first; among blue
    // slots the root's (when the root has outdegree 1) is index 0, so a
    // single uniform draw resolves both the urn color and the root
    // anomaly. This keeps the tree grower and the two-color urn on the
    // same draw sequence.
    void apply_insertion(BinaryModel model, std::uint64_t slot_index) {
        if (slot_index >= total_slots()) throw std::out_of_range("slot index");
        if (slot_index < white_slots) {
            // a leaf gains its first child
            if (root_outdegree == 0) {  // only possible at size 1
                root_outdegree = 1;
                n1 += 1;  // root: degree 0 -> 1
            } else {
                n1 -= 1;
                n2 += 1;  // non-root leaf: degree 1 -> 2
            }
            one_child_nodes += 1;  // leaf_nodes: -1 parent, +1 new leaf
            blue_slots += 1;       // white slots: net zero in both models
        } else {
            std::uint64_t j = slot_index - white_slots;
            if (root_outdegree == 1 && j == 0) {
                root_outdegree = 2;
                n1 -= 1;
                n2 += 1;  // root: degree 1 -> 2
            } else {
                n2 -= 1;
                n3 += 1;  // non-root one-child node: degree 2 -> 3
            }
            one_child_nodes -= 1;
            saturated_nodes += 1;
            leaf_nodes += 1;
            blue_slots -= 1;
            white_slots += (model == BinaryModel::Bst) ? 2 : 1;
        }
        n1 += 1;  // the new node is a leaf of degree 1
        size += 1;
    }
};

// Caterpillar: fixed spine of s nodes, attachments[i] leaves hanging off
// spine node i.
struct SpineState {
    std::uint64_t s = 0;
    std::vector<std::uint64_t> attachments;

    explicit SpineState(std::uint64_t spine_len = 1)
        : s(spine_len), attachments(spine_len, 0) {
        if (spine_len == 0) throw std::invalid_argument("spine length must be >= 1");
    }

    std::uint64_t total_attachments() const {
        return std::accumulate(attachments.begin(), attachments.end(),
                               std::uint64_t{0});
    }
};

inline DegreeMultiset degree_multiset_from_binary(const BinaryTreeState& st) {
    DegreeMultiset m;
    m.order = st.size;
    if (st.size == 1) {
        m.counts[0] = 1;
        return m;
    }
    if (st.n1) m.counts[1] = st.n1;
    if (st.n2) m.counts[2] = st.n2;
    if (st.n3) m.counts[3] = st.n3;
    return m;
}

// Spine node degrees: ends have X+1 neighbors, interior nodes X+2; every
// attachment has degree 1. A length-1 spine degenerates to a star whose
// center has degree X_1.
inline DegreeMultiset degree_multiset_from_spine(const SpineState& st) {
    if (st.s == 0) throw std::invalid_argument("spine length must be >= 1");
    DegreeMultiset m;
    const auto& x = st.attachments;
    if (st.s == 1) {
        m.counts[x[0]] += 1;
    } else {
        m.counts[x[0] + 1] += 1;
        m.counts[x[st.s - 1] + 1] += 1;
        for (std::uint64_t i = 1; i + 1 < st.s; ++i) m.counts[x[i] + 2] += 1;
    }
    std::uint64_t total = st.total_attachments();
    if (total) m.counts[1] += total;
    m.order = st.s + total;
    return m;
}

}  // namespace ginitree
