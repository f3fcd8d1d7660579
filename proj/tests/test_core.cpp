#include <doctest.h>

#include <map>
#include <vector>

#include "ginitree/gini.hpp"
#include "ginitree/growth_discrete.hpp"
#include "ginitree/rng.hpp"
#include "ginitree/tree_state.hpp"

using namespace ginitree;

namespace {

// Independent oracle: build the caterpillar as an explicit adjacency list
// and count degrees from it.
std::map<std::uint64_t, std::uint64_t> spine_degrees_by_adjacency(
    const SpineState& st) {
    const std::uint64_t total = st.s + st.total_attachments();
    std::vector<std::uint64_t> degree(total, 0);
    auto add_edge = [&](std::uint64_t a, std::uint64_t b) {
        degree[a]++;
        degree[b]++;
    };
    for (std::uint64_t i = 0; i + 1 < st.s; ++i) add_edge(i, i + 1);
    std::uint64_t next = st.s;
    for (std::uint64_t i = 0; i < st.s; ++i)
        for (std::uint64_t k = 0; k < st.attachments[i]; ++k) add_edge(i, next++);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t d : degree) counts[d]++;
    return counts;
}

std::uint64_t handshake_sum(const DegreeMultiset& m) {
    std::uint64_t s = 0;
    for (const auto& [d, c] : m.counts) s += d * c;
    return s;
}

}  // namespace

TEST_CASE("degree multiset from binary state") {
    BinaryTreeState st;
    st.n1 = 2;
    st.n2 = 1;
    st.size = 3;
    auto m = degree_multiset_from_binary(st);
    CHECK(m.order == 3);
    CHECK(m.counts == std::map<std::uint64_t, std::uint64_t>{{1, 2}, {2, 1}});

    st = BinaryTreeState{};
    st.n1 = 3;
    st.n3 = 1;
    st.size = 4;
    m = degree_multiset_from_binary(st);
    CHECK(m.order == 4);
    CHECK(m.counts == std::map<std::uint64_t, std::uint64_t>{{1, 3}, {3, 1}});

    st = BinaryTreeState{};
    st.size = 1;
    m = degree_multiset_from_binary(st);
    CHECK(m.order == 1);
    CHECK(m.counts == std::map<std::uint64_t, std::uint64_t>{{0, 1}});
}

TEST_CASE("degree multiset from spine") {
    SpineState st(2);
    auto m = degree_multiset_from_spine(st);
    CHECK(m.order == 2);
    CHECK(m.counts == std::map<std::uint64_t, std::uint64_t>{{1, 2}});

    st = SpineState(3);
    st.attachments = {1, 0, 2};
    m = degree_multiset_from_spine(st);
    CHECK(m.order == 6);
    // frozen from the adjacency oracle: ends have degrees 2 and 3, the
    // interior node 2, plus three attachments of degree 1
    CHECK(m.counts ==
          std::map<std::uint64_t, std::uint64_t>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(m.counts == spine_degrees_by_adjacency(st));

    st = SpineState(1);
    st.attachments = {4};
    m = degree_multiset_from_spine(st);
    CHECK(m.order == 5);
    CHECK(m.counts == std::map<std::uint64_t, std::uint64_t>{{1, 4}, {4, 1}});

    CHECK_THROWS_AS(SpineState(0), std::invalid_argument);
}

TEST_CASE("spine multiset matches adjacency oracle exhaustively") {
    // all spines with s <= 5 and per-node attachments <= 3, total <= 8
    for (std::uint64_t s = 1; s <= 5; ++s) {
        std::vector<std::uint64_t> x(s, 0);
        for (;;) {
            SpineState st(s);
            st.attachments = x;
            if (st.total_attachments() <= 8) {
                auto m = degree_multiset_from_spine(st);
                CHECK(m.counts == spine_degrees_by_adjacency(st));
                CHECK(m.order == s + st.total_attachments());
                if (m.order >= 2) CHECK(handshake_sum(m) == 2 * (m.order - 1));
            }
            std::uint64_t i = 0;
            while (i < s && x[i] == 3) x[i++] = 0;
            if (i == s) break;
            x[i] += 1;
        }
    }
}

TEST_CASE("handshake identity on random grown states") {
    RandomSource rng(99, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::uint64_t n = 1 + rng.uniform_below(200);
        auto check = [&](const DegreeMultiset& m) {
            if (m.order >= 1) CHECK(handshake_sum(m) == 2 * (m.order - 1));
        };
        check(degree_multiset_from_binary(grow_bst(n, rng)));
        check(degree_multiset_from_binary(grow_pyramid(n, rng)));
        check(degree_multiset_from_spine(
            grow_caterpillar_uniform(1 + rng.uniform_below(8), n, rng)));
        check(degree_multiset_from_spine(
            grow_caterpillar_pa(2 + rng.uniform_below(8), n, rng)));
    }
}

TEST_CASE("random source reproducibility and stream separation") {
    RandomSource a(1234, 7), b(1234, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());

    // distinct streams differ immediately
    RandomSource c(1234, 8);
    int same = 0;
    RandomSource a2(1234, 7);
    for (int i = 0; i < 64; ++i) same += (a2.next() == c.next());
    CHECK(same == 0);

    // doubles land in [0,1)
    RandomSource d(5, 0);
    for (int i = 0; i < 1000; ++i) {
        const double u = d.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }

    // uniform_below stays in range and hits all residues
    RandomSource e(6, 0);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 1000; ++i) seen[e.uniform_below(7)]++;
    for (int v : seen) CHECK(v > 0);
}

TEST_CASE("binary state insertion bookkeeping") {
    auto st = BinaryTreeState::root(BinaryModel::Bst);
    CHECK(st.size == 1);
    CHECK(st.white_slots == 2);
    CHECK(st.blue_slots == 0);

    st.apply_insertion(BinaryModel::Bst, 0);
    CHECK(st.size == 2);
    CHECK(st.n1 == 2);
    CHECK(st.white_slots == 2);
    CHECK(st.blue_slots == 1);
    CHECK(st.root_outdegree == 1);

    // slot law: white + blue = size + 1 for BSTs
    RandomSource rng(42, 0);
    for (int rep = 0; rep < 50; ++rep) {
        const std::uint64_t n = 2 + rng.uniform_below(100);
        auto s = grow_bst(n, rng);
        CHECK(s.white_slots + s.blue_slots == n + 1);
        CHECK(s.n1 + s.n2 + s.n3 == n);
        // pyramid slot count = unsaturated node count
        auto p = grow_pyramid(n, rng);
        CHECK(p.white_slots + p.blue_slots == p.leaf_nodes + p.one_child_nodes);
        CHECK(p.white_slots + p.blue_slots == n - p.saturated_nodes);
    }
}
