#pragma once
#include <cstdint>

#include "ginitree/rng.hpp"
#include "ginitree/tree_state.hpp"

namespace ginitree {

// Random binary search tree of n nodes, grown by uniform choice among
// insertion slots (the urn view). O(1) per insertion.
BinaryTreeState grow_bst(std::uint64_t n, RandomSource& rng);

// The same distribution, grown the classical way: a uniform random
// permutation of {1..n} inserted by key comparisons. Kept as a
// cross-model oracle; builds the full topology, O(n log n) expected.
BinaryTreeState grow_bst_via_permutation(std::uint64_t n, RandomSource& rng);

// Deterministic variant for a caller-supplied permutation (1-based keys).
BinaryTreeState bst_from_permutation(const std::vector<std::uint64_t>& keys);

// Binary pyramid of n nodes: each step recruits under a uniformly chosen
// unsaturated node.
BinaryTreeState grow_pyramid(std::uint64_t n, RandomSource& rng);

// Uniform caterpillar: n attachments placed on a spine of s nodes, each
// spine node equally likely; the attachment vector is Multinomial(n; 1/s).
SpineState grow_caterpillar_uniform(std::uint64_t s, std::uint64_t n,
                                    RandomSource& rng);

// Preferential-attachment caterpillar: spine node i is chosen with weight
// X_i + 1 at the ends and X_i + 2 in the interior. A length-1 spine uses
// the end-node rule (weight X_1 + 1); the growth is then deterministic.
SpineState grow_caterpillar_pa(std::uint64_t s, std::uint64_t n,
                               RandomSource& rng);

}  // namespace ginitree
