#pragma once
#include <cstdint>
#include <vector>

#include "ginitree/rng.hpp"
#include "ginitree/tree_state.hpp"

namespace ginitree {

template <class State>
struct PoissonRunResult {
    State state;
    double elapsed = 0.0;
    std::uint64_t event_count = 0;
    std::vector<double> event_times;  // filled only when requested
};

// Poissonized BST: starts from the size-1 root at time 0 and inserts at
// competing exponential clocks. The size process is a Yule process (event
// rate = current node count), so E[S(t)] = e^t; conditional on an event
// the insertion slot is uniform, the same transition as grow_bst.
PoissonRunResult<BinaryTreeState> grow_bst_poisson(double t, RandomSource& rng,
                                                   bool record_times = false);

// Poissonized binary pyramid: the matching two-color urn run in real
// time, one Exp(1) clock per insertion slot (event rate = slot count).
PoissonRunResult<BinaryTreeState> grow_pyramid_poisson(double t, RandomSource& rng,
                                                       bool record_times = false);

enum class CaterpillarPoissonMode { Direct, EventLoop };

// Poissonized uniform caterpillar: each spine node accrues attachments as
// an independent rate-1 Poisson process, so Y_i ~ Poi(t). Direct mode
// samples the s counts; event-loop mode runs the superposed rate-s clock.
// Both produce the same distribution.
PoissonRunResult<SpineState> grow_caterpillar_poisson(
    std::uint64_t s, double t, RandomSource& rng,
    CaterpillarPoissonMode mode = CaterpillarPoissonMode::Direct,
    bool record_times = false);

// Poissonized preferential-attachment caterpillar: spine node i carries a
// clock with rate equal to its attachment weight (X_i + 1 at the ends,
// X_i + 2 in the interior), so the total rate is sum X + 2s - 2 and the
// winner is weight-proportional.
PoissonRunResult<SpineState> grow_caterpillar_pa_poisson(
    std::uint64_t s, double t, RandomSource& rng, bool record_times = false);

}  // namespace ginitree
