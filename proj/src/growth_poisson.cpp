#include "ginitree/growth_poisson.hpp"

#include <stdexcept>

namespace ginitree {

namespace {

PoissonRunResult<BinaryTreeState> run_binary_poisson(BinaryModel model, double t,
                                                     RandomSource& rng,
                                                     std::int64_t rate_offset,
                                                     bool record_times) {
    if (t < 0.0) throw std::invalid_argument("t must be >= 0");
    PoissonRunResult<BinaryTreeState> res;
    res.state = BinaryTreeState::root(model);
    res.elapsed = t;
    double clock = 0.0;
    for (;;) {
        const double rate = static_cast<double>(
            static_cast<std::int64_t>(res.state.total_slots()) + rate_offset);
        clock += rng.exponential(rate);
        if (clock > t) break;  // late arrival discarded
        res.state.apply_insertion(model,
                                  rng.uniform_below(res.state.total_slots()));
        res.event_count += 1;
        if (record_times) res.event_times.push_back(clock);
    }
    return res;
}

}  // namespace

PoissonRunResult<BinaryTreeState> grow_bst_poisson(double t, RandomSource& rng,
                                                   bool record_times) {
    // slot count = size + 1 in a BST, so offset -1 gives the Yule rate
    return run_binary_poisson(BinaryModel::Bst, t, rng, -1, record_times);
}

PoissonRunResult<BinaryTreeState> grow_pyramid_poisson(double t, RandomSource& rng,
                                                       bool record_times) {
    return run_binary_poisson(BinaryModel::Pyramid, t, rng, 0, record_times);
}

PoissonRunResult<SpineState> grow_caterpillar_poisson(std::uint64_t s, double t,
                                                      RandomSource& rng,
                                                      CaterpillarPoissonMode mode,
                                                      bool record_times) {
    if (s == 0) throw std::invalid_argument("spine length must be >= 1");
    if (t < 0.0) throw std::invalid_argument("t must be >= 0");
    PoissonRunResult<SpineState> res;
    res.state = SpineState(s);
    res.elapsed = t;
    if (mode == CaterpillarPoissonMode::Direct && !record_times) {
        for (std::uint64_t i = 0; i < s; ++i) {
            const std::uint64_t y = rng.poisson(t);
            res.state.attachments[i] = y;
            res.event_count += y;
        }
        return res;
    }
    double clock = 0.0;
    const double rate = static_cast<double>(s);
    for (;;) {
        clock += rng.exponential(rate);
        if (clock > t) break;
        res.state.attachments[rng.uniform_below(s)] += 1;
        res.event_count += 1;
        if (record_times) res.event_times.push_back(clock);
    }
    return res;
}

PoissonRunResult<SpineState> grow_caterpillar_pa_poisson(std::uint64_t s, double t,
                                                         RandomSource& rng,
                                                         bool record_times) {
    if (s < 2) throw std::invalid_argument("spine length must be >= 2");
    if (t < 0.0) throw std::invalid_argument("t must be >= 0");
    PoissonRunResult<SpineState> res;
    res.state = SpineState(s);
    res.elapsed = t;
    std::uint64_t total_weight = 2 * s - 2;
    double clock = 0.0;
    for (;;) {
        clock += rng.exponential(static_cast<double>(total_weight));
        if (clock > t) break;
        std::uint64_t u = rng.uniform_below(total_weight);
        std::uint64_t i = 0;
        for (;; ++i) {
            const std::uint64_t w =
                res.state.attachments[i] + ((i == 0 || i == s - 1) ? 1 : 2);
            if (u < w) break;
            u -= w;
        }
        res.state.attachments[i] += 1;
        total_weight += 1;
        res.event_count += 1;
        if (record_times) res.event_times.push_back(clock);
    }
    return res;
}

}  // namespace ginitree
