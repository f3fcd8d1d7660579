#include "ginitree/urn.hpp"

namespace ginitree {

namespace {

void apply_draw(const ReplacementMatrix& m, UrnCounts& c, std::uint64_t u) {
    const int row = (u < static_cast<std::uint64_t>(c.white)) ? 0 : 1;
    c.white += m.add[row][0];
    c.blue += m.add[row][1];
    if (c.white < 0 || c.blue < 0)
        throw std::runtime_error("urn tenability violated: negative ball count");
}

}  // namespace

std::vector<UrnCounts> run_urn_discrete(const ReplacementMatrix& m,
                                        UrnCounts initial, std::uint64_t draws,
                                        RandomSource& rng) {
    if (initial.white < 0 || initial.blue < 0 || initial.white + initial.blue == 0)
        throw std::invalid_argument("urn initial state must hold at least one ball");
    std::vector<UrnCounts> traj;
    traj.reserve(draws + 1);
    traj.push_back(initial);
    UrnCounts c = initial;
    for (std::uint64_t i = 0; i < draws; ++i) {
        const std::uint64_t total = static_cast<std::uint64_t>(c.white + c.blue);
        apply_draw(m, c, rng.uniform_below(total));
        traj.push_back(c);
    }
    return traj;
}

UrnPoissonRun run_urn_poisson(const ReplacementMatrix& m, UrnCounts initial,
                              double t, RandomSource& rng,
                              std::int64_t rate_offset) {
    if (t < 0.0) throw std::invalid_argument("t must be >= 0");
    if (initial.white < 0 || initial.blue < 0 || initial.white + initial.blue == 0)
        throw std::invalid_argument("urn initial state must hold at least one ball");
    UrnPoissonRun run;
    run.trajectory.push_back(initial);
    run.elapsed = t;
    UrnCounts c = initial;
    double clock = 0.0;
    for (;;) {
        const std::int64_t rate = c.white + c.blue + rate_offset;
        if (rate <= 0)
            throw std::runtime_error("urn event rate is not positive");
        clock += rng.exponential(static_cast<double>(rate));
        if (clock > t) break;  // the late arrival is discarded
        const std::uint64_t total = static_cast<std::uint64_t>(c.white + c.blue);
        apply_draw(m, c, rng.uniform_below(total));
        run.trajectory.push_back(c);
        run.event_times.push_back(clock);
    }
    return run;
}

}  // namespace ginitree
