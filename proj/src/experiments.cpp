#include "ginitree/experiments.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ginitree/growth_discrete.hpp"
#include "ginitree/stats.hpp"
#include "ginitree/urn.hpp"

namespace ginitree {

std::string to_string(TreeClass c) {
    switch (c) {
        case TreeClass::Bst: return "bst";
        case TreeClass::Pyramid: return "pyramid";
        case TreeClass::CaterpillarUniform: return "caterpillar-uniform";
        case TreeClass::CaterpillarPa: return "caterpillar-pa";
    }
    throw std::logic_error("unknown class");
}

std::string to_string(Regime r) {
    return r == Regime::Discrete ? "discrete" : "poisson";
}

std::string to_string(GiniVariant v) {
    switch (v) {
        case GiniVariant::Topological: return "topological";
        case GiniVariant::Class: return "class";
        case GiniVariant::Wealth: return "wealth";
    }
    throw std::logic_error("unknown variant");
}

TreeClass tree_class_from_string(const std::string& s) {
    if (s == "bst") return TreeClass::Bst;
    if (s == "pyramid") return TreeClass::Pyramid;
    if (s == "caterpillar-uniform") return TreeClass::CaterpillarUniform;
    if (s == "caterpillar-pa") return TreeClass::CaterpillarPa;
    throw std::invalid_argument("unknown class: " + s);
}

Regime regime_from_string(const std::string& s) {
    if (s == "discrete") return Regime::Discrete;
    if (s == "poisson") return Regime::Poisson;
    throw std::invalid_argument("unknown regime: " + s);
}

GiniVariant gini_variant_from_string(const std::string& s) {
    if (s == "topological") return GiniVariant::Topological;
    if (s == "class") return GiniVariant::Class;
    if (s == "wealth") return GiniVariant::Wealth;
    throw std::invalid_argument("unknown variant: " + s);
}

double analytical_limit(TreeClass c, GiniVariant v) {
    if (v == GiniVariant::Wealth) {
        if (!is_caterpillar(c))
            throw std::invalid_argument("wealth variant applies to caterpillars only");
        return 0.0;
    }
    switch (c) {
        case TreeClass::Bst:
            return limit_gini(predict_proportions(
                UrnModel::Bst, principal_eigenpair(ReplacementMatrix::bst())));
        case TreeClass::Pyramid:
            return limit_gini(predict_proportions(
                UrnModel::Pyramid, principal_eigenpair(ReplacementMatrix::pyramid())));
        case TreeClass::CaterpillarUniform:
        case TreeClass::CaterpillarPa:
            return 0.5;
    }
    throw std::logic_error("unknown class");
}

namespace {

struct Replicate {
    GiniSample sample;
    double gini = 0.0;
    double wealth = 0.0;
    std::uint64_t order = 0;
};

Replicate run_one(const MonteCarloConfig& cfg, std::uint64_t replicate_index) {
    RandomSource rng(cfg.seed, cfg.stream_offset + replicate_index);
    Replicate rep;
    DegreeMultiset degrees;
    SpineState spine(1);
    bool have_spine = false;
    switch (cfg.klass) {
        case TreeClass::Bst:
            degrees = degree_multiset_from_binary(
                cfg.regime == Regime::Discrete
                    ? grow_bst(static_cast<std::uint64_t>(cfg.parameter), rng)
                    : grow_bst_poisson(cfg.parameter, rng).state);
            break;
        case TreeClass::Pyramid:
            degrees = degree_multiset_from_binary(
                cfg.regime == Regime::Discrete
                    ? grow_pyramid(static_cast<std::uint64_t>(cfg.parameter), rng)
                    : grow_pyramid_poisson(cfg.parameter, rng).state);
            break;
        case TreeClass::CaterpillarUniform:
            spine = cfg.regime == Regime::Discrete
                        ? grow_caterpillar_uniform(
                              cfg.spine, static_cast<std::uint64_t>(cfg.parameter), rng)
                        : grow_caterpillar_poisson(cfg.spine, cfg.parameter, rng,
                                                   cfg.mode)
                              .state;
            have_spine = true;
            break;
        case TreeClass::CaterpillarPa:
            spine = cfg.regime == Regime::Discrete
                        ? grow_caterpillar_pa(
                              cfg.spine, static_cast<std::uint64_t>(cfg.parameter), rng)
                        : grow_caterpillar_pa_poisson(cfg.spine, cfg.parameter, rng)
                              .state;
            have_spine = true;
            break;
    }
    if (have_spine) degrees = degree_multiset_from_spine(spine);
    rep.order = degrees.order;
    rep.sample = {static_cast<double>(sum_abs_pairwise_diffs(degrees)),
                  degrees.order, degrees.degree_sum()};
    if (cfg.variant == GiniVariant::Wealth) {
        if (!have_spine)
            throw std::invalid_argument("wealth variant applies to caterpillars only");
        rep.wealth = wealth_gini(spine);
    } else {
        rep.gini = degree_gini(degrees);
    }
    return rep;
}

// Bootstrap standard error of the ratio-form class estimator, 1000
// resamples on a dedicated stream.
double bootstrap_se(const std::vector<GiniSample>& samples, std::uint64_t seed) {
    constexpr int kResamples = 1000;
    RandomSource rng(seed, 1ull << 48);
    const std::size_t r = samples.size();
    std::vector<double> estimates;
    estimates.reserve(kResamples);
    std::vector<GiniSample> resampled(r);
    for (int b = 0; b < kResamples; ++b) {
        for (std::size_t i = 0; i < r; ++i)
            resampled[i] = samples[rng.uniform_below(r)];
        estimates.push_back(class_gini_estimate(resampled));
    }
    double mean = 0.0;
    for (double e : estimates) mean += e;
    mean /= kResamples;
    double ss = 0.0;
    for (double e : estimates) ss += (e - mean) * (e - mean);
    return std::sqrt(ss / (kResamples - 1));
}

}  // namespace

EstimateRecord run_monte_carlo(const MonteCarloConfig& cfg) {
    if (cfg.replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    if (cfg.regime == Regime::Discrete && cfg.parameter < 1.0)
        throw std::invalid_argument("n must be >= 1");
    if (cfg.regime == Regime::Poisson && cfg.parameter < 0.0)
        throw std::invalid_argument("t must be >= 0");
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<Replicate> reps(cfg.replicates);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(cfg.threads,
                                        static_cast<unsigned>(cfg.replicates)));
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t r = lo; r < hi; ++r) {
            try {
                reps[r] = run_one(cfg, r);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        work(0, cfg.replicates);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (cfg.replicates + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, cfg.replicates);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    EstimateRecord rec;
    rec.class_id = to_string(cfg.klass);
    rec.regime = to_string(cfg.regime);
    rec.variant = to_string(cfg.variant);
    rec.parameter = cfg.parameter;
    rec.spine = is_caterpillar(cfg.klass) ? cfg.spine : 0;
    rec.replicates = cfg.replicates;
    rec.seed = cfg.seed;

    double size_sum = 0.0;
    for (const auto& r : reps) size_sum += static_cast<double>(r.order);
    rec.mean_size = size_sum / static_cast<double>(cfg.replicates);

    if (cfg.variant == GiniVariant::Class) {
        std::vector<GiniSample> samples;
        samples.reserve(reps.size());
        for (const auto& r : reps) samples.push_back(r.sample);
        rec.mean = class_gini_estimate(samples);
        rec.se = (cfg.replicates > 1) ? bootstrap_se(samples, cfg.seed) : 0.0;
        rec.ci_lo = rec.mean - kZ99 * rec.se;
        rec.ci_hi = rec.mean + kZ99 * rec.se;
    } else {
        std::vector<double> values;
        values.reserve(reps.size());
        for (const auto& r : reps)
            values.push_back(cfg.variant == GiniVariant::Wealth ? r.wealth : r.gini);
        const Summary s = summarize(values);
        rec.mean = s.mean;
        rec.se = s.se;
        rec.ci_lo = s.ci_lo;
        rec.ci_hi = s.ci_hi;
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rec;
}

std::uint64_t duality_mapped_n(TreeClass klass, double t, std::uint64_t spine) {
    double n = 0.0;
    switch (klass) {
        case TreeClass::Bst:
        case TreeClass::Pyramid:
            n = std::exp(t);
            break;
        case TreeClass::CaterpillarUniform:
            n = static_cast<double>(spine) * t;
            break;
        case TreeClass::CaterpillarPa:
            n = static_cast<double>(2 * spine - 2) * std::expm1(t);
            break;
    }
    return static_cast<std::uint64_t>(std::llround(n));
}

DualityReport duality_experiment(const DualityConfig& cfg) {
    if (cfg.replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    if (cfg.t < 0.0) throw std::invalid_argument("t must be >= 0");
    DualityReport rep;
    rep.class_id = to_string(cfg.klass);
    rep.t = cfg.t;
    rep.tolerance = cfg.tolerance;
    rep.mapped_n = duality_mapped_n(cfg.klass, cfg.t, cfg.spine);
    if (rep.mapped_n < 1)
        throw std::invalid_argument("mapped n is below 1; increase t");

    MonteCarloConfig mc;
    mc.klass = cfg.klass;
    mc.spine = cfg.spine;
    mc.replicates = cfg.replicates;
    mc.seed = cfg.seed;
    mc.threads = cfg.threads;

    mc.regime = Regime::Discrete;
    mc.parameter = static_cast<double>(rep.mapped_n);
    mc.stream_offset = 0;
    rep.discrete = run_monte_carlo(mc);

    mc.regime = Regime::Poisson;
    mc.parameter = cfg.t;
    mc.stream_offset = kPoissonArmStreamOffset;
    rep.poisson = run_monte_carlo(mc);

    rep.abs_difference = std::fabs(rep.discrete.mean - rep.poisson.mean);
    rep.pooled_se = std::sqrt(rep.discrete.se * rep.discrete.se +
                              rep.poisson.se * rep.poisson.se);
    rep.pass = rep.abs_difference <= cfg.tolerance + 3.0 * rep.pooled_se;
    return rep;
}

std::vector<SweepRow> convergence_sweep(const MonteCarloConfig& base,
                                        const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("empty parameter grid");
    const double limit = analytical_limit(base.klass, base.variant);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double p : grid) {
        MonteCarloConfig cfg = base;
        cfg.parameter = p;
        rows.push_back({run_monte_carlo(cfg), limit});
    }
    return rows;
}

}  // namespace ginitree
