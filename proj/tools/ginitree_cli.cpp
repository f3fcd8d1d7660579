#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ginitree/brute_force.hpp"
#include "ginitree/experiments.hpp"
#include "ginitree/growth_discrete.hpp"
#include "ginitree/growth_poisson.hpp"
#include "ginitree/io.hpp"
#include "ginitree/urn.hpp"

using nlohmann::json;
using namespace ginitree;

namespace {

constexpr double kExplosiveTCap = 12.0;   // classes whose size grows like e^t
constexpr double kLinearTCap = 1e6;       // uniform caterpillars grow linearly

double t_cap(TreeClass c) {
    return c == TreeClass::CaterpillarUniform ? kLinearTCap : kExplosiveTCap;
}

struct CommonOpts {
    std::string class_name = "bst";
    std::optional<double> n;
    std::optional<double> t;
    std::uint64_t spine = 10;
    std::uint64_t reps = 100;
    std::optional<std::uint64_t> seed;
    bool entropy = false;
    std::string variant = "topological";
    std::string format = "json";
    std::string output;
    unsigned threads = 1;
    std::string mode = "direct";
};

void add_seed_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "base seed (required unless --entropy)");
    cmd->add_flag("--entropy", o.entropy,
                  "draw the seed from the OS entropy source (nondeterministic)");
}

std::uint64_t resolve_seed(const CommonOpts& o) {
    if (o.seed) return *o.seed;
    if (!o.entropy)
        throw CLI::ValidationError("--seed", "required unless --entropy is given");
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Returns (regime, parameter) after validating --n/--t against the class.
std::pair<Regime, double> resolve_regime(const CommonOpts& o, TreeClass klass,
                                         bool allow_zero_n) {
    if (o.n && o.t)
        throw CLI::ValidationError("--n/--t", "give exactly one of --n and --t");
    if (!o.n && !o.t)
        throw CLI::ValidationError("--n/--t", "one of --n and --t is required");
    if (o.n) {
        const double min_n = (allow_zero_n && is_caterpillar(klass)) ? 0.0 : 1.0;
        if (*o.n < min_n)
            throw CLI::ValidationError("--n", "n is below the class minimum");
        return {Regime::Discrete, *o.n};
    }
    if (*o.t < 0.0) throw CLI::ValidationError("--t", "t must be >= 0");
    if (*o.t > t_cap(klass))
        throw CLI::ValidationError(
            "--t", "t exceeds the cap for this class (" +
                       format_sig9(t_cap(klass)) + ")");
    return {Regime::Poisson, *o.t};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << text << "\n";
    }
}

json degrees_to_json(const DegreeMultiset& m) {
    json j = json::object();
    for (const auto& [deg, cnt] : m.counts) j[std::to_string(deg)] = cnt;
    return j;
}

int cmd_simulate(const CommonOpts& o) {
    const TreeClass klass = tree_class_from_string(o.class_name);
    const auto [regime, param] = resolve_regime(o, klass, /*allow_zero_n=*/true);
    const std::uint64_t seed = resolve_seed(o);
    RandomSource rng(seed, 0);

    json j;
    j["class"] = to_string(klass);
    j["regime"] = to_string(regime);
    j["param"] = param;
    j["seed"] = seed;

    DegreeMultiset degrees;
    std::optional<SpineState> spine;
    if (regime == Regime::Discrete) {
        const auto n = static_cast<std::uint64_t>(param);
        switch (klass) {
            case TreeClass::Bst:
                degrees = degree_multiset_from_binary(grow_bst(n, rng));
                break;
            case TreeClass::Pyramid:
                degrees = degree_multiset_from_binary(grow_pyramid(n, rng));
                break;
            case TreeClass::CaterpillarUniform:
                spine = grow_caterpillar_uniform(o.spine, n, rng);
                break;
            case TreeClass::CaterpillarPa:
                spine = grow_caterpillar_pa(o.spine, n, rng);
                break;
        }
    } else {
        const CaterpillarPoissonMode mode =
            o.mode == "event-loop" ? CaterpillarPoissonMode::EventLoop
                                   : CaterpillarPoissonMode::Direct;
        std::uint64_t events = 0;
        switch (klass) {
            case TreeClass::Bst: {
                auto run = grow_bst_poisson(param, rng);
                degrees = degree_multiset_from_binary(run.state);
                events = run.event_count;
                break;
            }
            case TreeClass::Pyramid: {
                auto run = grow_pyramid_poisson(param, rng);
                degrees = degree_multiset_from_binary(run.state);
                events = run.event_count;
                break;
            }
            case TreeClass::CaterpillarUniform: {
                auto run = grow_caterpillar_poisson(o.spine, param, rng, mode);
                spine = run.state;
                events = run.event_count;
                break;
            }
            case TreeClass::CaterpillarPa: {
                auto run = grow_caterpillar_pa_poisson(o.spine, param, rng);
                spine = run.state;
                events = run.event_count;
                break;
            }
        }
        j["event_count"] = events;
        j["elapsed"] = param;
    }
    if (spine) {
        degrees = degree_multiset_from_spine(*spine);
        j["attachments"] = spine->attachments;
        if (spine->total_attachments() > 0) j["wealth_gini"] = wealth_gini(*spine);
    }
    j["size"] = degrees.order;
    j["degrees"] = degrees_to_json(degrees);
    j["gini"] = degree_gini(degrees);
    emit(j.dump(2), o.output);
    return 0;
}

int cmd_estimate(const CommonOpts& o) {
    MonteCarloConfig cfg;
    cfg.klass = tree_class_from_string(o.class_name);
    std::tie(cfg.regime, cfg.parameter) = resolve_regime(o, cfg.klass, false);
    cfg.spine = o.spine;
    cfg.replicates = o.reps;
    cfg.seed = resolve_seed(o);
    cfg.variant = gini_variant_from_string(o.variant);
    cfg.threads = o.threads;
    cfg.mode = o.mode == "event-loop" ? CaterpillarPoissonMode::EventLoop
                                      : CaterpillarPoissonMode::Direct;
    const EstimateRecord rec = run_monte_carlo(cfg);
    if (o.format == "csv") {
        emit(csv_estimate_header() + "\n" + csv_estimate_row(rec), o.output);
    } else {
        emit(json(rec).dump(2), o.output);
    }
    return 0;
}

int cmd_limits(const std::string& format, const std::string& output) {
    struct Row {
        std::string name;
        double value;
        std::string source;
    };
    const std::vector<Row> rows = {
        {"bst", analytical_limit(TreeClass::Bst), "eigen-structure"},
        {"pyramid", analytical_limit(TreeClass::Pyramid), "eigen-structure"},
        {"caterpillar-uniform", analytical_limit(TreeClass::CaterpillarUniform),
         "closed form"},
        {"caterpillar-pa", analytical_limit(TreeClass::CaterpillarPa),
         "closed form"},
        {"caterpillar-wealth",
         analytical_limit(TreeClass::CaterpillarUniform, GiniVariant::Wealth),
         "closed form"},
    };
    if (format == "json") {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"class", r.name}, {"limit", r.value}, {"source", r.source}});
        emit(j.dump(2), output);
    } else {
        std::string text = "class,limit,source";
        for (const auto& r : rows) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", r.value);
            text += "\n" + r.name + "," + buf + "," + r.source;
        }
        emit(text, output);
    }
    return 0;
}

int cmd_duality(const CommonOpts& o, double tol) {
    DualityConfig cfg;
    cfg.klass = tree_class_from_string(o.class_name);
    if (!o.t) throw CLI::ValidationError("--t", "duality requires --t");
    if (*o.t < 0.0) throw CLI::ValidationError("--t", "t must be >= 0");
    if (*o.t > t_cap(cfg.klass))
        throw CLI::ValidationError("--t", "t exceeds the cap for this class");
    cfg.t = *o.t;
    cfg.spine = o.spine;
    cfg.replicates = o.reps;
    cfg.seed = resolve_seed(o);
    cfg.tolerance = tol;
    cfg.threads = o.threads;
    const DualityReport rep = duality_experiment(cfg);
    std::fprintf(stderr,
                 "%s: t=%g  n=%llu  discrete=%.6f  poisson=%.6f  |diff|=%.6f  "
                 "pooled_se=%.6f  -> %s\n",
                 rep.class_id.c_str(), rep.t,
                 static_cast<unsigned long long>(rep.mapped_n), rep.discrete.mean,
                 rep.poisson.mean, rep.abs_difference, rep.pooled_se,
                 rep.pass ? "PASS" : "FAIL");
    emit(json(rep).dump(2), o.output);
    return 0;
}

int cmd_sweep(const CommonOpts& o, const std::vector<double>& grid,
              const std::string& regime_name) {
    MonteCarloConfig base;
    base.klass = tree_class_from_string(o.class_name);
    base.regime = regime_from_string(regime_name);
    base.spine = o.spine;
    base.replicates = o.reps;
    base.seed = resolve_seed(o);
    base.variant = gini_variant_from_string(o.variant);
    base.threads = o.threads;
    if (grid.empty()) throw CLI::ValidationError("--grid", "grid must be nonempty");
    if (base.regime == Regime::Poisson)
        for (double t : grid)
            if (t > t_cap(base.klass))
                throw CLI::ValidationError("--grid", "t exceeds the class cap");
    const auto rows = convergence_sweep(base, grid);
    std::string text = csv_sweep_header();
    for (const auto& row : rows) text += "\n" + csv_sweep_row(row);
    emit(text, o.output);
    return 0;
}

int cmd_oracle(const CommonOpts& o, bool marginals) {
    const TreeClass klass = tree_class_from_string(o.class_name);
    if (!o.n) throw CLI::ValidationError("--n", "oracle requires --n");
    const auto n = static_cast<std::uint64_t>(*o.n);
    json j;
    j["class"] = to_string(klass);
    j["n"] = n;
    Rational g(0);
    switch (klass) {
        case TreeClass::Bst:
            g = brute_force_bst(n);
            break;
        case TreeClass::Pyramid:
            g = brute_force_pyramid(n);
            if (marginals) {
                json m = json::array();
                for (const auto& shape : pyramid_shape_marginals(n)) {
                    m.push_back({{"parents", shape.parents},
                                 {"probability", shape.probability.str()},
                                 {"value", shape.probability.to_double()}});
                }
                j["shape_marginals"] = m;
            }
            break;
        case TreeClass::CaterpillarUniform:
            j["spine"] = o.spine;
            g = brute_force_caterpillar(o.spine, n, false);
            break;
        case TreeClass::CaterpillarPa:
            j["spine"] = o.spine;
            g = brute_force_caterpillar(o.spine, n, true);
            break;
    }
    j["exact"] = g.str();
    j["value"] = g.to_double();
    emit(j.dump(2), o.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-tree degree Gini simulator: discrete and poissonized "
                 "growth, analytical limits, and duality experiments"};
    app.require_subcommand(1);

    CommonOpts o;
    double tol = 0.02;
    std::vector<double> grid;
    std::string sweep_regime = "discrete";
    std::string limits_format = "table";
    bool marginals = false;

    auto add_common = [&](CLI::App* cmd, bool with_reps) {
        cmd->add_option("--class", o.class_name, "bst | pyramid | caterpillar-uniform | caterpillar-pa")
            ->default_str("bst");
        cmd->add_option("--n", o.n, "discrete size / attachment count");
        cmd->add_option("--t", o.t, "poissonized time horizon");
        cmd->add_option("--s", o.spine, "spine length (caterpillars)")
            ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
        cmd->add_option("--mode", o.mode, "poisson caterpillar sampler")
            ->check(CLI::IsMember({"direct", "event-loop"}));
        cmd->add_option("--output", o.output, "write to file instead of stdout");
        if (with_reps)
            cmd->add_option("--reps", o.reps, "replicate count")
                ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
        cmd->add_option("--threads", o.threads, "worker threads (output is identical for any count)")
            ->check(CLI::Range(1u, 256u));
        add_seed_flags(cmd, o);
    };

    auto* simulate = app.add_subcommand("simulate", "grow one tree and print its degree profile and Gini");
    add_common(simulate, false);

    auto* estimate = app.add_subcommand("estimate", "Monte Carlo Gini estimate with CI");
    add_common(estimate, true);
    estimate->add_option("--variant", o.variant, "topological | class | wealth")
        ->check(CLI::IsMember({"topological", "class", "wealth"}));
    estimate->add_option("--format", o.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* limits = app.add_subcommand("limits", "print the analytical limiting Gini values");
    limits->add_option("--format", limits_format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    limits->add_option("--output", o.output, "write to file instead of stdout");

    auto* duality = app.add_subcommand("duality", "compare discrete n = g(t) against the poissonized run at t");
    add_common(duality, true);
    duality->add_option("--tol", tol, "fixed tolerance added to 3 pooled SEs");

    auto* sweep = app.add_subcommand("sweep", "Monte Carlo estimates over a parameter grid, CSV with a limit column");
    add_common(sweep, true);
    sweep->add_option("--grid", grid, "comma-separated parameter values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--regime", sweep_regime, "discrete | poisson")
        ->check(CLI::IsMember({"discrete", "poisson"}));
    sweep->add_option("--variant", o.variant, "topological | class | wealth")
        ->check(CLI::IsMember({"topological", "class", "wealth"}));

    auto* oracle = app.add_subcommand("oracle", "exact small-n expectations by enumeration");
    oracle->add_option("--class", o.class_name, "tree class");
    oracle->add_option("--n", o.n, "order / attachment count (<= 8)");
    oracle->add_option("--s", o.spine, "spine length (caterpillars)");
    oracle->add_flag("--marginals", marginals, "include pyramid shape marginals");
    oracle->add_option("--output", o.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
        if (simulate->parsed()) return cmd_simulate(o);
        if (estimate->parsed()) return cmd_estimate(o);
        if (limits->parsed()) return cmd_limits(limits_format, o.output);
        if (duality->parsed()) return cmd_duality(o, tol);
        if (sweep->parsed()) return cmd_sweep(o, grid, sweep_regime);
        if (oracle->parsed()) return cmd_oracle(o, marginals);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
