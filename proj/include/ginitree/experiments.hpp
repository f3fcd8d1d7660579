#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "ginitree/gini.hpp"
#include "ginitree/growth_poisson.hpp"

namespace ginitree {

enum class TreeClass { Bst, Pyramid, CaterpillarUniform, CaterpillarPa };
enum class Regime { Discrete, Poisson };
enum class GiniVariant { Topological, Class, Wealth };

std::string to_string(TreeClass c);
std::string to_string(Regime r);
std::string to_string(GiniVariant v);
TreeClass tree_class_from_string(const std::string& s);
Regime regime_from_string(const std::string& s);
GiniVariant gini_variant_from_string(const std::string& s);

inline bool is_caterpillar(TreeClass c) {
    return c == TreeClass::CaterpillarUniform || c == TreeClass::CaterpillarPa;
}

// Analytical limiting Gini for a class/variant, derived from the urn
// eigen-structure for the binary classes.
double analytical_limit(TreeClass c, GiniVariant v = GiniVariant::Topological);

struct MonteCarloConfig {
    TreeClass klass = TreeClass::Bst;
    Regime regime = Regime::Discrete;
    double parameter = 0.0;  // n (discrete) or t (poisson)
    std::uint64_t spine = 10;  // caterpillars only
    std::uint64_t replicates = 1;
    std::uint64_t seed = 0;
    std::uint64_t stream_offset = 0;
    GiniVariant variant = GiniVariant::Topological;
    unsigned threads = 1;
    CaterpillarPoissonMode mode = CaterpillarPoissonMode::Direct;
};

struct EstimateRecord {
    std::string class_id;
    std::string regime;
    std::string variant;
    double parameter = 0.0;
    std::uint64_t spine = 0;
    std::uint64_t replicates = 0;
    double mean = 0.0;
    double se = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
    double mean_size = 0.0;  // mean final order (informative for poisson runs)
};

// R independent replicates on streams (seed, offset..offset+R-1), reduced
// in replicate order; the result is identical for every thread count.
EstimateRecord run_monte_carlo(const MonteCarloConfig& cfg);

struct DualityConfig {
    TreeClass klass = TreeClass::Bst;
    double t = 0.0;
    std::uint64_t spine = 10;
    std::uint64_t replicates = 1;
    std::uint64_t seed = 0;
    double tolerance = 0.02;
    unsigned threads = 1;
};

struct DualityReport {
    std::string class_id;
    double t = 0.0;
    std::uint64_t mapped_n = 0;
    EstimateRecord discrete;
    EstimateRecord poisson;
    double abs_difference = 0.0;
    double pooled_se = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Discrete-vs-poissonized comparison at size-matched parameters:
// n = round(e^t) for BST and pyramid, n = round(s t) for uniform
// caterpillars, n = round((2s-2)(e^t - 1)) for preferential-attachment
// caterpillars (their poissonized size grows exponentially). Pass iff
// |difference| <= tolerance + 3 * pooled SE.
DualityReport duality_experiment(const DualityConfig& cfg);

std::uint64_t duality_mapped_n(TreeClass klass, double t, std::uint64_t spine);

struct SweepRow {
    EstimateRecord record;
    double limit = 0.0;
};

std::vector<SweepRow> convergence_sweep(const MonteCarloConfig& base,
                                        const std::vector<double>& grid);

// Stream-offset for the poisson arm of a duality run (discrete arm uses 0).
inline constexpr std::uint64_t kPoissonArmStreamOffset = 1ull << 32;

}  // namespace ginitree
