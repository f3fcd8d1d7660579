#include <doctest.h>

#include <cmath>
#include <vector>

#include "ginitree/brute_force.hpp"
#include "ginitree/experiments.hpp"

using namespace ginitree;

TEST_CASE("enum round trips and analytical limits") {
    for (auto c : {TreeClass::Bst, TreeClass::Pyramid,
                   TreeClass::CaterpillarUniform, TreeClass::CaterpillarPa})
        CHECK(tree_class_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(tree_class_from_string("pagoda"), std::invalid_argument);
    CHECK(regime_from_string("poisson") == Regime::Poisson);
    CHECK(gini_variant_from_string("wealth") == GiniVariant::Wealth);

    CHECK(analytical_limit(TreeClass::Bst) ==
          doctest::Approx(2.0 / 9.0).epsilon(1e-12));
    CHECK(analytical_limit(TreeClass::Pyramid) ==
          doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
    CHECK(analytical_limit(TreeClass::CaterpillarUniform) == 0.5);
    CHECK(analytical_limit(TreeClass::CaterpillarPa) == 0.5);
    CHECK(analytical_limit(TreeClass::CaterpillarUniform, GiniVariant::Wealth) ==
          0.0);
}

TEST_CASE("exact enumerations: BST") {
    CHECK(brute_force_bst(2) == Rational(0));
    CHECK(brute_force_bst(3) == Rational(1, 6));
    CHECK_THROWS_AS(brute_force_bst(1), std::domain_error);
    CHECK_THROWS_AS(brute_force_bst(9), std::invalid_argument);
    // sanity against the limit: by n = 8 the mean sits between 0 and 1/4
    const double g8 = brute_force_bst(8).to_double();
    CHECK(g8 > 0.1);
    CHECK(g8 < 0.26);
}

TEST_CASE("exact enumerations: pyramid") {
    CHECK(brute_force_pyramid(2) == Rational(0));
    CHECK(brute_force_pyramid(3) == Rational(1, 6));

    // order-4 recruitment histories by hand: the two histories through a
    // saturated root carry 1/4 each, the three through the chain 1/6 each
    auto shapes = pyramid_shape_marginals(4);
    REQUIRE(shapes.size() == 5);
    CHECK(shapes[0].parents == std::vector<std::uint64_t>{1, 1, 2});
    CHECK(shapes[0].probability == Rational(1, 4));
    CHECK(shapes[1].parents == std::vector<std::uint64_t>{1, 1, 3});
    CHECK(shapes[1].probability == Rational(1, 4));
    CHECK(shapes[2].parents == std::vector<std::uint64_t>{1, 2, 1});
    CHECK(shapes[2].probability == Rational(1, 6));
    CHECK(shapes[3].parents == std::vector<std::uint64_t>{1, 2, 2});
    CHECK(shapes[3].probability == Rational(1, 6));
    CHECK(shapes[4].parents == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(shapes[4].probability == Rational(1, 6));

    Rational total(0);
    for (const auto& s : shapes) total = total + s.probability;
    CHECK(total == Rational(1));
}

TEST_CASE("exact enumerations: caterpillars") {
    // single spine node: the star on n + 1 vertices, Gini (n-1)/(2(n+1))
    CHECK(brute_force_caterpillar(1, 3, false) == Rational(1, 4));
    CHECK(brute_force_caterpillar(1, 7, false) == Rational(3, 8));
    // zero attachments on two nodes: the single edge, Gini 0
    CHECK(brute_force_caterpillar(2, 0, false) == Rational(0));
    CHECK(brute_force_caterpillar(2, 0, true) == Rational(0));
    // equal wealth is forced when s = 1
    CHECK(brute_force_caterpillar_wealth(1, 5, false) == Rational(0));
}

TEST_CASE("Monte Carlo agrees with the exact oracles") {
    MonteCarloConfig cfg;
    cfg.replicates = 20000;
    cfg.seed = 1001;

    auto run = [&](TreeClass k, double n, std::uint64_t s = 3) {
        cfg.klass = k;
        cfg.parameter = n;
        cfg.spine = s;
        return run_monte_carlo(cfg);
    };

    // order 3 BSTs always score 1/6; only summation round-off remains
    auto bst3 = run(TreeClass::Bst, 3);
    CHECK(bst3.mean == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(bst3.se == doctest::Approx(0.0));

    for (std::uint64_t n = 4; n <= 6; ++n) {
        auto r = run(TreeClass::Bst, double(n));
        const double exact = brute_force_bst(n).to_double();
        CHECK(std::fabs(r.mean - exact) <= 3.0 * r.se + 1e-12);
        r = run(TreeClass::Pyramid, double(n));
        CHECK(std::fabs(r.mean - brute_force_pyramid(n).to_double()) <=
              3.0 * r.se + 1e-12);
    }

    auto cu = run(TreeClass::CaterpillarUniform, 4, 3);
    CHECK(std::fabs(cu.mean - brute_force_caterpillar(3, 4, false).to_double()) <=
          3.0 * cu.se + 1e-12);
    auto cp = run(TreeClass::CaterpillarPa, 4, 3);
    CHECK(std::fabs(cp.mean - brute_force_caterpillar(3, 4, true).to_double()) <=
          3.0 * cp.se + 1e-12);

    cfg.variant = GiniVariant::Wealth;
    auto cw = run(TreeClass::CaterpillarUniform, 4, 3);
    CHECK(std::fabs(cw.mean -
                    brute_force_caterpillar_wealth(3, 4, false).to_double()) <=
          3.0 * cw.se + 1e-12);
    cfg.variant = GiniVariant::Topological;
}

TEST_CASE("replicate reduction is identical for any thread count") {
    MonteCarloConfig cfg;
    cfg.klass = TreeClass::Pyramid;
    cfg.parameter = 500;
    cfg.replicates = 400;
    cfg.seed = 55;
    cfg.threads = 1;
    const auto r1 = run_monte_carlo(cfg);
    cfg.threads = 4;
    const auto r4 = run_monte_carlo(cfg);
    cfg.threads = 7;
    const auto r7 = run_monte_carlo(cfg);
    CHECK(r1.mean == r4.mean);
    CHECK(r1.se == r4.se);
    CHECK(r1.mean == r7.mean);
    CHECK(r1.se == r7.se);

    // and re-running the same config is bit-identical
    const auto again = run_monte_carlo(cfg);
    CHECK(again.mean == r1.mean);
    CHECK(again.se == r1.se);
}

TEST_CASE("class-relative variant reports a bootstrap SE") {
    MonteCarloConfig cfg;
    cfg.klass = TreeClass::Bst;
    cfg.parameter = 50;
    cfg.replicates = 200;
    cfg.seed = 77;
    cfg.variant = GiniVariant::Class;
    const auto r = run_monte_carlo(cfg);
    CHECK(r.mean > 0.0);
    CHECK(r.mean < 0.5);
    CHECK(r.se > 0.0);
    CHECK(r.ci_lo < r.mean);
    CHECK(r.ci_hi > r.mean);

    // the class estimate is deterministic given the config
    const auto r2 = run_monte_carlo(cfg);
    CHECK(r.mean == r2.mean);
    CHECK(r.se == r2.se);
}

TEST_CASE("wealth inequality of the uniform caterpillar dies out") {
    MonteCarloConfig cfg;
    cfg.klass = TreeClass::CaterpillarUniform;
    cfg.spine = 10;
    cfg.replicates = 200;
    cfg.seed = 88;
    cfg.variant = GiniVariant::Wealth;
    cfg.parameter = 100;
    const double g_small = run_monte_carlo(cfg).mean;
    cfg.parameter = 10000;
    const double g_large = run_monte_carlo(cfg).mean;
    CHECK(g_small > g_large);
    CHECK(g_large < 0.05);
}

TEST_CASE("duality size mapping") {
    CHECK(duality_mapped_n(TreeClass::Bst, 0.0, 10) == 1);
    CHECK(duality_mapped_n(TreeClass::Bst, 2.0, 10) == 7);  // round(e^2)
    CHECK(duality_mapped_n(TreeClass::Pyramid, 3.0, 10) == 20);  // round(e^3)
    CHECK(duality_mapped_n(TreeClass::CaterpillarUniform, 2.0, 10) == 20);
    // (2s-2)(e^1 - 1) with s = 10
    CHECK(duality_mapped_n(TreeClass::CaterpillarPa, 1.0, 10) == 31);
}

TEST_CASE("duality report fields are internally consistent") {
    DualityConfig cfg;
    cfg.klass = TreeClass::CaterpillarUniform;
    cfg.t = 10.0;
    cfg.spine = 5;
    cfg.replicates = 100;
    cfg.seed = 99;
    cfg.tolerance = 0.05;
    const auto rep = duality_experiment(cfg);
    CHECK(rep.mapped_n == 50);
    CHECK(rep.abs_difference ==
          doctest::Approx(std::fabs(rep.discrete.mean - rep.poisson.mean))
              .epsilon(1e-15));
    CHECK(rep.pooled_se ==
          doctest::Approx(std::sqrt(rep.discrete.se * rep.discrete.se +
                                    rep.poisson.se * rep.poisson.se))
              .epsilon(1e-12));
    CHECK(rep.pass == (rep.abs_difference <=
                       rep.tolerance + 3.0 * rep.pooled_se));
    CHECK(rep.pass);
}

TEST_CASE("convergence sweep walks the grid toward the limit") {
    MonteCarloConfig base;
    base.klass = TreeClass::Bst;
    base.replicates = 300;
    base.seed = 111;
    CHECK_THROWS_AS(convergence_sweep(base, {}), std::invalid_argument);

    const auto rows = convergence_sweep(base, {10.0, 100.0, 1000.0});
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows)
        CHECK(row.limit == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
    const double d_first = std::fabs(rows.front().record.mean - 2.0 / 9.0);
    const double d_last = std::fabs(rows.back().record.mean - 2.0 / 9.0);
    CHECK(d_last < d_first);
}
