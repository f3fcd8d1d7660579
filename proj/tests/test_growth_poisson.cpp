#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "ginitree/growth_poisson.hpp"
#include "ginitree/stats.hpp"

using namespace ginitree;

namespace {

// pool a count histogram against a pmf so expected cells are >= 5
double pooled_gof(const std::map<std::uint64_t, double>& observed,
                  double total, auto pmf, std::uint64_t max_k) {
    std::vector<double> obs, expd;
    double opool = 0.0, epool = 0.0;
    for (std::uint64_t k = 0; k <= max_k; ++k) {
        auto it = observed.find(k);
        opool += (it == observed.end()) ? 0.0 : it->second;
        epool += pmf(k) * total;
        if (epool >= 5.0) {
            obs.push_back(opool);
            expd.push_back(epool);
            opool = epool = 0.0;
        }
    }
    double tail_obs = opool;
    for (const auto& [k, c] : observed)
        if (k > max_k) tail_obs += c;
    double covered = 0.0;
    for (double e : expd) covered += e;
    obs.push_back(tail_obs);
    expd.push_back(std::max(total - covered, 1e-9));
    return chi_square_gof(obs, expd);
}

}  // namespace

TEST_CASE("t = 0 leaves the seed state untouched") {
    RandomSource rng(21, 0);
    auto b = grow_bst_poisson(0.0, rng);
    CHECK(b.state.size == 1);
    CHECK(b.event_count == 0);
    auto p = grow_pyramid_poisson(0.0, rng);
    CHECK(p.state.size == 1);
    auto c = grow_caterpillar_poisson(4, 0.0, rng);
    CHECK(c.state.attachments == std::vector<std::uint64_t>{0, 0, 0, 0});
    auto q = grow_caterpillar_pa_poisson(4, 0.0, rng);
    CHECK(q.event_count == 0);
    CHECK_THROWS_AS(grow_bst_poisson(-1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(grow_caterpillar_pa_poisson(1, 1.0, rng),
                    std::invalid_argument);
}

TEST_CASE("poissonized BST size is a Yule process") {
    for (double t : {1.0, 2.0, 3.0}) {
        constexpr int kReps = 10000;
        RandomSource rng(31, static_cast<std::uint64_t>(t));
        std::vector<double> sizes;
        sizes.reserve(kReps);
        for (int i = 0; i < kReps; ++i)
            sizes.push_back(static_cast<double>(grow_bst_poisson(t, rng).state.size));
        auto s = summarize(sizes);
        const double target = std::exp(t);
        CHECK(std::fabs(s.mean - target) <= 3.0 * s.se + 1e-9);
    }

    // at t = 1 the size distribution is Geometric(e^{-1}) on {1, 2, ...}
    constexpr int kReps = 20000;
    RandomSource rng(32, 0);
    std::map<std::uint64_t, double> hist;
    for (int i = 0; i < kReps; ++i)
        hist[grow_bst_poisson(1.0, rng).state.size] += 1.0;
    const double p = std::exp(-1.0);
    auto pmf = [&](std::uint64_t k) {
        return (k == 0) ? 0.0 : p * std::pow(1.0 - p, double(k - 1));
    };
    CHECK(pooled_gof(hist, kReps, pmf, 40) >= 0.001);
}

TEST_CASE("poissonized uniform caterpillar counts are Poisson(t)") {
    constexpr int kReps = 20000;
    const double t = 2.5;
    RandomSource rng(33, 0);
    std::map<std::uint64_t, double> hist;
    for (int i = 0; i < kReps; ++i)
        hist[grow_caterpillar_poisson(3, t, rng).state.attachments[0]] += 1.0;
    auto pmf = [&](std::uint64_t k) {
        return std::exp(-t + k * std::log(t) - std::lgamma(k + 1.0));
    };
    CHECK(pooled_gof(hist, kReps, pmf, 30) >= 0.001);
}

TEST_CASE("direct and event-loop caterpillar modes agree in distribution") {
    constexpr int kReps = 30000;
    const double t = 1.5;
    RandomSource ra(34, 0), rb(35, 0);
    std::map<std::uint64_t, std::pair<double, double>> freq;
    for (int i = 0; i < kReps; ++i) {
        freq[grow_caterpillar_poisson(4, t, ra, CaterpillarPoissonMode::Direct)
                 .state.total_attachments()]
            .first += 1.0;
        freq[grow_caterpillar_poisson(4, t, rb, CaterpillarPoissonMode::EventLoop)
                 .state.total_attachments()]
            .second += 1.0;
    }
    // pool the sparse upper tail
    std::vector<double> a, b;
    double pa = 0.0, pb = 0.0;
    for (const auto& [k, counts] : freq) {
        pa += counts.first;
        pb += counts.second;
        if (pa + pb >= 20.0) {
            a.push_back(pa);
            b.push_back(pb);
            pa = pb = 0.0;
        }
    }
    if (pa + pb > 0.0) {
        a.back() += pa;
        b.back() += pb;
    }
    CHECK(chi_square_homogeneity(a, b) >= 0.001);
}

TEST_CASE("first event times follow the seed-state exponential clocks") {
    constexpr std::size_t kReps = 10000;

    // BST: initial rate 1
    {
        RandomSource rng(36, 0);
        std::vector<double> first;
        while (first.size() < kReps) {
            auto r = grow_bst_poisson(4.0, rng, true);
            if (!r.event_times.empty()) first.push_back(r.event_times[0]);
        }
        // condition on an arrival before t = 4
        const double z = -std::expm1(-4.0);
        auto cdf = [&](double x) { return -std::expm1(-x) / z; };
        CHECK(ks_statistic_scaled(first, cdf) < kKsCritical001);
    }

    // preferential caterpillar with s = 5: initial total weight 8
    {
        RandomSource rng(37, 0);
        std::vector<double> first;
        while (first.size() < kReps) {
            auto r = grow_caterpillar_pa_poisson(5, 2.0, rng, true);
            if (!r.event_times.empty()) first.push_back(r.event_times[0]);
        }
        const double z = -std::expm1(-8.0 * 2.0);
        auto cdf = [&](double x) { return -std::expm1(-8.0 * x) / z; };
        CHECK(ks_statistic_scaled(first, cdf) < kKsCritical001);
    }
}

TEST_CASE("event times are increasing and within the horizon") {
    RandomSource rng(38, 0);
    for (int rep = 0; rep < 50; ++rep) {
        auto r = grow_pyramid_poisson(3.0, rng, true);
        CHECK(r.event_times.size() == r.event_count);
        CHECK(r.state.size == 1 + r.event_count);
        double prev = 0.0;
        for (double x : r.event_times) {
            CHECK(x > prev);
            CHECK(x <= 3.0);
            prev = x;
        }
    }
}

TEST_CASE("poisson growers are reproducible per stream") {
    RandomSource a(40, 5), b(40, 5);
    auto r1 = grow_bst_poisson(5.0, a);
    auto r2 = grow_bst_poisson(5.0, b);
    CHECK(r1.state.size == r2.state.size);
    CHECK(r1.state.n1 == r2.state.n1);
    CHECK(r1.state.n2 == r2.state.n2);

    RandomSource c(40, 5), d(40, 5);
    auto c1 = grow_caterpillar_pa_poisson(6, 3.0, c);
    auto c2 = grow_caterpillar_pa_poisson(6, 3.0, d);
    CHECK(c1.state.attachments == c2.state.attachments);
}
