#pragma once
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ginitree {

struct Summary {
    double mean = 0.0;
    double se = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

inline constexpr double kZ99 = 2.5758293035489004;  // 99% two-sided normal

inline Summary summarize(const std::vector<double>& values, double z = kZ99) {
    if (values.empty()) throw std::invalid_argument("no values");
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double se = (values.size() > 1) ? std::sqrt(ss / (n * (n - 1.0))) : 0.0;
    return {mean, se, mean - z * se, mean + z * se};
}

// Regularized lower incomplete gamma P(a, x), series + continued fraction.
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p domain");
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {  // series
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    // Lentz continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
}

inline double chi_square_pvalue(double statistic, double df) {
    if (statistic <= 0.0) return 1.0;
    return 1.0 - gamma_p(df / 2.0, statistic / 2.0);
}

// Goodness of fit: observed counts vs expected counts (same total).
// Returns the p-value; df = bins - 1 - fitted_params.
inline double chi_square_gof(const std::vector<double>& observed,
                             const std::vector<double>& expected,
                             int fitted_params = 0) {
    if (observed.size() != expected.size() || observed.size() < 2)
        throw std::invalid_argument("chi_square_gof: bad bins");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) throw std::invalid_argument("expected count <= 0");
        const double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    const double df = static_cast<double>(observed.size()) - 1.0 - fitted_params;
    return chi_square_pvalue(stat, df);
}

// Two-sample homogeneity test over matching category counts.
inline double chi_square_homogeneity(const std::vector<double>& a,
                                     const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("chi_square_homogeneity: bad bins");
    double na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += a[i];
        nb += b[i];
    }
    double stat = 0.0;
    int used = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double tot = a[i] + b[i];
        if (tot == 0.0) continue;
        const double ea = tot * na / (na + nb);
        const double eb = tot * nb / (na + nb);
        stat += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
        ++used;
    }
    return chi_square_pvalue(stat, static_cast<double>(used - 1));
}

// One-sample Kolmogorov-Smirnov statistic against a caller-supplied CDF,
// scaled by sqrt(n) (asymptotic critical value at alpha = 0.001 is 1.949).
template <class Cdf>
double ks_statistic_scaled(std::vector<double> sample, Cdf&& cdf) {
    if (sample.empty()) throw std::invalid_argument("no sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::fabs((i + 1) / n - f));
        d = std::max(d, std::fabs(f - i / n));
    }
    return d * std::sqrt(n);
}

inline constexpr double kKsCritical001 = 1.9495;

}  // namespace ginitree
