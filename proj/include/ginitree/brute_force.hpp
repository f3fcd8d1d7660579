#pragma once
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ginitree {

// Small exact rational on int64, enough for the n <= 8 enumerations.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den +
                     static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return from_wide(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num) * b.num,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 an = n < 0 ? -n : n;
        // binary gcd on __int128 via repeated std::gcd chunks is overkill;
        // Euclid directly
        __int128 a = an, b = d;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }
};

// Exact expected topological Gini of a random BST of order n, by full
// enumeration of the n! insertion permutations. n <= 8.
Rational brute_force_bst(std::uint64_t n);

// Exact expected Gini of a binary pyramid of order n, by weighted
// recursion over recruitment histories. n <= 8.
Rational brute_force_pyramid(std::uint64_t n);

// Probability of each labeled pyramid of order n, keyed by the parent
// vector (parent of node k, for k = 2..n, 1-based), in lexicographic key
// order. n <= 8.
struct PyramidShape {
    std::vector<std::uint64_t> parents;
    Rational probability;
};
std::vector<PyramidShape> pyramid_shape_marginals(std::uint64_t n);

// Exact expected topological Gini of a caterpillar with spine s after n
// attachment events, uniform or preferential attachment. s^n histories,
// so keep s and n small (s * n^... <= a few million paths).
Rational brute_force_caterpillar(std::uint64_t s, std::uint64_t n,
                                 bool preferential);

// Exact expected wealth Gini of the uniform caterpillar, same recursion.
Rational brute_force_caterpillar_wealth(std::uint64_t s, std::uint64_t n,
                                        bool preferential);

}  // namespace ginitree
