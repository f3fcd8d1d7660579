#pragma once
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ginitree/gini.hpp"
#include "ginitree/rng.hpp"

namespace ginitree {

// Two-color ball addition rule. Row = color drawn (white, blue), column =
// net change in (white, blue) counts, the drawn ball's removal already
// folded in.
struct ReplacementMatrix {
    std::array<std::array<std::int64_t, 2>, 2> add;

    static ReplacementMatrix bst() {
        ReplacementMatrix m;
        m.add = {{{0, 1}, {2, -1}}};
        return m;
    }
    static ReplacementMatrix pyramid() {
        ReplacementMatrix m;
        m.add = {{{0, 1}, {1, -1}}};
        return m;
    }
};

struct EigenPrediction {
    double lambda1 = 0.0;
    std::array<double, 2> v1{0.0, 0.0};  // L1-normalized, components sum to 1
    bool degenerate = false;
};

// Principal eigenpair of the transpose, by the 2x2 quadratic closed form.
// The eigenvector is L1-normalized. Complex eigenvalues or a mixed-sign
// principal eigenvector are rejected.
inline EigenPrediction principal_eigenpair(const ReplacementMatrix& m) {
    // A^T entries
    const double a = static_cast<double>(m.add[0][0]);
    const double b = static_cast<double>(m.add[1][0]);
    const double c = static_cast<double>(m.add[0][1]);
    const double d = static_cast<double>(m.add[1][1]);
    const double tr = a + d;
    const double det = a * d - b * c;
    const double disc = tr * tr - 4.0 * det;
    if (disc < 0.0)
        throw std::domain_error("unsupported matrix: complex eigenvalues");
    EigenPrediction out;
    out.lambda1 = 0.5 * (tr + std::sqrt(disc));
    double v0, v1;
    if (b != 0.0) {
        v0 = b;
        v1 = out.lambda1 - a;
    } else if (c != 0.0) {
        v0 = out.lambda1 - d;
        v1 = c;
    } else {
        // diagonal: repeated or separate eigenvalues along the axes
        out.degenerate = (a == d);
        if (a >= d) {
            v0 = 1.0;
            v1 = 0.0;
        } else {
            v0 = 0.0;
            v1 = 1.0;
        }
    }
    if (disc == 0.0) out.degenerate = true;
    const double sum = v0 + v1;
    if (sum == 0.0)
        throw std::domain_error("unsupported matrix: eigenvector sums to zero");
    v0 /= sum;
    v1 /= sum;
    if (v0 < -1e-12 || v1 < -1e-12)
        throw std::domain_error("unsupported matrix: mixed-sign principal eigenvector");
    out.v1 = {v0, v1};
    return out;
}

struct UrnCounts {
    std::int64_t white = 0;
    std::int64_t blue = 0;
};

// Trajectory of counts after each draw; index 0 is the initial state.
std::vector<UrnCounts> run_urn_discrete(const ReplacementMatrix& m,
                                        UrnCounts initial, std::uint64_t draws,
                                        RandomSource& rng);

struct UrnPoissonRun {
    std::vector<UrnCounts> trajectory;  // index 0 = initial state
    std::vector<double> event_times;
    double elapsed = 0.0;
};

// Continuous-time urn: interarrival ~ Exp(total ball count + rate_offset),
// then the same transition as the discrete urn. rate_offset = -1 runs the
// urn on the clock of the tree it encodes (node count = ball count - 1),
// which is what the poissonized growers use.
UrnPoissonRun run_urn_poisson(const ReplacementMatrix& m, UrnCounts initial,
                              double t, RandomSource& rng,
                              std::int64_t rate_offset = 0);

enum class UrnModel { Bst, Pyramid };

// Maps the spectral limit lambda1 * v1 of the matching urn to limiting
// degree-1/2/3 node proportions. A BST leaf owns two white balls; a
// pyramid leaf owns one.
inline LimitProfile predict_proportions(UrnModel model,
                                        const EigenPrediction& pred) {
    const double w = pred.lambda1 * pred.v1[0];
    const double b = pred.lambda1 * pred.v1[1];
    LimitProfile p;
    p.p1 = (model == UrnModel::Bst) ? w / 2.0 : w;
    p.p2 = b;
    p.p3 = 1.0 - p.p1 - p.p2;
    if (p.p3 < -1e-12)
        throw std::domain_error("inconsistent mapping: negative remainder");
    return p;
}

}  // namespace ginitree
