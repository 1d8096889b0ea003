#pragma once

// Vector majorization, the Schur-convexity differential criterion, and the
// auxiliary functions psi1, phi1, phi2, psi2 whose monotonicity drives the
// ordering results for series/parallel ECD systems.

#include <cstdint>
#include <optional>

#include "ecd/grid.hpp"

namespace ecd {

struct ParamVector {
    std::vector<double> entries;

    explicit ParamVector(std::vector<double> e) : entries(std::move(e)) {
        if (entries.size() < 2)
            throw std::invalid_argument("ParamVector: need at least two entries");
        for (double v : entries)
            if (!(v > 0.0))
                throw std::invalid_argument("ParamVector: entries must be positive");
    }
};

// a majorized by b: equal totals (within 1e-9) and, for the increasing
// rearrangements, every bottom-k partial sum of a at least that of b
// (within 1e-12). Throws on length mismatch.
bool majorizes(const ParamVector& a, const ParamVector& b);

// Random vector majorized by b: applies 1-3 pairwise averaging steps
//   a_i <- t a_i + (1-t) a_j,  a_j <- (1-t) a_i + t a_j,  t in (0,1),
// each of which can only contract the spread, so majorizes(result, b) always
// holds. Deterministic per seed.
ParamVector random_majorized(const ParamVector& b, std::uint64_t seed);

// psi1(alpha, y) = y (1-y)^{alpha-1} / (1 - (1-y)^alpha)  on y in (0,1);
// increasing in y for alpha < 1, decreasing for alpha > 1, constant 1 at alpha = 1.
double psi1(double alpha, double y);

// phi1(lambda) = 1 - 1/(1 - e^{lambda (1 - e^{x^beta})}); strictly increasing
// in lambda and always negative.
double phi1(double lambda, double x, double beta);

// phi2(t) = t e^{lambda(1 - e^t) + t} / (1 - e^{lambda(1 - e^t)}); strictly
// decreasing in t when lambda > 1; limit 1/lambda as t -> 0+.
double phi2(double t, double lambda);

// psi2(alpha) = 1 - 1/(1 - (1 - e^{lambda(1 - e^{x^beta})})^alpha); strictly
// increasing in alpha and always negative.
double psi2(double alpha, double x, double beta, double lambda);

// Which system functional the Schur scan differentiates, and with respect to
// which parameter vector. The remaining two parameters are shared across
// components and come from SchurFixed (the irrelevant field is ignored).
enum class SchurTarget { SeriesSF_lambda, ParallelCDF_lambda, ParallelCDF_beta, SeriesSF_alpha };
enum class SchurVerdict { SchurConvex, SchurConcave, Indeterminate };

struct SchurFixed {
    double alpha = 1.0;
    double beta = 1.0;
    double lambda = 1.0;
};

struct SchurViolation {
    std::size_t i, j;  // index pair of the vector entries
    double x;
    double delta;
};

// verdict SchurConvex: every sampled Delta >= -tol; SchurConcave: <= +tol;
// mixed signs give Indeterminate with the extreme sample of the minority sign
// recorded as worst_violation. All pairs tied (Delta identically zero) gives
// Indeterminate with no violation — "no evidence", which callers may label as
// a ties-only degenerate scan.
struct SchurReport {
    SchurVerdict verdict;
    std::optional<SchurViolation> worst_violation;
};

// Evaluates Delta = (a_i - a_j)(d psi/d a_i - d psi/d a_j) for every index
// pair at every grid point, using central finite differences with step
// h = 1e-6 * max(1, |a_i|) and sign tolerance 1e-10 * scale. Exactly tied
// entries are skipped (Delta is identically zero there).
SchurReport schur_scan(SchurTarget target, const SchurFixed& fixed, const ParamVector& point,
                       const Grid& x_grid);

}  // namespace ecd
