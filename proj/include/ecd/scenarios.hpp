#pragma once

// The bundled example scenarios: component vectors and published reference
// values that the `examples` command and the acceptance suite reproduce.
//
// Scenario 1: two 4-component series systems, shared alpha, beta = 2,
//   rate vectors lambda vs mu (lambda majorized by mu); f1 = sf ratio.
// Scenario 2: the same components arranged in parallel; f2 = sf ratio.
// Scenario 3: two 4-component parallel systems, alpha = 0.6, lambda = 2,
//   shape vectors beta vs beta*; f3 = cdf ratio, f4 = sf ratio.
// Scenario 4: two 3-component series systems, beta = 3, lambda = 2,
//   exponent vectors alpha vs alpha*; the figure-2 curve is sf_X - sf_Y.

#include <vector>

#include "ecd/systems.hpp"

namespace ecd::scenarios {

inline const std::vector<double> kLambdaVec{0.8, 1.2, 1.3, 1.9};
inline const std::vector<double> kMuVec{0.5, 0.7, 1.5, 2.5};
inline const std::vector<double> kBetaVec{0.4, 0.9, 2.0, 7.5};
inline const std::vector<double> kBetaStarVec{0.2, 1.0, 1.9, 7.7};
inline const std::vector<double> kAlphaVec{0.2, 1.0, 2.4};
inline const std::vector<double> kAlphaStarVec{0.4, 1.0, 2.2};

inline ComponentSet with_lambdas(double alpha, double beta, const std::vector<double>& lambdas) {
    std::vector<ECDParams> c;
    c.reserve(lambdas.size());
    for (double l : lambdas) c.emplace_back(alpha, beta, l);
    return ComponentSet(std::move(c));
}

inline ComponentSet with_betas(double alpha, const std::vector<double>& betas, double lambda) {
    std::vector<ECDParams> c;
    c.reserve(betas.size());
    for (double b : betas) c.emplace_back(alpha, b, lambda);
    return ComponentSet(std::move(c));
}

inline ComponentSet with_alphas(const std::vector<double>& alphas, double beta, double lambda) {
    std::vector<ECDParams> c;
    c.reserve(alphas.size());
    for (double a : alphas) c.emplace_back(a, beta, lambda);
    return ComponentSet(std::move(c));
}

// Scenario 1/2 systems (X carries the lambda vector, Y the mu vector).
inline SystemSpec s1_x(double alpha) { return {with_lambdas(alpha, 2.0, kLambdaVec), SystemKind::Series}; }
inline SystemSpec s1_y(double alpha) { return {with_lambdas(alpha, 2.0, kMuVec), SystemKind::Series}; }
inline SystemSpec s2_x(double alpha) { return {with_lambdas(alpha, 2.0, kLambdaVec), SystemKind::Parallel}; }
inline SystemSpec s2_y(double alpha) { return {with_lambdas(alpha, 2.0, kMuVec), SystemKind::Parallel}; }

// Scenario 3 systems (X carries beta, Y carries beta*).
inline SystemSpec s3_x() { return {with_betas(0.6, kBetaVec, 2.0), SystemKind::Parallel}; }
inline SystemSpec s3_y() { return {with_betas(0.6, kBetaStarVec, 2.0), SystemKind::Parallel}; }

// Scenario 4 systems (X carries alpha, Y carries alpha*).
inline SystemSpec s4_x() { return {with_alphas(kAlphaVec, 3.0, 2.0), SystemKind::Series}; }
inline SystemSpec s4_y() { return {with_alphas(kAlphaStarVec, 3.0, 2.0), SystemKind::Series}; }

// One published reference value: a curve evaluated at x for a given shared alpha.
struct RefValue {
    double alpha;
    double x;
    double reference;
};

// f1 = sf_Y / sf_X for the series systems of scenario 1.
inline const std::vector<RefValue> kF1Refs{
    {0.7, 0.4, 1.032}, {0.7, 0.6, 1.051}, {0.7, 1.2, 1.033}, {0.7, 1.4, 1.008},
    {1.5, 0.4, 0.975}, {1.5, 0.6, 0.943}, {1.5, 1.2, 0.948}, {1.5, 1.4, 0.987},
};

// f2 = sf_Y / sf_X for the parallel systems of scenario 2.
inline const std::vector<RefValue> kF2Refs{
    {0.7, 1.9524, 521403.0}, {0.7, 1.9528, 503289.0}, {0.7, 1.9536, 703257.0},
    {1.5, 1.9524, 558646.0}, {1.5, 1.9528, 539238.0}, {1.5, 1.954, 727174.0},
};

// f3 = cdf_Y / cdf_X and f4 = sf_Y / sf_X for the parallel systems of scenario 3.
inline const std::vector<RefValue> kF3Refs{
    {0.6, 0.085, 0.0512}, {0.6, 0.086, 0.0488}, {0.6, 0.087, 0.0513},
};
inline const std::vector<RefValue> kF4Refs{
    {0.6, 9.6, 1.453e6}, {0.6, 9.8, 2.729e6}, {0.6, 9.9, 2.646e6},
};

}  // namespace ecd::scenarios
