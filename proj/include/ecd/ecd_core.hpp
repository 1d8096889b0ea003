#pragma once

// Single-component Exponentiated Chen distribution:
//
//   F(x; alpha, beta, lambda) = (1 - e^{lambda (1 - e^{x^beta})})^alpha ,  x > 0
//
// with alpha = 1 reducing to the Chen distribution. Everything tail-sensitive
// is computed in log space through log1p/expm1 so that survival probabilities
// of order e^{-700} stay meaningful; see component_logs for the scheme.

#include <stdexcept>
#include <vector>

namespace ecd {

struct ECDParams {
    double alpha;
    double beta;
    double lambda;

    ECDParams(double alpha_, double beta_, double lambda_)
        : alpha(alpha_), beta(beta_), lambda(lambda_) {
        if (!(alpha > 0.0) || !(beta > 0.0) || !(lambda > 0.0))
            throw std::domain_error("ECDParams: alpha, beta, lambda must all be positive");
    }
};

// Value wrappers that check their range once at construction. Both convert
// implicitly to double so call sites stay arithmetic-friendly.
struct Probability {
    double value;
    explicit Probability(double v) : value(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::domain_error("Probability: value outside [0,1]");
    }
    operator double() const { return value; }
};

struct LogProbability {
    double value;  // log of a probability: <= 0, -inf encodes probability 0
    explicit LogProbability(double v) : value(v) {
        if (v > 0.0 || v != v)
            throw std::domain_error("LogProbability: value must be <= 0");
    }
    operator double() const { return value; }
};

// log(1 - e^u) for u <= 0, stable in both regimes: log1p(-e^u) once e^u < 1/2,
// log(-expm1(u)) otherwise. Returns -inf at u == 0.
double log1mexp(double u);

// Sum in a fixed (sorted) order so results are exactly permutation-invariant.
double canonical_sum(std::vector<double> terms);

// log(sum of e^{v_i}), canonicalized like canonical_sum; -inf for an all--inf input.
double canonical_logsumexp(std::vector<double> terms);

// Joint log cdf / log sf of one component. Pipeline (u = lambda (1 - e^{x^beta})):
//   t = e^{beta ln x}; overflow of x^beta or of lambda (e^t - 1) means the
//   survival is below every representable double: the point is "saturated"
//   (log_cdf = 0, log_sf = -inf) and ratio-based callers must exclude it.
//   log_cdf = alpha * log1mexp(u)
//   log_sf  = log1mexp(log_cdf), except for u < -700 where the first-order
//   expansion log(alpha) + u is used: it is exact to ~e^{-300} relative there
//   and avoids the subnormal rounding exp(u) suffers past u ~ -708.
// x == 0 is allowed by continuity (cdf 0, sf 1); x < 0 is a domain error.
struct CompLogs {
    double log_cdf;
    double log_sf;
    bool saturated;
};
CompLogs component_logs(const ECDParams& p, double x);

Probability chen_cdf(double beta, double lambda, double x);
Probability cdf(const ECDParams& p, double x);
LogProbability log_cdf(const ECDParams& p, double x);
Probability sf(const ECDParams& p, double x);
LogProbability log_sf(const ECDParams& p, double x);

// Density alpha (1-e^u)^{alpha-1} beta lambda x^{beta-1} e^{u + x^beta} and its log.
double pdf(const ECDParams& p, double x);
double log_pdf(const ECDParams& p, double x);

// pdf/cdf in closed form: alpha beta lambda x^{beta-1} e^{x^beta} e^u / (1 - e^u).
double reversed_hazard(const ECDParams& p, double x);

// pdf/sf evaluated as exp(log_pdf - log_sf) so deep tails survive; throws
// std::overflow_error once sf drops below the smallest positive normal double.
double hazard(const ECDParams& p, double x);

// Closed-form inverse of the cdf: monotone in u, exact roundtrip to ~1e-12.
double quantile(const ECDParams& p, double u);

// Survival of T = (e^{X^beta} - 1)^{1/beta} for X ~ Chen(beta, lambda), computed
// through the Chen sf at x = (log(1 + t^beta))^{1/beta}. Analytically equal to
// the Weibull survival e^{-lambda t^beta}, which tests assert.
Probability weibull_transform_sf(double beta, double lambda, double t);

}  // namespace ecd
