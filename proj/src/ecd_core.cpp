#include "ecd/ecd_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ecd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);
// exp() overflows past ~709.78; anything above 709 is "infinite" for our purposes.
constexpr double kExpOverflow = 709.0;
// Below this, exp(u) is subnormal-degraded; the first-order log_sf is exact instead.
constexpr double kFirstOrderCut = -700.0;
const double kLogMinNormal = std::log(std::numeric_limits<double>::min());

void require_positive_x(double x, const char* who) {
    if (!(x >= 0.0))
        throw std::domain_error(std::string(who) + ": x must be nonnegative");
}

// (beta - 1) * ln(x) with the beta == 1 case short-circuited: 0 * log(0) would
// otherwise produce NaN as x -> 0.
double pow_term(double beta, double x) {
    return beta == 1.0 ? 0.0 : (beta - 1.0) * std::log(x);
}

}  // namespace

double log1mexp(double u) {
    if (u > 0.0) throw std::domain_error("log1mexp: argument must be <= 0");
    if (u == 0.0 && !std::signbit(u)) return -kInf;
    return u < -kLn2 ? std::log1p(-std::exp(u)) : std::log(-std::expm1(u));
}

double canonical_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
}

double canonical_logsumexp(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    const double m = terms.empty() ? -kInf : terms.back();
    if (m == -kInf) return -kInf;
    double s = 0.0;
    for (double t : terms) s += std::exp(t - m);
    return m + std::log(s);
}

CompLogs component_logs(const ECDParams& p, double x) {
    require_positive_x(x, "component_logs");
    if (x == 0.0) return {-kInf, 0.0, false};

    const double blx = p.beta * std::log(x);
    if (blx > kExpOverflow) return {0.0, -kInf, true};
    const double t = std::exp(blx);
    if (t > kExpOverflow) return {0.0, -kInf, true};

    const double u = -p.lambda * std::expm1(t);  // lambda (1 - e^{x^beta}) <= 0
    if (u == -kInf) return {0.0, -kInf, true};
    if (u == 0.0) return {-kInf, 0.0, false};  // x so small that lambda(e^t - 1) underflowed

    const double lcdf = p.alpha * log1mexp(u);
    double lsf;
    if (u < kFirstOrderCut) {
        lsf = std::log(p.alpha) + u;  // sf = alpha e^u (1 + O(e^u)); exact here
    } else {
        lsf = log1mexp(lcdf);
    }
    return {lcdf, lsf, false};
}

Probability chen_cdf(double beta, double lambda, double x) {
    return cdf(ECDParams(1.0, beta, lambda), x);
}

Probability cdf(const ECDParams& p, double x) {
    return Probability(std::exp(component_logs(p, x).log_cdf));
}

LogProbability log_cdf(const ECDParams& p, double x) {
    return LogProbability(component_logs(p, x).log_cdf);
}

Probability sf(const ECDParams& p, double x) {
    const CompLogs cl = component_logs(p, x);
    // -expm1(log_cdf) keeps the complement exact when cdf is within ulps of 1.
    if (cl.saturated) return Probability(0.0);
    return Probability(cl.log_sf > -1.0 ? -std::expm1(cl.log_cdf) : std::exp(cl.log_sf));
}

LogProbability log_sf(const ECDParams& p, double x) {
    return LogProbability(component_logs(p, x).log_sf);
}

double log_pdf(const ECDParams& p, double x) {
    require_positive_x(x, "log_pdf");
    if (x == 0.0) throw std::domain_error("log_pdf: x must be positive");

    const double blx = p.beta * std::log(x);
    if (blx > kExpOverflow) return -kInf;  // u + t -> -inf: density underflows
    const double t = std::exp(blx);
    if (t > kExpOverflow) return -kInf;
    const double u = -p.lambda * std::expm1(t);
    if (u == -kInf) return -kInf;

    const double lchen = u == 0.0 ? -kInf : log1mexp(u);  // log Chen cdf
    // alpha (1-e^u)^{alpha-1} beta lambda x^{beta-1} e^{u + t}
    return std::log(p.alpha) + (p.alpha - 1.0) * lchen + std::log(p.beta) +
           std::log(p.lambda) + pow_term(p.beta, x) + u + t;
}

double pdf(const ECDParams& p, double x) {
    return std::exp(log_pdf(p, x));
}

double reversed_hazard(const ECDParams& p, double x) {
    require_positive_x(x, "reversed_hazard");
    if (x == 0.0) throw std::domain_error("reversed_hazard: x must be positive");

    const double blx = p.beta * std::log(x);
    const double t = blx > kExpOverflow ? kInf : std::exp(blx);
    if (t == kInf || t > kExpOverflow) return 0.0;  // cdf = 1, pdf -> 0
    const double u = -p.lambda * std::expm1(t);
    if (u == -kInf) return 0.0;
    if (u == 0.0) return kInf;  // x -> 0: cdf vanishes faster than pdf

    // alpha stays outside the exp so it scales the result exactly
    return p.alpha * std::exp(std::log(p.beta) + std::log(p.lambda) +
                              pow_term(p.beta, x) + t + u - log1mexp(u));
}

double hazard(const ECDParams& p, double x) {
    require_positive_x(x, "hazard");
    if (x == 0.0) throw std::domain_error("hazard: x must be positive");
    const CompLogs cl = component_logs(p, x);
    if (cl.log_sf < kLogMinNormal)
        throw std::overflow_error("hazard: survival underflows working precision at this x");
    return std::exp(log_pdf(p, x) - cl.log_sf);
}

double quantile(const ECDParams& p, double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("quantile: u must lie in (0,1)");
    // Invert (1 - e^w)^alpha = u with w = lambda (1 - e^{x^beta}):
    //   w = log(1 - u^{1/alpha}),  x = (log(1 - w/lambda))^{1/beta}
    const double w = log1mexp(std::log(u) / p.alpha);
    const double t = std::log1p(-w / p.lambda);  // x^beta
    return std::exp(std::log(t) / p.beta);
}

Probability weibull_transform_sf(double beta, double lambda, double t) {
    if (!(beta > 0.0) || !(lambda > 0.0))
        throw std::domain_error("weibull_transform_sf: beta, lambda must be positive");
    if (!(t > 0.0))
        throw std::domain_error("weibull_transform_sf: t must be positive");
    // T = (e^{X^beta} - 1)^{1/beta}  maps back to  x = (log(1 + t^beta))^{1/beta}.
    const double tb = std::exp(beta * std::log(t));
    const double x = std::exp(std::log(std::log1p(tb)) / beta);
    return sf(ECDParams(1.0, beta, lambda), x);
}

}  // namespace ecd
