#include "ecd/systems.hpp"

#include <cmath>
#include <limits>

namespace ecd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kExpOverflow = 709.0;

std::vector<double> gather_log_sf(const ComponentSet& c, double x) {
    std::vector<double> v;
    v.reserve(c.components.size());
    for (const auto& p : c.components) v.push_back(component_logs(p, x).log_sf);
    return v;
}

std::vector<double> gather_log_cdf(const ComponentSet& c, double x) {
    std::vector<double> v;
    v.reserve(c.components.size());
    for (const auto& p : c.components) v.push_back(component_logs(p, x).log_cdf);
    return v;
}

// log(1 - prod e^{terms}) where each term is a log probability. When the sum
// of terms underflows to -0.0 (every factor equal to 1 in doubles), the
// complement is recovered from the factors' own complements: to first order
// 1 - prod(1 - s_k) = sum s_k, exact here to ~1e-300 relative.
double log_complement_of_product(const std::vector<double>& terms,
                                 const std::vector<double>& complement_terms) {
    const double s = canonical_sum(terms);
    if (s == 0.0) return canonical_logsumexp(complement_terms);
    return log1mexp(s);
}

void require_common_beta_lambda(const ComponentSet& c, const char* who) {
    const double beta = c.components.front().beta;
    const double lambda = c.components.front().lambda;
    for (const auto& p : c.components)
        if (p.beta != beta || p.lambda != lambda)
            throw std::invalid_argument(std::string(who) +
                                        ": components must share beta and lambda");
}

double sum_alpha(const ComponentSet& c) {
    std::vector<double> a;
    a.reserve(c.components.size());
    for (const auto& p : c.components) a.push_back(p.alpha);
    return canonical_sum(std::move(a));
}

}  // namespace

LogProbability series_log_sf(const ComponentSet& c, double x) {
    return LogProbability(canonical_sum(gather_log_sf(c, x)));
}

Probability series_sf(const ComponentSet& c, double x) {
    return Probability(std::exp(series_log_sf(c, x)));
}

LogProbability series_log_cdf(const ComponentSet& c, double x) {
    return LogProbability(log_complement_of_product(gather_log_sf(c, x), gather_log_cdf(c, x)));
}

Probability series_cdf(const ComponentSet& c, double x) {
    const double lsf = series_log_sf(c, x);
    if (lsf > -1.0) return Probability(-std::expm1(lsf));  // stable complement near sf = 1
    return Probability(std::exp(series_log_cdf(c, x)));
}

LogProbability parallel_log_cdf(const ComponentSet& c, double x) {
    return LogProbability(canonical_sum(gather_log_cdf(c, x)));
}

Probability parallel_cdf(const ComponentSet& c, double x) {
    return Probability(std::exp(parallel_log_cdf(c, x)));
}

LogProbability parallel_log_sf(const ComponentSet& c, double x) {
    return LogProbability(log_complement_of_product(gather_log_cdf(c, x), gather_log_sf(c, x)));
}

Probability parallel_sf(const ComponentSet& c, double x) {
    const double lcdf = parallel_log_cdf(c, x);
    if (lcdf > -1.0) return Probability(-std::expm1(lcdf));
    return Probability(std::exp(parallel_log_sf(c, x)));
}

SystemLogs system_logs(const SystemSpec& s, double x) {
    SystemLogs out{};
    if (s.kind == SystemKind::Series) {
        out.log_sf = series_log_sf(s.components, x);
        out.log_cdf = series_log_cdf(s.components, x);
    } else {
        out.log_sf = parallel_log_sf(s.components, x);
        out.log_cdf = parallel_log_cdf(s.components, x);
    }
    out.sf_saturated = out.log_sf == -kInf;
    out.cdf_saturated = out.log_cdf == -kInf;
    return out;
}

double parallel_pdf_common(const ComponentSet& c, double x) {
    require_common_beta_lambda(c, "parallel_pdf_common");
    if (!(x > 0.0)) throw std::domain_error("parallel_pdf_common: x must be positive");
    const double total = sum_alpha(c);
    const auto& front = c.components.front();
    return pdf(ECDParams(total, front.beta, front.lambda), x);
}

double lr_ratio_common(const ComponentSet& a, const ComponentSet& b, double x) {
    require_common_beta_lambda(a, "lr_ratio_common");
    require_common_beta_lambda(b, "lr_ratio_common");
    const auto& fa = a.components.front();
    const auto& fb = b.components.front();
    if (fa.beta != fb.beta || fa.lambda != fb.lambda)
        throw std::invalid_argument("lr_ratio_common: the two sets must share beta and lambda");
    if (!(x > 0.0)) throw std::domain_error("lr_ratio_common: x must be positive");

    const double ta = sum_alpha(a);
    const double tb = sum_alpha(b);
    const double lchen = component_logs(ECDParams(1.0, fa.beta, fa.lambda), x).log_cdf;
    return std::exp(std::log(tb) - std::log(ta) + (tb - ta) * lchen);
}

double system_log_pdf(const SystemSpec& s, double x) {
    if (!(x > 0.0)) throw std::domain_error("system_log_pdf: x must be positive");

    if (s.kind == SystemKind::Series) {
        // density = series_sf * sum of component hazards
        std::vector<double> log_haz;
        log_haz.reserve(s.components.components.size());
        for (const auto& p : s.components.components) {
            const CompLogs cl = component_logs(p, x);
            if (cl.saturated) return -kInf;  // survival (hence density) underflowed
            log_haz.push_back(log_pdf(p, x) - cl.log_sf);
        }
        return canonical_sum(gather_log_sf(s.components, x)) + canonical_logsumexp(std::move(log_haz));
    }

    // density = parallel_cdf * sum of component reversed hazards
    std::vector<double> log_rhaz;
    log_rhaz.reserve(s.components.components.size());
    for (const auto& p : s.components.components) {
        const CompLogs cl = component_logs(p, x);
        if (cl.saturated || cl.log_cdf == -kInf) {
            log_rhaz.push_back(-kInf);  // contributes nothing
            continue;
        }
        const double blx = p.beta * std::log(x);
        const double t = std::exp(blx);
        const double u = -p.lambda * std::expm1(t);
        log_rhaz.push_back(std::log(p.alpha) + std::log(p.beta) + std::log(p.lambda) +
                           (p.beta == 1.0 ? 0.0 : (p.beta - 1.0) * std::log(x)) + t + u -
                           cl.log_cdf / p.alpha);
    }
    const double lse = canonical_logsumexp(std::move(log_rhaz));
    if (lse == -kInf) return -kInf;
    return canonical_sum(gather_log_cdf(s.components, x)) + lse;
}

}  // namespace ecd
