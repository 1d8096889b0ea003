#pragma once

// Lifetime distributions of the minimum (series) and maximum (parallel) of n
// independent heterogeneous ECD components. All products are accumulated as
// sums of per-component log terms, sorted before summation so the results are
// exactly invariant under permutation of the components.

#include <vector>

#include "ecd/ecd_core.hpp"

namespace ecd {

struct ComponentSet {
    std::vector<ECDParams> components;

    explicit ComponentSet(std::vector<ECDParams> comps) : components(std::move(comps)) {
        if (components.empty())
            throw std::invalid_argument("ComponentSet: need at least one component");
    }
};

enum class SystemKind { Series, Parallel };

struct SystemSpec {
    ComponentSet components;
    SystemKind kind;
};

// Joint log sf / log cdf of a system at x. Saturation flags mark the two ways
// a tail probability can fall below every representable double:
//   sf_saturated  — survival underflowed (deep right tail),
//   cdf_saturated — distribution underflowed (left edge of the support).
// Ratio-based callers must exclude saturated points rather than divide 0/0.
struct SystemLogs {
    double log_sf;
    double log_cdf;
    bool sf_saturated;
    bool cdf_saturated;
};
SystemLogs system_logs(const SystemSpec& s, double x);

// Series system: survival is the product of component survivals.
Probability series_sf(const ComponentSet& c, double x);
LogProbability series_log_sf(const ComponentSet& c, double x);
Probability series_cdf(const ComponentSet& c, double x);
LogProbability series_log_cdf(const ComponentSet& c, double x);

// Parallel system: distribution is the product of component distributions.
Probability parallel_cdf(const ComponentSet& c, double x);
LogProbability parallel_log_cdf(const ComponentSet& c, double x);
Probability parallel_sf(const ComponentSet& c, double x);
LogProbability parallel_log_sf(const ComponentSet& c, double x);

// Density of a parallel system whose components share beta and lambda, where
// the product collapses to a single ECD with alpha = sum of the alphas:
//   (sum alpha_k) (1 - e^u)^{sum alpha_k - 1} beta lambda x^{beta-1} e^{u + x^beta}.
// Rejects heterogeneous beta or lambda.
double parallel_pdf_common(const ComponentSet& c, double x);

// Ratio of two such densities, density(b) / density(a), in closed form:
//   (sum alpha_b / sum alpha_a) * (1 - e^u)^{sum alpha_b - sum alpha_a}.
// Monotone nondecreasing in x iff sum alpha_a <= sum alpha_b. Both sets must
// share one common (beta, lambda).
double lr_ratio_common(const ComponentSet& a, const ComponentSet& b, double x);

// Analytic log density of either system kind, valid for heterogeneous
// components: the minimum's hazard is the sum of component hazards and the
// maximum's reversed hazard is the sum of component reversed hazards, so
//   series:   log_sf  + log(sum hazard_k)
//   parallel: log_cdf + log(sum reversed_hazard_k)
// with both inner sums taken via logsumexp. Returns -inf where the density
// underflows (saturated deep tail).
double system_log_pdf(const SystemSpec& s, double x);

}  // namespace ecd
