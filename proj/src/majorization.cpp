#include "ecd/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ecd/rng.hpp"
#include "ecd/systems.hpp"

namespace ecd {

namespace {

constexpr double kTotalTol = 1e-9;
constexpr double kPartialTol = 1e-12;

std::vector<double> sorted_ascending(const ParamVector& v) {
    std::vector<double> s = v.entries;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

bool majorizes(const ParamVector& a, const ParamVector& b) {
    if (a.entries.size() != b.entries.size())
        throw std::invalid_argument("majorizes: vectors must have equal length");

    const std::vector<double> sa = sorted_ascending(a);
    const std::vector<double> sb = sorted_ascending(b);
    double pa = 0.0, pb = 0.0;
    for (std::size_t k = 0; k + 1 < sa.size(); ++k) {
        pa += sa[k];
        pb += sb[k];
        if (pa < pb - kPartialTol) return false;
    }
    pa += sa.back();
    pb += sb.back();
    return std::abs(pa - pb) <= kTotalTol;
}

ParamVector random_majorized(const ParamVector& b, std::uint64_t seed) {
    RngEngine gen(seed);
    std::vector<double> a = b.entries;
    const std::size_t n = a.size();

    const int steps = 1 + static_cast<int>(uniform_open(gen) * 3.0);  // 1, 2 or 3
    for (int s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(uniform_open(gen) * static_cast<double>(n));
        std::size_t j = static_cast<std::size_t>(uniform_open(gen) * static_cast<double>(n - 1));
        i = std::min(i, n - 1);
        if (j >= i) ++j;  // distinct pair
        const double t = uniform_open(gen);
        const double ai = t * a[i] + (1.0 - t) * a[j];
        const double aj = (1.0 - t) * a[i] + t * a[j];
        a[i] = ai;
        a[j] = aj;
    }
    return ParamVector(std::move(a));
}

double psi1(double alpha, double y) {
    if (!(alpha > 0.0)) throw std::domain_error("psi1: alpha must be positive");
    if (!(y > 0.0 && y < 1.0)) throw std::domain_error("psi1: y must lie in (0,1)");
    const double l1 = std::log1p(-y);                           // log(1-y)
    return y * std::exp((alpha - 1.0) * l1) / (-std::expm1(alpha * l1));
}

double phi1(double lambda, double x, double beta) {
    if (!(lambda > 0.0) || !(x > 0.0) || !(beta > 0.0))
        throw std::domain_error("phi1: all arguments must be positive");
    const double u = -lambda * std::expm1(std::exp(beta * std::log(x)));
    return 1.0 - 1.0 / (-std::expm1(u));
}

double phi2(double t, double lambda) {
    if (!(t > 0.0) || !(lambda > 0.0))
        throw std::domain_error("phi2: all arguments must be positive");
    const double u = -lambda * std::expm1(t);
    return std::exp(std::log(t) + u + t - log1mexp(u));
}

double psi2(double alpha, double x, double beta, double lambda) {
    if (!(alpha > 0.0) || !(x > 0.0) || !(beta > 0.0) || !(lambda > 0.0))
        throw std::domain_error("psi2: all arguments must be positive");
    const double u = -lambda * std::expm1(std::exp(beta * std::log(x)));
    const double w = alpha * log1mexp(u);  // log chen_cdf^alpha
    return 1.0 - 1.0 / (-std::expm1(w));
}

namespace {

// The scanned functional psi(vector, x) per target.
std::function<double(const std::vector<double>&, double)> target_functional(SchurTarget target,
                                                                            const SchurFixed& f) {
    auto build = [](const std::vector<ECDParams>& comps) { return ComponentSet(comps); };
    switch (target) {
        case SchurTarget::SeriesSF_lambda:
            return [f, build](const std::vector<double>& v, double x) {
                std::vector<ECDParams> c;
                for (double l : v) c.emplace_back(f.alpha, f.beta, l);
                return static_cast<double>(series_sf(build(c), x));
            };
        case SchurTarget::ParallelCDF_lambda:
            return [f, build](const std::vector<double>& v, double x) {
                std::vector<ECDParams> c;
                for (double l : v) c.emplace_back(f.alpha, f.beta, l);
                return static_cast<double>(parallel_cdf(build(c), x));
            };
        case SchurTarget::ParallelCDF_beta:
            return [f, build](const std::vector<double>& v, double x) {
                std::vector<ECDParams> c;
                for (double b : v) c.emplace_back(f.alpha, b, f.lambda);
                return static_cast<double>(parallel_cdf(build(c), x));
            };
        case SchurTarget::SeriesSF_alpha:
            return [f, build](const std::vector<double>& v, double x) {
                std::vector<ECDParams> c;
                for (double a : v) c.emplace_back(a, f.beta, f.lambda);
                return static_cast<double>(series_sf(build(c), x));
            };
    }
    throw std::logic_error("schur_scan: unknown target");
}

}  // namespace

SchurReport schur_scan(SchurTarget target, const SchurFixed& fixed, const ParamVector& point,
                       const Grid& x_grid) {
    const auto psi = target_functional(target, fixed);
    const std::vector<double>& a = point.entries;
    const std::size_t n = a.size();

    bool saw_pos = false, saw_neg = false;
    SchurViolation max_pos{0, 0, 0.0, 0.0}, min_neg{0, 0, 0.0, 0.0};

    for (double x : x_grid.points) {
        // Central-difference partial derivatives at this x.
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double h = 1e-6 * std::max(1.0, std::abs(a[i]));
            std::vector<double> vp = a, vm = a;
            vp[i] += h;
            vm[i] -= h;
            d[i] = (psi(vp, x) - psi(vm, x)) / (2.0 * h);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (a[i] == a[j]) continue;  // Delta identically zero, uninformative
                const double delta = (a[i] - a[j]) * (d[i] - d[j]);
                const double tol =
                    1e-10 * std::max(1.0, std::abs(a[i] - a[j]) * (std::abs(d[i]) + std::abs(d[j])));
                if (delta > tol) {
                    if (!saw_pos || delta > max_pos.delta) max_pos = {i, j, x, delta};
                    saw_pos = true;
                } else if (delta < -tol) {
                    if (!saw_neg || delta < min_neg.delta) min_neg = {i, j, x, delta};
                    saw_neg = true;
                }
            }
        }
    }

    if (saw_pos && saw_neg) {
        // Mixed evidence: report the extreme sample of the weaker (minority) sign.
        const bool positive_dominates = max_pos.delta >= -min_neg.delta;
        return {SchurVerdict::Indeterminate, positive_dominates ? min_neg : max_pos};
    }
    if (saw_pos) return {SchurVerdict::SchurConvex, std::nullopt};
    if (saw_neg) return {SchurVerdict::SchurConcave, std::nullopt};
    return {SchurVerdict::Indeterminate, std::nullopt};  // all ties: no evidence
}

}  // namespace ecd
