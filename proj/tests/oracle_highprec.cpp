#include "oracle_highprec.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

// (1 - e^{lambda (1 - e^{x^beta})})^alpha, straight from the definition
Real cdf_real(const Comp& c, double x) {
    if (x <= 0.0) return Real(0);
    const Real xr(x), a(c.alpha), b(c.beta), l(c.lambda);
    const Real t = pow(xr, b);
    if (t > Real(4e8)) return Real(1);  // e^t beyond any digit we compare
    const Real u = -l * (exp(t) - Real(1));
    if (u < Real(-1e9)) return Real(1);
    return pow(Real(1) - exp(u), a);
}

Real sf_real(const Comp& c, double x) { return Real(1) - cdf_real(c, x); }

Real series_sf_real(const std::vector<Comp>& comps, double x) {
    Real s(1);
    for (const auto& c : comps) s *= sf_real(c, x);
    return s;
}

Real parallel_cdf_real(const std::vector<Comp>& comps, double x) {
    Real f(1);
    for (const auto& c : comps) f *= cdf_real(c, x);
    return f;
}

Real parallel_sf_real(const std::vector<Comp>& comps, double x) {
    return Real(1) - parallel_cdf_real(comps, x);
}

}  // namespace

double cdf50(const Comp& c, double x) { return static_cast<double>(cdf_real(c, x)); }

double sf50(const Comp& c, double x) { return static_cast<double>(sf_real(c, x)); }

double series_sf50(const std::vector<Comp>& comps, double x) {
    return static_cast<double>(series_sf_real(comps, x));
}

double parallel_cdf50(const std::vector<Comp>& comps, double x) {
    return static_cast<double>(parallel_cdf_real(comps, x));
}

double parallel_sf50(const std::vector<Comp>& comps, double x) {
    return static_cast<double>(parallel_sf_real(comps, x));
}

double series_sf_ratio50(const std::vector<Comp>& num, const std::vector<Comp>& den,
                         double x) {
    return static_cast<double>(series_sf_real(num, x) / series_sf_real(den, x));
}

double parallel_sf_ratio50(const std::vector<Comp>& num,
                           const std::vector<Comp>& den, double x) {
    return static_cast<double>(parallel_sf_real(num, x) / parallel_sf_real(den, x));
}

double parallel_cdf_ratio50(const std::vector<Comp>& num,
                            const std::vector<Comp>& den, double x) {
    return static_cast<double>(parallel_cdf_real(num, x) / parallel_cdf_real(den, x));
}

}  // namespace oracle
