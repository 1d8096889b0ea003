#include "ecd/grid.hpp"

#include <cmath>

namespace ecd {

Grid linspace_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw std::invalid_argument("linspace_grid: need 0 < lo < hi and n >= 2");
    std::vector<double> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    pts.back() = hi;
    return Grid(std::move(pts));
}

Grid logspace_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw std::invalid_argument("logspace_grid: need 0 < lo < hi and n >= 2");
    const double llo = std::log(lo), lhi = std::log(hi);
    std::vector<double> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
    pts.front() = lo;
    pts.back() = hi;
    return Grid(std::move(pts));
}

}  // namespace ecd
