#pragma once

// Evaluation grids for ordering checks and scans: strictly increasing,
// strictly positive abscissae.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ecd {

struct Grid {
    std::vector<double> points;

    explicit Grid(std::vector<double> pts) : points(std::move(pts)) {
        if (points.size() < 2)
            throw std::invalid_argument("Grid: need at least two points");
        if (!(points.front() > 0.0))
            throw std::invalid_argument("Grid: points must be positive");
        for (std::size_t i = 1; i < points.size(); ++i)
            if (!(points[i] > points[i - 1]))
                throw std::invalid_argument("Grid: points must be strictly increasing");
    }
};

Grid linspace_grid(double lo, double hi, std::size_t n);
Grid logspace_grid(double lo, double hi, std::size_t n);

}  // namespace ecd
