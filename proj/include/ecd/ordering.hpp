#pragma once

// Grid-based verdicts for the four stochastic orders between two systems of
// the same kind, with counterexample witnesses. Orders are certified on the
// supplied grid only — nothing here claims anything between or beyond the
// sampled points. All ratio comparisons happen on log scale, never by raw
// division of tail probabilities.

#include <cstddef>
#include <optional>
#include <utility>

#include "ecd/grid.hpp"
#include "ecd/systems.hpp"

namespace ecd {

enum class Relation { ST, HR, RH, LR };
enum class Direction { A_le_B, B_le_A, Neither };

// A grid point where one side's tail probability exceeds the other's beyond
// tolerance (st crossings).
struct PointWitness {
    double x;
    double value_a;
    double value_b;
};

// Three grid abscissae whose ratio values rise-then-fall or fall-then-rise
// beyond tolerance (monotonicity violations for hr/rh/lr).
struct TripleWitness {
    double x1, x2, x3;
    double r1, r2, r3;
};

struct OrderingVerdict {
    Relation relation;
    Direction direction;
    std::vector<PointWitness> point_witnesses;
    std::vector<TripleWitness> triple_witnesses;
    std::vector<double> saturated_points;  // excluded from evaluation, reported
    bool degenerate_equal = false;  // both directions held (ties / constant ratio)
};

// A ≤_st B: sf_A <= sf_B at every non-saturated grid point (log-scale
// comparison, relative tolerance 1e-12).
OrderingVerdict check_st(const SystemSpec& a, const SystemSpec& b, const Grid& g);

// A ≤_hr B: sf_B / sf_A nondecreasing across the grid (log-scale steps,
// relative tolerance 1e-9 per step).
OrderingVerdict check_hr(const SystemSpec& a, const SystemSpec& b, const Grid& g);

// A ≤_rh B: cdf_B / cdf_A nondecreasing across the grid.
OrderingVerdict check_rh(const SystemSpec& a, const SystemSpec& b, const Grid& g);

// A ≤_lr B: density_B / density_A nondecreasing across the grid. Densities
// come from the closed form when both are parallel systems sharing one
// common (beta, lambda), and from the analytic hazard/reversed-hazard sum
// decomposition otherwise.
OrderingVerdict check_lr(const SystemSpec& a, const SystemSpec& b, const Grid& g);

struct ViolationTriple {
    std::size_t i, j, k;
};

// First rise-then-fall or fall-then-rise triple i < j < k in a (x, ratio)
// sequence, with differences counted only beyond relative tolerance 1e-9.
std::optional<ViolationTriple> find_violation(const std::vector<std::pair<double, double>>& values);

// 400 log-spaced points covering the central 99.98% probability mass of the
// union of both systems' components: from the smallest component 1e-4
// quantile to the largest component 1-1e-4 quantile.
Grid default_grid(const SystemSpec& a, const SystemSpec& b, std::size_t n = 400);

}  // namespace ecd
