#include "ecd/ordering.hpp"

#include <cmath>
#include <limits>

namespace ecd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStTol = 1e-12;    // log-scale slack for pointwise sf comparison
constexpr double kStepTol = 1e-9;   // log-scale slack per ratio step (relative on the ratio)

void require_same_kind(const SystemSpec& a, const SystemSpec& b) {
    if (a.kind != b.kind)
        throw std::invalid_argument("ordering: both systems must be of the same kind");
}

// Generic monotonicity verdict over a log-ratio sequence. `ratios` holds
// (x, log ratio) at the non-saturated grid points.
OrderingVerdict ratio_verdict(Relation rel, std::vector<std::pair<double, double>> ratios,
                              std::vector<double> saturated) {
    if (ratios.size() < 2)
        throw std::runtime_error("ordering: fewer than two usable grid points (all saturated)");

    bool nondecreasing = true, nonincreasing = true;
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        const double step = ratios[i].second - ratios[i - 1].second;
        if (step < -kStepTol) nondecreasing = false;
        if (step > kStepTol) nonincreasing = false;
    }

    OrderingVerdict v;
    v.relation = rel;
    v.saturated_points = std::move(saturated);
    if (nondecreasing && nonincreasing) {
        v.direction = Direction::A_le_B;  // constant ratio: both orders hold
        v.degenerate_equal = true;
        return v;
    }
    if (nondecreasing) {
        v.direction = Direction::A_le_B;
        return v;
    }
    if (nonincreasing) {
        v.direction = Direction::B_le_A;
        return v;
    }

    v.direction = Direction::Neither;
    // Witness triples on log scale with absolute tolerance == the step slack;
    // report the ratios themselves (exped) to the caller.
    auto push_witness = [&](const ViolationTriple& t) {
        v.triple_witnesses.push_back({ratios[t.i].first, ratios[t.j].first, ratios[t.k].first,
                                      std::exp(ratios[t.i].second), std::exp(ratios[t.j].second),
                                      std::exp(ratios[t.k].second)});
    };
    // Up-down pass: lowest point so far, then a significant rise, then a fall.
    {
        std::size_t lo = 0;
        std::optional<std::size_t> peak;
        for (std::size_t idx = 1; idx < ratios.size(); ++idx) {
            const double r = ratios[idx].second;
            if (!peak) {
                if (r > ratios[lo].second + kStepTol) peak = idx;
                else if (r < ratios[lo].second) lo = idx;
            } else if (r < ratios[*peak].second - kStepTol) {
                push_witness({lo, *peak, idx});
                break;
            } else if (r > ratios[*peak].second) {
                peak = idx;
            }
        }
    }
    // Down-up pass, mirrored.
    {
        std::size_t hi = 0;
        std::optional<std::size_t> valley;
        for (std::size_t idx = 1; idx < ratios.size(); ++idx) {
            const double r = ratios[idx].second;
            if (!valley) {
                if (r < ratios[hi].second - kStepTol) valley = idx;
                else if (r > ratios[hi].second) hi = idx;
            } else if (r > ratios[*valley].second + kStepTol) {
                push_witness({hi, *valley, idx});
                break;
            } else if (r < ratios[*valley].second) {
                valley = idx;
            }
        }
    }
    return v;
}

enum class TailSide { Survival, Distribution };

// Collect (x, log ratio B/A) over the grid for the requested tail quantity,
// excluding points where either side saturated.
std::pair<std::vector<std::pair<double, double>>, std::vector<double>> gather_ratios(
    const SystemSpec& a, const SystemSpec& b, const Grid& g, TailSide side) {
    std::vector<std::pair<double, double>> ratios;
    std::vector<double> saturated;
    ratios.reserve(g.points.size());
    for (double x : g.points) {
        const SystemLogs la = system_logs(a, x);
        const SystemLogs lb = system_logs(b, x);
        const bool bad = side == TailSide::Survival ? (la.sf_saturated || lb.sf_saturated)
                                                    : (la.cdf_saturated || lb.cdf_saturated);
        if (bad) {
            saturated.push_back(x);
            continue;
        }
        const double ra = side == TailSide::Survival ? la.log_sf : la.log_cdf;
        const double rb = side == TailSide::Survival ? lb.log_sf : lb.log_cdf;
        ratios.emplace_back(x, rb - ra);
    }
    return {std::move(ratios), std::move(saturated)};
}

}  // namespace

OrderingVerdict check_st(const SystemSpec& a, const SystemSpec& b, const Grid& g) {
    require_same_kind(a, b);

    OrderingVerdict v;
    v.relation = Relation::ST;
    bool a_le_b = true, b_le_a = true;
    std::vector<PointWitness> a_exceeds, b_exceeds;
    std::size_t usable = 0;

    for (double x : g.points) {
        const SystemLogs la = system_logs(a, x);
        const SystemLogs lb = system_logs(b, x);
        if (la.sf_saturated || lb.sf_saturated) {
            v.saturated_points.push_back(x);
            continue;
        }
        ++usable;
        // log-scale comparison == relative tolerance on the survival values
        if (la.log_sf > lb.log_sf + kStTol) {
            a_le_b = false;
            a_exceeds.push_back({x, std::exp(la.log_sf), std::exp(lb.log_sf)});
        }
        if (lb.log_sf > la.log_sf + kStTol) {
            b_le_a = false;
            b_exceeds.push_back({x, std::exp(la.log_sf), std::exp(lb.log_sf)});
        }
    }
    if (usable == 0)
        throw std::runtime_error("check_st: every grid point saturated");

    if (a_le_b && b_le_a) {
        v.direction = Direction::A_le_B;
        v.degenerate_equal = true;  // zero gap everywhere
    } else if (a_le_b) {
        v.direction = Direction::A_le_B;
    } else if (b_le_a) {
        v.direction = Direction::B_le_A;
    } else {
        v.direction = Direction::Neither;
        v.point_witnesses = std::move(a_exceeds);
        v.point_witnesses.insert(v.point_witnesses.end(), b_exceeds.begin(), b_exceeds.end());
    }
    return v;
}

OrderingVerdict check_hr(const SystemSpec& a, const SystemSpec& b, const Grid& g) {
    require_same_kind(a, b);
    auto [ratios, saturated] = gather_ratios(a, b, g, TailSide::Survival);
    return ratio_verdict(Relation::HR, std::move(ratios), std::move(saturated));
}

OrderingVerdict check_rh(const SystemSpec& a, const SystemSpec& b, const Grid& g) {
    require_same_kind(a, b);
    auto [ratios, saturated] = gather_ratios(a, b, g, TailSide::Distribution);
    return ratio_verdict(Relation::RH, std::move(ratios), std::move(saturated));
}

namespace {

bool common_beta_lambda_parallel(const SystemSpec& a, const SystemSpec& b) {
    if (a.kind != SystemKind::Parallel) return false;
    const double beta = a.components.components.front().beta;
    const double lambda = a.components.components.front().lambda;
    for (const auto& p : a.components.components)
        if (p.beta != beta || p.lambda != lambda) return false;
    for (const auto& p : b.components.components)
        if (p.beta != beta || p.lambda != lambda) return false;
    return true;
}

}  // namespace

OrderingVerdict check_lr(const SystemSpec& a, const SystemSpec& b, const Grid& g) {
    require_same_kind(a, b);

    std::vector<std::pair<double, double>> ratios;
    std::vector<double> saturated;
    if (common_beta_lambda_parallel(a, b)) {
        // Closed form: log ratio = log(sum alpha_b) - log(sum alpha_a)
        //                        + (sum alpha_b - sum alpha_a) * log chen_cdf.
        double ta = 0.0, tb = 0.0;
        for (const auto& p : a.components.components) ta += p.alpha;
        for (const auto& p : b.components.components) tb += p.alpha;
        const auto& front = a.components.components.front();
        const ECDParams chen(1.0, front.beta, front.lambda);
        for (double x : g.points) {
            const double lchen = component_logs(chen, x).log_cdf;
            ratios.emplace_back(x, std::log(tb) - std::log(ta) + (tb - ta) * lchen);
        }
    } else {
        for (double x : g.points) {
            const double lpa = system_log_pdf(a, x);
            const double lpb = system_log_pdf(b, x);
            if (lpa == -kInf || lpb == -kInf) {
                saturated.push_back(x);
                continue;
            }
            ratios.emplace_back(x, lpb - lpa);
        }
    }
    return ratio_verdict(Relation::LR, std::move(ratios), std::move(saturated));
}

std::optional<ViolationTriple> find_violation(
    const std::vector<std::pair<double, double>>& values) {
    if (values.size() < 3) return std::nullopt;

    const auto sig_gt = [](double x, double y) {
        return x - y > 1e-9 * std::max(std::abs(x), std::abs(y));
    };

    // Up-down pass.
    {
        std::size_t lo = 0;
        std::optional<std::size_t> peak;
        for (std::size_t idx = 1; idx < values.size(); ++idx) {
            const double r = values[idx].second;
            if (!peak) {
                if (sig_gt(r, values[lo].second)) peak = idx;
                else if (r < values[lo].second) lo = idx;
            } else if (sig_gt(values[*peak].second, r)) {
                return ViolationTriple{lo, *peak, idx};
            } else if (r > values[*peak].second) {
                peak = idx;
            }
        }
    }
    // Down-up pass.
    {
        std::size_t hi = 0;
        std::optional<std::size_t> valley;
        for (std::size_t idx = 1; idx < values.size(); ++idx) {
            const double r = values[idx].second;
            if (!valley) {
                if (sig_gt(values[hi].second, r)) valley = idx;
                else if (r > values[hi].second) hi = idx;
            } else if (sig_gt(r, values[*valley].second)) {
                return ViolationTriple{hi, *valley, idx};
            } else if (r < values[*valley].second) {
                valley = idx;
            }
        }
    }
    return std::nullopt;
}

Grid default_grid(const SystemSpec& a, const SystemSpec& b, std::size_t n) {
    double lo = kInf, hi = 0.0;
    for (const SystemSpec* s : {&a, &b}) {
        for (const auto& p : s->components.components) {
            lo = std::min(lo, quantile(p, 1e-4));
            hi = std::max(hi, quantile(p, 1.0 - 1e-4));
        }
    }
    return logspace_grid(lo, hi, n);
}

}  // namespace ecd
