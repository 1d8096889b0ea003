#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ecd/ordering.hpp"
#include "ecd/scenarios.hpp"

using namespace ecd;
using scenarios::s1_x;
using scenarios::s1_y;
using scenarios::s2_x;
using scenarios::s2_y;
using scenarios::s3_x;
using scenarios::s3_y;
using scenarios::s4_x;
using scenarios::s4_y;

TEST_CASE("usual order on the first scenario follows the shared exponent") {
    // the rate vector of X is majorized by that of Y, so the series lifetimes
    // order one way below the unit exponent and the other way above it
    const Grid g = default_grid(s1_x(0.7), s1_y(0.7));
    const OrderingVerdict v07 = check_st(s1_x(0.7), s1_y(0.7), g);
    CHECK(v07.relation == Relation::ST);
    CHECK(v07.direction == Direction::A_le_B);
    CHECK(v07.point_witnesses.empty());
    CHECK_FALSE(v07.degenerate_equal);

    const OrderingVerdict v15 = check_st(s1_x(1.5), s1_y(1.5), default_grid(s1_x(1.5), s1_y(1.5)));
    CHECK(v15.direction == Direction::B_le_A);

    // swapping the arguments flips the verdict
    const OrderingVerdict sw = check_st(s1_y(0.7), s1_x(0.7), g);
    CHECK(sw.direction == Direction::B_le_A);
}

TEST_CASE("usual order verdict is stable under grid refinement") {
    for (std::size_t n : {200, 400, 800}) {
        const OrderingVerdict v = check_st(s1_x(0.7), s1_y(0.7), default_grid(s1_x(0.7), s1_y(0.7), n));
        CHECK(v.direction == Direction::A_le_B);
    }
}

TEST_CASE("identical systems are degenerate-equal") {
    const OrderingVerdict v = check_st(s1_x(0.7), s1_x(0.7), default_grid(s1_x(0.7), s1_x(0.7)));
    CHECK(v.direction == Direction::A_le_B);
    CHECK(v.degenerate_equal);
}

TEST_CASE("hazard-rate order fails for the first scenario with a witness triple") {
    // the published ratio values at 0.4, 0.6, 1.2, 1.4 rise then fall, which
    // is exactly what the triple witness must capture
    const Grid g(std::vector<double>{0.4, 0.6, 1.2, 1.4});
    const OrderingVerdict v = check_hr(s1_x(0.7), s1_y(0.7), g);
    CHECK(v.relation == Relation::HR);
    CHECK(v.direction == Direction::Neither);
    REQUIRE_FALSE(v.triple_witnesses.empty());
    bool found = false;
    for (const auto& t : v.triple_witnesses)
        if (t.x2 == 0.6 && t.x3 == 1.2) found = true;
    CHECK(found);
    // and the recorded ratios really do rise then fall
    const auto& t = v.triple_witnesses.front();
    CHECK(t.r2 > t.r1);
    CHECK(t.r3 < t.r2);
}

TEST_CASE("hazard-rate order holds for the parallel rearrangement") {
    const OrderingVerdict v =
        check_hr(s2_x(0.7), s2_y(0.7), default_grid(s2_x(0.7), s2_y(0.7)));
    CHECK(v.direction == Direction::A_le_B);
    CHECK(v.triple_witnesses.empty());
}

TEST_CASE("reversed-hazard order fails on the wide third-scenario grid") {
    const Grid g = logspace_grid(0.005, 14.0, 500);
    const OrderingVerdict v = check_rh(s3_x(), s3_y(), g);
    CHECK(v.relation == Relation::RH);
    CHECK(v.direction == Direction::Neither);
    CHECK_FALSE(v.triple_witnesses.empty());
}

TEST_CASE("reversed-hazard order holds for the first-scenario parallel systems") {
    const Grid g = linspace_grid(0.01, 2.0, 200);
    const OrderingVerdict v = check_rh(s2_x(0.7), s2_y(0.7), g);
    CHECK(v.direction == Direction::A_le_B);
}

TEST_CASE("likelihood-ratio order on common-parameter parallel systems") {
    const SystemSpec a{scenarios::with_alphas({0.2, 1.0, 2.4}, 3.0, 2.0), SystemKind::Parallel};
    const SystemSpec b{scenarios::with_alphas({0.4, 1.0, 2.3}, 3.0, 2.0), SystemKind::Parallel};
    const Grid g = default_grid(a, b, 200);
    const OrderingVerdict v = check_lr(a, b, g);
    CHECK(v.relation == Relation::LR);
    CHECK(v.direction == Direction::A_le_B);  // larger exponent total dominates

    // equal exponent totals make the ratio constant: both directions hold
    const SystemSpec beq{scenarios::with_alphas(scenarios::kAlphaStarVec, 3.0, 2.0),
                         SystemKind::Parallel};
    const OrderingVerdict veq = check_lr(a, beq, default_grid(a, beq, 200));
    CHECK(veq.degenerate_equal);
}

TEST_CASE("stronger orders imply the weaker ones on the sampled grid") {
    // lr holds for these parallel systems, so hr, rh, and st must too
    const SystemSpec a{scenarios::with_alphas({0.2, 1.0, 2.4}, 3.0, 2.0), SystemKind::Parallel};
    const SystemSpec b{scenarios::with_alphas({0.4, 1.0, 2.3}, 3.0, 2.0), SystemKind::Parallel};
    const Grid g = default_grid(a, b, 200);
    REQUIRE(check_lr(a, b, g).direction == Direction::A_le_B);
    CHECK(check_hr(a, b, g).direction == Direction::A_le_B);
    CHECK(check_rh(a, b, g).direction == Direction::A_le_B);
    CHECK(check_st(a, b, g).direction == Direction::A_le_B);
}

TEST_CASE("find_violation pinpoints the first non-monotone triple") {
    using P = std::pair<double, double>;
    const std::vector<P> updown{{0.4, 1.032}, {0.6, 1.051}, {1.2, 1.033}, {1.4, 1.008}};
    auto t = find_violation(updown);
    REQUIRE(t.has_value());
    CHECK(t->i == 0);
    CHECK(t->j == 1);
    CHECK(t->k == 2);

    const std::vector<P> downup{{0.1, 2.0}, {0.2, 1.5}, {0.3, 1.8}};
    CHECK(find_violation(downup).has_value());

    const std::vector<P> monotone{{0.1, 1.0}, {0.2, 1.5}, {0.3, 1.8}, {0.4, 2.6}};
    CHECK_FALSE(find_violation(monotone).has_value());
    const std::vector<P> constant{{0.1, 1.0}, {0.2, 1.0}, {0.3, 1.0}};
    CHECK_FALSE(find_violation(constant).has_value());
    // wiggles within relative tolerance do not count
    const std::vector<P> noisy{{0.1, 1.0}, {0.2, 1.0 + 1e-13}, {0.3, 1.0 - 1e-13}, {0.4, 1.0}};
    CHECK_FALSE(find_violation(noisy).has_value());
}

TEST_CASE("saturated points are excluded and reported") {
    // x = 27 with beta = 2 saturates every survival; include safe points too
    const Grid g(std::vector<double>{0.4, 0.8, 27.0});
    const OrderingVerdict v = check_st(s1_x(0.7), s1_y(0.7), g);
    REQUIRE(v.saturated_points.size() == 1);
    CHECK(v.saturated_points[0] == 27.0);
    CHECK(v.direction == Direction::A_le_B);

    // every point saturated: no evidence at all is an error
    const Grid gg(std::vector<double>{27.0, 28.0});
    CHECK_THROWS_AS(check_st(s1_x(0.7), s1_y(0.7), gg), std::runtime_error);
}

TEST_CASE("mismatched system kinds are rejected") {
    const SystemSpec ser = s1_x(0.7);
    const SystemSpec par = s2_y(0.7);
    const Grid g = linspace_grid(0.1, 1.0, 10);
    CHECK_THROWS_AS(check_st(ser, par, g), std::invalid_argument);
    CHECK_THROWS_AS(check_hr(ser, par, g), std::invalid_argument);
}

TEST_CASE("default grid spans the pooled component quantile range") {
    const SystemSpec a = s1_x(0.7);
    const SystemSpec b = s1_y(0.7);
    const Grid g = default_grid(a, b);
    REQUIRE(g.points.size() == 400);

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const SystemSpec* s : {&a, &b})
        for (const auto& p : s->components.components) {
            lo = std::min(lo, quantile(p, 1e-4));
            hi = std::max(hi, quantile(p, 1.0 - 1e-4));
        }
    CHECK(g.points.front() == doctest::Approx(lo).epsilon(1e-12));
    CHECK(g.points.back() == doctest::Approx(hi).epsilon(1e-12));

    // log spacing: constant successive ratios
    const double q0 = g.points[1] / g.points[0];
    const double q1 = g.points[200] / g.points[199];
    CHECK(q0 == doctest::Approx(q1).epsilon(1e-9));
}

TEST_CASE("fourth scenario series systems are stochastically ordered") {
    const Grid g = default_grid(s4_x(), s4_y());
    const OrderingVerdict v = check_st(s4_x(), s4_y(), g);
    CHECK(v.direction == Direction::A_le_B);
    CHECK(v.point_witnesses.empty());
}
