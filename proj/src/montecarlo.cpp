#include "ecd/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ecd/rng.hpp"

namespace ecd {

SampleBatch sample_component(const ECDParams& p, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_component: n must be at least 1");
    RngEngine gen(seed);
    SampleBatch batch{{}, seed};
    batch.draws.reserve(n);
    for (std::size_t i = 0; i < n; ++i) batch.draws.push_back(quantile(p, uniform_open(gen)));
    return batch;
}

SampleBatch sample_system(const SystemSpec& s, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_system: n must be at least 1");
    RngEngine gen(seed);
    const bool series = s.kind == SystemKind::Series;
    SampleBatch batch{{}, seed};
    batch.draws.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double life = series ? std::numeric_limits<double>::infinity() : 0.0;
        for (const auto& p : s.components.components) {
            const double t = quantile(p, uniform_open(gen));
            life = series ? std::min(life, t) : std::max(life, t);
        }
        batch.draws.push_back(life);
    }
    return batch;
}

OrderingVerdict empirical_st_check(const SystemSpec& a, const SystemSpec& b, const Grid& g,
                                   std::size_t n, std::uint64_t seed) {
    if (n < 10000)
        throw std::invalid_argument("empirical_st_check: n must be at least 10^4");

    const SampleBatch da = sample_system(a, n, seed);
    const SampleBatch db = sample_system(b, n, seed + 1);

    OrderingVerdict v;
    v.relation = Relation::ST;
    bool evidence_a_le_b = false, evidence_b_le_a = false;
    std::vector<PointWitness> a_exceeds, b_exceeds;

    const double dn = static_cast<double>(n);
    for (double x : g.points) {
        const double ca = static_cast<double>(
            std::count_if(da.draws.begin(), da.draws.end(), [x](double d) { return d > x; }));
        const double cb = static_cast<double>(
            std::count_if(db.draws.begin(), db.draws.end(), [x](double d) { return d > x; }));
        const double pa = ca / dn, pb = cb / dn;
        const double band = 3.0 * std::sqrt((pa * (1.0 - pa) + pb * (1.0 - pb)) / dn);
        if (std::abs(pa - pb) <= band) continue;  // bands overlap: inconclusive
        if (pa < pb) {
            evidence_a_le_b = true;
            b_exceeds.push_back({x, pa, pb});
        } else {
            evidence_b_le_a = true;
            a_exceeds.push_back({x, pa, pb});
        }
    }

    if (evidence_a_le_b && evidence_b_le_a) {
        v.direction = Direction::Neither;
        v.point_witnesses = std::move(a_exceeds);
        v.point_witnesses.insert(v.point_witnesses.end(), b_exceeds.begin(), b_exceeds.end());
    } else if (evidence_a_le_b) {
        v.direction = Direction::A_le_B;
    } else if (evidence_b_le_a) {
        v.direction = Direction::B_le_A;
    } else {
        v.direction = Direction::A_le_B;  // nothing separable at this sample size
        v.degenerate_equal = true;
    }
    return v;
}

}  // namespace ecd
