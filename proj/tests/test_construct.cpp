#include "grasspack/construct.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/spreads.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

using namespace grasspack;

namespace {

std::set<std::pair<int, std::vector<std::int64_t>>> projection_set(const Packing& packing) {
    std::set<std::pair<int, std::vector<std::int64_t>>> out;
    for (const auto& p : packing.planes) {
        auto e = p.exact_projection();
        e.normalize();
        out.insert({e.half_scale(), e.entries()});
    }
    return out;
}

void check_pair(const OrthogonalSpace& space, const GroupPacking& gp, const Packing& real, std::size_t a,
                std::size_t b) {
    const auto d2 = pair_distance(space, gp.planes[a], gp.planes[b]);
    CHECK(d2 == pair_distance_by_trace(space, gp.planes[a], gp.planes[b]));
    CHECK(d2 == chordal_distance_sq_exact(real.planes[a], real.planes[b]));
    const auto spectrum = principal_angle_spectrum(space, gp.planes[a], gp.planes[b]);
    CHECK(spectrum.distance_sq() == d2);
    const auto predicted = spectrum.angles();
    const auto measured = principal_angles(real.planes[a], real.planes[b]);
    REQUIRE(predicted.size() == measured.size());
    double sum = 0;
    for (std::size_t j = 0; j < predicted.size(); ++j) {
        CHECK(std::abs(predicted[j] - measured[j]) < 1e-10);
        sum += std::sin(predicted[j]) * std::sin(predicted[j]);
    }
    CHECK(std::abs(sum - to_double(d2)) < 1e-10);
}

}  // namespace

TEST_CASE("theorem1 counts match the formula for i <= 5") {
    const std::map<std::pair<int, int>, std::uint64_t> table{
        {{2, 0}, 24}, {{2, 1}, 18}, {{3, 0}, 240}, {{3, 1}, 420}, {{3, 2}, 70},
        {{4, 0}, 4320}, {{4, 1}, 16200}, {{4, 2}, 6300}, {{4, 3}, 270}};
    for (int i = 1; i <= 5; ++i)
        for (int k = 0; k < i; ++k) {
            const auto gp = theorem1(i, k);
            CHECK(gp.planes.size() == theorem1_count(i, k));
            if (table.count({i, k})) CHECK(theorem1_count(i, k) == table.at({i, k}));
        }
    CHECK_THROWS_AS(theorem1(1, 1), UsageError);
    CHECK_THROWS_AS(theorem1(3, -1), UsageError);
}

TEST_CASE("pair_distance against the exact trace and the SVD, all pairs for i <= 3") {
    for (int i = 1; i <= 3; ++i) {
        const OrthogonalSpace space(i);
        for (int k = 0; k < i; ++k) {
            const auto gp = theorem1(i, k);
            const auto real = to_packing(gp);
            for (std::size_t a = 0; a < gp.planes.size(); ++a)
                for (std::size_t b = a + 1; b < gp.planes.size(); ++b) check_pair(space, gp, real, a, b);
        }
    }
}

TEST_CASE("pair_distance on 10^4 random pairs for i = 4") {
    const OrthogonalSpace space(4);
    std::mt19937_64 rng(4242);
    for (int k = 0; k < 4; ++k) {
        const auto gp = theorem1(4, k);
        // Exact projections only for the sampled planes.
        for (int trial = 0; trial < 2500; ++trial) {
            const auto a = rng() % gp.planes.size();
            auto b = rng() % gp.planes.size();
            if (a == b) b = (b + 1) % gp.planes.size();
            GroupPacking two{4, k, {gp.planes[a], gp.planes[b]}, "", std::nullopt};
            check_pair(space, two, to_packing(two), 0, 1);
        }
    }
}

TEST_CASE("theorem1 minimum distances") {
    for (int i = 2; i <= 3; ++i)
        for (int k = 0; k < i; ++k) {
            const auto report = verify_group_packing(theorem1(i, k), {});
            CHECK(report.d2_min_exact == theorem1_distance(k));
            CHECK_FALSE(report.claim_violated);
        }
    for (int k = 0; k < 4; ++k) {
        const auto report = verify_orbit_group_packing(theorem1(4, k));
        CHECK(report.d2_min_exact == theorem1_distance(k));
    }
    CHECK(theorem1_distance(0) == Rational(1, 2));
    CHECK(theorem1_distance(3) == Rational(4));
}

TEST_CASE("k = i-1 meets the orthoplex bound") {
    for (int i = 2; i <= 4; ++i) {
        const auto report = verify_group_packing(theorem1(i, i - 1), {});
        CHECK(report.status == PackingStatus::MeetsOrthoplex);
        CHECK(report.d2_min_exact == orthoplex_bound(1 << i, 1 << (i - 1)));
    }
}

TEST_CASE("orbits reproduce theorem1 for i <= 3") {
    for (int i = 1; i <= 3; ++i)
        for (int k = 0; k < i; ++k) {
            const auto orbit = orbit_packing(i, 1 << k);
            const auto t1 = to_packing(theorem1(i, k));
            CHECK(orbit.planes.size() == t1.planes.size());
            CHECK(projection_set(orbit) == projection_set(t1));
        }
    const auto l83 = orbit_packing(3, 3);
    CHECK(l83.planes.size() == 1680);
    CHECK(verify_packing(l83, {}).d2_min_exact == Rational(1, 2));
    CHECK(verify_orbit_packing(l83).d2_min_exact == Rational(1, 2));
    CHECK_THROWS_AS(orbit_packing(2, 4), UsageError);
    CHECK_THROWS_AS(orbit_packing(3, 3, {100}), PartialResultError);
    try {
        orbit_packing(3, 3, {100});
    } catch (const PartialResultError& e) {
        CHECK(e.partial().planes.size() > 0);
    }
}

TEST_CASE("conjugator fast paths agree with dense conjugation") {
    std::mt19937_64 rng(99);
    for (int i = 1; i <= 4; ++i) {
        const int m = 1 << i;
        for (const auto& g : clifford_generators(i)) {
            const Conjugator conj(g);
            for (int trial = 0; trial < 5; ++trial) {
                ExactMatrix p(m, m, static_cast<int>(rng() % 3) * 2);
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c) p.at(r, c) = static_cast<std::int64_t>(rng() % 7) - 3;
                auto dense = p.conjugate_by(g);
                dense.normalize();
                CHECK(conj.apply(p) == dense);
            }
        }
    }
}

TEST_CASE("theorem2") {
    const OrthogonalSpace space(3);
    const auto all = enumerate_totally_singular(space, 2);
    const auto single = theorem2(3, {all.front()}, 0);
    CHECK(single.packing.planes.size() == 4);
    CHECK(single.max_intersection == -1);

    const auto spread = orthogonal_spread(4);
    const auto lines = theorem2(4, spread.members, 0);
    CHECK(lines.packing.planes.size() == 144);
    CHECK(lines.bound == Rational(15, 16));
    CHECK(lines.equality);
    const auto report = verify_group_packing(lines.packing, {});
    CHECK(report.d2_min_exact == Rational(15, 16));

    // Two subspaces meeting in a line break l = 0.
    std::vector<F2Subspace> overlapping;
    for (const auto& s : all)
        if (overlapping.empty() || subspace_intersection(overlapping.front(), s).dim() == 1) {
            overlapping.push_back(s);
            if (overlapping.size() == 2) break;
        }
    CHECK_THROWS_AS(theorem2(3, overlapping, 0), DomainError);
    const auto loose = theorem2(3, overlapping, 1);
    CHECK(loose.equality);
    CHECK(loose.bound == Rational(1));
}

TEST_CASE("every constructed plane is an exact projection on the embedding sphere") {
    for (int i = 1; i <= 3; ++i)
        for (int k = 0; k < i; ++k) {
            const auto packing = to_packing(theorem1(i, k));
            const int m = packing.m;
            const int n = packing.n;
            for (const auto& plane : packing.planes) {
                const auto& p = plane.exact_projection();
                CHECK(p.is_symmetric());
                CHECK(p * p == p);
                CHECK(p.trace() == Rational(n));
                // |P - (n/m) I|^2 = n(m-n)/m
                const Rational radius = p.trace_product(p) - Rational(2 * n, m) * p.trace() + Rational(n * n, m);
                CHECK(radius == Rational(n * (m - n), m));
            }
        }
}
