// Acceptance checks, one PASS/FAIL line per criterion.
//   acceptance              default run
//   acceptance --extended   runs the clique searches for their full 10-minute budgets

#include "grasspack/cliques.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/simplexpack.hpp"
#include "grasspack/spreads.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace grasspack;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures for one criterion.
struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool condition, const std::string& what) {
        if (!condition) {
            if (!ok) detail << "; ";
            ok = false;
            detail << what;
        }
    }
};

std::set<std::pair<int, std::vector<std::int64_t>>> projection_set(const Packing& packing) {
    std::set<std::pair<int, std::vector<std::int64_t>>> out;
    for (const auto& p : packing.planes) {
        auto e = p.exact_projection();
        e.normalize();
        out.insert({e.half_scale(), e.entries()});
    }
    return out;
}

std::vector<F2Subspace> nodes_of(const SubspaceGraph& g, const std::vector<std::size_t>& clique) {
    std::vector<F2Subspace> out;
    for (auto v : clique) out.push_back(g.nodes[v]);
    return out;
}

void criterion1(Outcome& o, std::ostream& note) {
    const auto start = Clock::now();
    const std::vector<std::tuple<int, int, std::uint64_t>> table{
        {2, 0, 24}, {2, 1, 18}, {3, 0, 240}, {3, 1, 420}, {3, 2, 70},
        {4, 0, 4320}, {4, 1, 16200}, {4, 2, 6300}, {4, 3, 270}};
    for (const auto& [i, k, expected] : table) {
        const auto n = theorem1(i, k).planes.size();
        o.require(n == expected, "theorem1(" + std::to_string(i) + "," + std::to_string(k) + ") has " +
                                     std::to_string(n) + " planes");
    }
    const double t = seconds_since(start);
    o.require(t < 60, "runtime " + std::to_string(t) + " s");
    note << "9 rows enumerated in " << t << " s";
}

void criterion2(Outcome& o, std::ostream& note) {
    const std::vector<std::tuple<int, int, Rational>> exact{
        {2, 0, Rational(1, 2)}, {2, 1, Rational(1)}, {3, 0, Rational(1, 2)}, {3, 1, Rational(1)}, {3, 2, Rational(2)}};
    for (const auto& [i, k, d2] : exact) {
        VerifyOptions options;
        options.mode = VerifyMode::Exact;
        const auto report = verify_group_packing(theorem1(i, k), options);
        o.require(report.d2_min_exact == d2 && report.pairs_checked == report.N * (report.N - 1) / 2,
                  "exact (" + std::to_string(i) + "," + std::to_string(k) + ") d2_min " + report.d2_string());
    }
    for (int k = 0; k < 4; ++k) {
        VerifyOptions options;
        options.mode = VerifyMode::Sampled;
        options.samples = 100000;
        const auto gp = theorem1(4, k);
        const auto report = verify_group_packing(gp, options);
        // Sampled pairs may miss the minimum; the orbit check supplies a witness.
        const auto orbit = verify_orbit_group_packing(gp);
        const auto target = theorem1_distance(k);
        o.require(report.d2_min_exact && *report.d2_min_exact >= target,
                  "sampled (4," + std::to_string(k) + ") found " + report.d2_string());
        o.require(orbit.d2_min_exact == target, "no pair of (4," + std::to_string(k) + ") achieves " + to_string(target));
        note << "(4," << k << ") sampled min " << report.d2_string() << " ";
    }
}

void criterion3(Outcome& o, std::ostream& note) {
    for (int i = 2; i <= 4; ++i) {
        const auto gp = theorem1(i, i - 1);
        const int m = gp.m(), n = gp.n();
        const auto report = verify_group_packing(gp, {});
        o.require(report.d2_min_exact == Rational(n * (m - n), m),
                  "G(" + std::to_string(m) + "," + std::to_string(n) + ") d2 " + report.d2_string());
        o.require(report.status == PackingStatus::MeetsOrthoplex, "status " + to_string(report.status));
        if (i == 2) o.require(report.N == 2 * static_cast<std::uint64_t>(report.bounds.D) && report.bounds.D == 9, "N != 2D");
        note << report.summary_line() << "; ";
    }
}

void criterion4(Outcome& o, std::ostream& note) {
    std::uint64_t pairs = 0;
    double worst = 0;
    for (int i = 1; i <= 3; ++i) {
        const OrthogonalSpace space(i);
        for (int k = 0; k < i; ++k) {
            const auto gp = theorem1(i, k);
            const auto real = to_packing(gp);
            for (std::size_t a = 0; a < gp.planes.size(); ++a)
                for (std::size_t b = a + 1; b < gp.planes.size(); ++b) {
                    ++pairs;
                    const auto d2 = pair_distance(space, gp.planes[a], gp.planes[b]);
                    const auto trace = chordal_distance_sq_exact(real.planes[a], real.planes[b]);
                    const auto spectrum = principal_angle_spectrum(space, gp.planes[a], gp.planes[b]);
                    const auto angles = principal_angles(real.planes[a], real.planes[b]);
                    const auto predicted = spectrum.angles();
                    bool ok = d2 == trace && spectrum.distance_sq() == d2 && angles.size() == predicted.size();
                    for (std::size_t j = 0; ok && j < angles.size(); ++j) {
                        worst = std::max(worst, std::abs(angles[j] - predicted[j]));
                        ok = std::abs(angles[j] - predicted[j]) <= 1e-10;
                    }
                    if (!ok) {
                        o.require(false, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") of theorem1(" +
                                             std::to_string(i) + "," + std::to_string(k) + ")");
                        return;
                    }
                }
        }
    }
    note << pairs << " pairs, worst angle deviation " << worst;
}

void criterion5(Outcome& o, std::ostream& note) {
    const auto start = Clock::now();
    const OrthogonalSpace space(4);
    const auto spread = orthogonal_spread(4);
    const auto points = space.singular_points();
    o.require(spread.members.size() == 9, "spread has " + std::to_string(spread.members.size()) + " members");
    o.require(points.size() == 135 && is_partition(spread.members, points), "not a partition of 135 points");
    const auto lines = theorem2(4, spread.members, 0);
    const auto r1 = verify_group_packing(lines.packing, {});
    o.require(r1.N == 144 && r1.d2_min_exact == Rational(15, 16), "lines: " + r1.summary_line());
    const auto planes = theorem2(4, example_b(4, 2), 0);
    const auto r2 = verify_group_packing(planes.packing, {});
    o.require(r2.N == 180 && r2.d2_min_exact == Rational(3) && r2.status == PackingStatus::MeetsOrthoplex,
              "example (b): " + r2.summary_line());
    const double t = seconds_since(start);
    o.require(t < 60, "runtime " + std::to_string(t) + " s");
    note << r1.summary_line() << "; " << r2.summary_line() << "; " << t << " s";
}

void criterion6(Outcome& o, std::ostream& note, bool extended) {
    {
        const auto g = build_graph(3, 2, 0);
        const auto found = max_clique(g, 0, {});
        o.require(g.size() == 105, "(3,2,0) graph has " + std::to_string(g.size()) + " nodes");
        o.require(found.optimal && found.clique.size() == 10,
                  "(3,2,0) clique " + std::to_string(found.clique.size()) + (found.optimal ? " optimal" : " not proven"));
        const auto packing = theorem2(3, nodes_of(g, found.clique), 0);
        const auto report = verify_group_packing(packing.packing, {});
        o.require(report.N == 40 && report.d2_min_exact == Rational(3, 2), "(3,2,0) packing " + report.summary_line());
        note << "(3,2,0) maximum 10 proven; ";
    }
    const auto g = build_graph(4, 3, 0);
    o.require(g.size() == 2025, "(4,3,0) graph has " + std::to_string(g.size()) + " nodes");
    {
        CliqueBudget budget;
        budget.max_seconds = extended ? 600 : 60;
        const auto start = Clock::now();
        const auto found = max_clique(g, extended ? 0 : 17, budget);
        const std::size_t need = extended ? 17 : 14;
        o.require(found.clique.size() >= need && verify_clique_subspaces(g, found.clique),
                  "(4,3,0) clique " + std::to_string(found.clique.size()));
        note << "(4,3,0) clique " << found.clique.size() << " in " << seconds_since(start) << " s; ";
    }
    {
        const auto g1 = build_graph(4, 3, 1);
        CliqueBudget budget;
        budget.max_seconds = 600;
        budget.local_search_steps = UINT64_MAX;
        const auto start = Clock::now();
        const auto found = local_search_clique(g1, extended ? 0 : 100, budget);
        o.require(found.clique.size() >= 100 && verify_clique_subspaces(g1, found.clique),
                  "(4,3,1) clique " + std::to_string(found.clique.size()));
        const auto packing = theorem2(4, nodes_of(g1, found.clique), 1);
        const auto report = verify_group_packing(packing.packing, {});
        o.require(report.d2_min_exact && *report.d2_min_exact >= Rational(3, 2), "(4,3,1) packing " + report.summary_line());
        note << "(4,3,1) greedy clique " << found.clique.size() << " in " << seconds_since(start) << " s";
    }
}

void criterion7(Outcome& o, std::ostream& note) {
    const auto start = Clock::now();
    for (int p : {3, 7, 23}) {
        const auto packing = theorem3(p);
        const auto report = verify_equidistance(packing, p);
        o.require(report.N == static_cast<std::uint64_t>(p * (p + 1) / 2), "p=" + std::to_string(p) + " N");
        o.require(report.all_equal && report.meets_simplex && report.pairs_checked == report.N * (report.N - 1) / 2,
                  "p=" + std::to_string(p) + " deviation " + std::to_string(report.worst_deviation));
        o.require(report.generator_angles_ok, "p=" + std::to_string(p) + " generator angles");
        if (p == 7) {
            const double theta = std::asin(2 * std::sqrt(2.0) / 3);
            const auto& a = report.generator_angles;
            o.require(a.size() == 3 && std::abs(a[0]) <= 1e-9 && std::abs(a[1] - theta) <= 1e-9 &&
                          std::abs(a[2] - theta) <= 1e-9,
                      "p=7 angles");
        }
    }
    const double t = seconds_since(start);
    o.require(t < 60, "runtime " + std::to_string(t) + " s");
    note << "p in {3,7,23} exhaustive in " << t << " s; ";
    for (int p : {31, 47}) {
        const auto report = verify_equidistance(theorem3(p), p, 100000, 0x5eed);
        o.require(report.ok(), "p=" + std::to_string(p) + " sampled");
        note << "p=" << p << " sampled " << report.pairs_checked << " pairs, deviation " << report.worst_deviation << "; ";
    }
}

void criterion8(Outcome& o, std::ostream& note) {
    const auto orbit = orbit_packing(3, 2);
    const auto t1 = to_packing(theorem1(3, 1));
    o.require(orbit.planes.size() == 420 && projection_set(orbit) == projection_set(t1), "orbit (3,2) != theorem1(3,1)");
    const auto l83 = orbit_packing(3, 3);
    const auto report = verify_packing(l83, {});
    o.require(l83.planes.size() == 1680 && report.d2_min_exact == Rational(1, 2), "orbit (3,3): " + report.summary_line());
    note << "orbit(3,2) = theorem1(3,1); orbit(3,3) " << report.summary_line();
    // Fast enough to run by default.
    const auto start = Clock::now();
    const auto big = orbit_packing(4, 6);
    const auto r = verify_orbit_packing(big);
    o.require(big.planes.size() == 113400 && r.d2_min_exact == Rational(1), "orbit (4,6): " + r.summary_line());
    note << "; orbit(4,6) " << r.summary_line() << " in " << seconds_since(start) << " s";
}

void criterion9(Outcome& o, std::ostream& note) {
    for (int i = 1; i <= 4; ++i) {
        const OrthogonalSpace space(i);
        const int m = 1 << i;
        std::set<std::vector<std::int64_t>> coordinate, dual, from_y, from_x;
        for (int u = 0; u < m; ++u) {
            ExactMatrix p(m, m);
            p.at(u, u) = 1;
            coordinate.insert(p.entries());
            ExactMatrix q(m, m, 2 * i);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) q.at(a, b) = parity(static_cast<Word>((a ^ b) & u)) ? -1 : 1;
            dual.insert(q.normalize().entries());
        }
        for (const auto& p : invariant_planes(space, space.y_subspace())) from_y.insert(p.projection.entries());
        for (const auto& p : invariant_planes(space, space.x_subspace())) from_x.insert(p.projection.entries());
        o.require(from_y == coordinate, "Y frame for i=" + std::to_string(i));
        o.require(from_x == dual, "X frame for i=" + std::to_string(i));
    }
    note << "i = 1..4";
}

GroupElement element(int i, std::uint64_t code) {
    const Word mask = (Word{1} << i) - 1;
    return GroupElement{i, ((code >> (2 * i)) & 1) != 0, static_cast<Word>(code >> i) & mask, static_cast<Word>(code) & mask};
}

bool group_law_holds(const OrthogonalSpace& space, const GroupElement& g, const GroupElement& h, const GroupElement& f) {
    const int i = space.i();
    const GroupElement one{i, false, 0, 0}, minus{i, true, 0, 0};
    const auto comm = multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
    return multiply(multiply(g, h), f) == multiply(g, multiply(h, f)) &&
           as_matrix(multiply(g, h)) == as_matrix(g) * as_matrix(h) &&
           comm == (space.bilinear_form(g.bar(), h.bar()) ? minus : one) &&
           multiply(g, g) == (space.quadratic_form(g.bar()) ? minus : one);
}

void criterion10(Outcome& o, std::ostream& note) {
    std::uint64_t cases = 0;
    for (int i = 1; i <= 2; ++i) {
        const OrthogonalSpace space(i);
        const std::uint64_t n = std::uint64_t{1} << (2 * i + 1);
        for (std::uint64_t x = 0; x < n; ++x)
            for (std::uint64_t y = 0; y < n; ++y)
                for (std::uint64_t z = 0; z < n; ++z, ++cases)
                    if (!group_law_holds(space, element(i, x), element(i, y), element(i, z))) {
                        o.require(false, "group law, exhaustive i=" + std::to_string(i));
                        return;
                    }
    }
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 10000; ++trial, ++cases) {
        const int i = 1 + static_cast<int>(rng() % 4);
        const std::uint64_t mask = (std::uint64_t{1} << (2 * i + 1)) - 1;
        if (!group_law_holds(OrthogonalSpace(i), element(i, rng() & mask), element(i, rng() & mask),
                             element(i, rng() & mask))) {
            o.require(false, "group law, random trial " + std::to_string(trial));
            return;
        }
    }
    // Every exact plane built here: theorem1 for i <= 4, spread packings, orbits (3,3).
    std::vector<Packing> packings;
    for (int i = 1; i <= 4; ++i)
        for (int k = 0; k < i; ++k) packings.push_back(to_packing(theorem1(i, k)));
    packings.push_back(to_packing(theorem2(4, orthogonal_spread(4).members, 0).packing));
    packings.push_back(to_packing(theorem2(4, example_b(4, 2), 0).packing));
    packings.push_back(orbit_packing(3, 3));
    std::uint64_t planes = 0;
    for (const auto& packing : packings) {
        const int m = packing.m, n = packing.n;
        for (const auto& plane : packing.planes) {
            ++planes;
            const auto& p = plane.exact_projection();
            const bool projection = p.is_symmetric() && p * p == p && p.trace() == Rational(n);
            // |P - (n/m) I|^2 = tr(P^2) - 2(n/m) tr P + n^2/m
            const Rational radius = p.trace_product(p) - Rational(2 * n, m) * p.trace() + Rational(n * n, m);
            if (!projection || radius != Rational(n * (m - n), m)) {
                o.require(false, "plane of " + packing.provenance);
                return;
            }
        }
    }
    note << cases << " group-law cases, " << planes << " exact planes";
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int a = 1; a < argc; ++a) {
        if (std::strcmp(argv[a], "--extended") == 0) {
            extended = true;
        } else {
            std::cerr << "usage: acceptance [--extended]\n";
            return 2;
        }
    }
    const std::vector<std::pair<std::string, std::function<void(Outcome&, std::ostream&)>>> criteria{
        {"Theorem 1 counts", criterion1},
        {"Theorem 1 distances", criterion2},
        {"orthoplex optimality for k = i-1", criterion3},
        {"group-side distance and angle spectrum oracles", criterion4},
        {"spreads", criterion5},
        {"cliques", [extended](Outcome& o, std::ostream& s) { criterion6(o, s, extended); }},
        {"Theorem 3", criterion7},
        {"orbit packings", criterion8},
        {"frames", criterion9},
        {"property suites", criterion10},
    };
    int failures = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        Outcome outcome;
        std::ostringstream note;
        const auto start = Clock::now();
        try {
            criteria[c].second(outcome, note);
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        if (!outcome.ok) ++failures;
        std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << c + 1 << " (" << criteria[c].first << ", "
                  << seconds_since(start) << " s): " << (outcome.ok ? note.str() : outcome.detail.str()) << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
