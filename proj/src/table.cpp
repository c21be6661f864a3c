#include "grasspack/table.hpp"

#include "grasspack/cliques.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/simplexpack.hpp"
#include "grasspack/spreads.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace grasspack {

namespace {

Rational pow2r(int e) {
    if (e >= 0) return Rational(std::int64_t{1} << e);
    return Rational(1, std::int64_t{1} << -e);
}

// Number of planes of the k = i-1 family: 2(2^i - 1)(2^(i-1) + 1).
std::uint64_t f(int i) { return 2 * ((std::uint64_t{1} << i) - 1) * ((std::uint64_t{1} << (i - 1)) + 1); }

bool exact_match(const PackingReport& r, std::uint64_t n_planes, const Rational& d2) {
    return r.N == n_planes && r.d2_min_exact && *r.d2_min_exact == d2;
}

void add_theorem1(std::vector<TableRow>& rows, const TableOptions& opt) {
    for (int i = 2; (1 << i) <= opt.max_m; ++i) {
        if ((1 << i) < opt.min_m) continue;
        for (int k = 0; k < i; ++k) {
            TableRow row{1 << i, 1 << k, theorem1_count(i, k), to_string(theorem1_distance(k)), "1", "formula", ""};
            if (!opt.formula_only && i <= 4) {
                // The packing is one Clifford orbit, so distances from plane 0 give the minimum.
                const auto gp = theorem1(i, k);
                const auto report = verify_orbit_group_packing(gp, opt.parallel);
                row.verified = exact_match(report, row.N, theorem1_distance(k)) ? "enum" : "MISMATCH";
            }
            rows.push_back(row);
        }
    }
}

void add_orbit_family(std::vector<TableRow>& rows, const TableOptions& opt) {
    struct Entry {
        int i, n;
        std::uint64_t N;
        Rational d2;
        bool formula;
    };
    const std::vector<Entry> entries = {
        {3, 3, f(3) * f(2) * f(1) / 3, Rational(1, 2), true},
        {4, 3, 151200, Rational(1, 2), false},
        {4, 5, f(4) * f(3) * f(2) * f(1) / 3, Rational(1, 2), true},
        {4, 6, f(4) * f(3) * f(2) / 3, Rational(1), true},
        {4, 7, 64800, Rational(1, 2), false},
    };
    for (const auto& e : entries) {
        const int m = 1 << e.i;
        if (m > opt.max_m || m < opt.min_m) continue;
        TableRow row{m, e.n, e.N, to_string(e.d2), "1a", e.formula ? "formula" : "reported",
                     e.formula ? "" : "orbit size observed numerically"};
        if (!opt.formula_only && e.i <= 3) {
            const auto packing = orbit_packing(e.i, e.n);
            const auto report = verify_orbit_packing(packing, opt.parallel);
            row.verified = exact_match(report, e.N, e.d2) ? "enum" : "MISMATCH";
        }
        rows.push_back(row);
    }
}

void add_spreads(std::vector<TableRow>& rows, const TableOptions& opt) {
    for (int i = 2; (1 << i) <= opt.max_m; i += 2) {
        const int m = 1 << i;
        if (m < opt.min_m) continue;
        const std::uint64_t half = (std::uint64_t{1} << (i - 1)) + 1;
        const std::uint64_t points = (std::uint64_t{1} << i) - 1;
        for (int j = 1; j <= i; ++j) {
            if (i % j != 0 || (j == 1)) continue;
            const bool full = j == i;
            const std::uint64_t N = (std::uint64_t{1} << j) * half * points / ((std::uint64_t{1} << j) - 1);
            const Rational d2 = pow2r(i - j) - pow2r(i - 2 * j);
            TableRow row{m, 1 << (i - j), N, to_string(d2), full ? "2a" : "2b", "formula", ""};
            if (!opt.formula_only && i <= 4) {
                const auto result = theorem2(i, example_b(i, j), 0);
                const auto report = verify_group_packing(result.packing, {VerifyMode::Exact, 0, 0, opt.parallel, 0});
                row.verified = exact_match(report, N, d2) ? "enum" : "MISMATCH";
            }
            rows.push_back(row);
        }
    }
}

void add_cliques(std::vector<TableRow>& rows, const TableOptions& opt) {
    struct Entry {
        int i, k, ell;
        std::size_t clique;
    };
    const std::vector<Entry> entries = {{3, 1, 0, 10}, {4, 1, 0, 17}, {4, 1, 1, 130}};
    for (const auto& e : entries) {
        const int m = 1 << e.i;
        if (m > opt.max_m || m < opt.min_m) continue;
        const Rational d2 = pow2r(e.k) - pow2r(2 * e.k + e.ell - e.i);
        const std::uint64_t N = (std::uint64_t{1} << (e.i - e.k)) * e.clique;
        TableRow row{m, 1 << e.k, N, to_string(d2), "2c", "reported",
                     "clique of size " + std::to_string(e.clique)};
        if (!opt.formula_only) {
            const auto graph = build_graph(e.i, e.i - e.k, e.ell);
            CliqueBudget budget;
            budget.max_seconds = opt.clique_seconds;
            budget.local_search_steps = 50'000'000;
            const auto found = e.ell == 0 ? max_clique(graph, e.clique, budget)
                                          : local_search_clique(graph, e.clique, budget);
            std::vector<F2Subspace> chosen;
            for (auto v : found.clique) chosen.push_back(graph.nodes[v]);
            const auto packing = theorem2(e.i, chosen, e.ell);
            const auto report = verify_group_packing(packing.packing, {VerifyMode::Exact, 0, 0, opt.parallel, 0});
            const bool reached = found.clique.size() >= e.clique;
            const bool distance_ok = report.d2_min_exact && *report.d2_min_exact >= d2;
            row.verified = reached && distance_ok ? "enum" : (distance_ok ? "partial" : "MISMATCH");
            row.note = "clique found " + std::to_string(found.clique.size()) + (found.optimal ? " (maximum)" : "") +
                       ", target " + std::to_string(e.clique);
        }
        rows.push_back(row);
    }
}

void add_theorem3(std::vector<TableRow>& rows, const TableOptions& opt) {
    for (int p = 3; p <= opt.max_m; ++p) {
        if (p < opt.min_m || !is_prime(p) || !(p == 3 || p % 8 == 7)) continue;
        const std::uint64_t N = std::uint64_t(p) * (p + 1) / 2;
        TableRow row{p, (p - 1) / 2, N, to_string(theorem3_distance(p)), "3", "formula", ""};
        if (!hadamard_supported((p + 1) / 2)) {
            row.note = "Hadamard order " + std::to_string((p + 1) / 2) + " not constructed here";
        } else if (!opt.formula_only && p <= 47) {
            const auto packing = theorem3(p);
            const auto report = verify_equidistance(packing, p, 0, 0x5eed, opt.parallel);
            row.verified = report.ok() && report.N == N ? "enum" : "MISMATCH";
        }
        rows.push_back(row);
    }
}

void add_external(std::vector<TableRow>& rows, const TableOptions& opt) {
    struct Entry {
        int m, n;
        std::uint64_t N;
        const char* d2;
        const char* source;
    };
    static const Entry entries[] = {
        {4, 2, 6, "1", "2d"},       {8, 2, 20, "3/2", "2d"},      {16, 2, 72, "7/4", "2d"},
        {32, 2, 272, "15/8", "2d"}, {64, 2, 1056, "31/16", "2d"}, {128, 2, 4160, "63/32", "2d"},
        {16, 4, 72, "15/4", "2e"},  {64, 4, 1056, "63/16", "2e"},
    };
    for (const auto& e : entries) {
        if (e.m > opt.max_m || e.m < opt.min_m) continue;
        rows.push_back({e.m, e.n, e.N, e.d2, e.source, "external", "external construction, not implemented"});
    }
}

}  // namespace

std::vector<TableRow> table_rows(const TableOptions& options) {
    if (options.max_m > 128) throw UsageError("--max-m must be <= 128");
    std::vector<TableRow> rows;
    add_theorem1(rows, options);
    add_orbit_family(rows, options);
    add_spreads(rows, options);
    add_cliques(rows, options);
    add_theorem3(rows, options);
    add_external(rows, options);
    std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        return std::tie(a.m, a.n, a.N) < std::tie(b.m, b.n, b.N);
    });
    return rows;
}

std::string table_text(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%5s %4s %14s %10s %6s  %-9s %s\n", "m", "n", "N", "d2", "source", "verified", "note");
    os << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%5d %4d %14llu %10s %6s  %-9s %s\n", r.m, r.n,
                      static_cast<unsigned long long>(r.N), r.d2.c_str(), ("(" + r.source + ")").c_str(),
                      r.verified.c_str(), r.note.c_str());
        os << buf;
    }
    return os.str();
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "m,n,N,d2,source,verified\n";
    for (const auto& r : rows) os << r.m << "," << r.n << "," << r.N << "," << r.d2 << "," << r.source << "," << r.verified << "\n";
    return os.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({{"m", r.m}, {"n", r.n}, {"N", r.N}, {"d2", r.d2}, {"source", r.source},
                       {"verified", r.verified}, {"note", r.note}});
    }
    return out.dump(1) + "\n";
}

}  // namespace grasspack
