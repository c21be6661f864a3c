// grasspack: construct, verify, count and tabulate Grassmannian packings.

#include "grasspack/cliques.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/planeset_io.hpp"
#include "grasspack/simplexpack.hpp"
#include "grasspack/spreads.hpp"
#include "grasspack/table.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace grasspack;

namespace {

struct OutputOptions {
    std::string out;
    std::string format = "text";
    std::string mode = "auto";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0x5eed;
    int jobs = 0;
};

void add_output_flags(CLI::App* app, OutputOptions& o) {
    app->add_option("--out", o.out, "Write the plane set (JSON) to this path");
    app->add_option("--format", o.format, "Summary format")->check(CLI::IsMember({"text", "json", "csv"}));
    app->add_option("--mode", o.mode, "Verification mode")->check(CLI::IsMember({"auto", "exact", "float", "sampled"}));
    app->add_option("--samples", o.samples, "Pairs checked in sampled mode");
    app->add_option("--seed", o.seed, "Seed for sampled mode");
    app->add_option("--jobs", o.jobs, "Worker threads for verification (0: default)");
}

VerifyOptions verify_options(const OutputOptions& o, VerifyMode mode) {
    VerifyOptions v;
    v.mode = mode;
    v.samples = o.samples;
    v.seed = o.seed;
    v.jobs = o.jobs;
    return v;
}

void emit(const OutputOptions& o, const Packing& packing, const PackingReport& report,
          const std::vector<std::string>& extra = {}) {
    if (!o.out.empty()) write_planeset(o.out, packing, &report);
    if (o.format == "json") {
        if (o.out.empty()) {
            std::cout << planeset_to_json(packing, &report).dump() << "\n";
        } else {
            std::cout << report_to_json(report).dump(1) << "\n";
        }
        return;
    }
    if (o.format == "csv") {
        std::cout << "m,n,N,d2,status,mode\n"
                  << report.m << "," << report.n << "," << report.N << "," << report.d2_string() << ","
                  << to_string(report.status) << "," << to_string(report.mode) << "\n";
        return;
    }
    std::cout << packing.provenance << "\n";
    for (const auto& line : extra) std::cout << line << "\n";
    std::cout << "G(" << report.m << "," << report.n << ") verification=" << to_string(report.mode)
              << " pairs=" << report.pairs_checked << "\n";
    std::cout << "spectrum:";
    for (const auto& e : report.spectrum) std::cout << " " << e.value << "x" << e.count;
    std::cout << "\n" << report.summary_line() << "\n";
}

int finish(const PackingReport& report) { return report.claim_violated || report.bound_violated ? 1 : 0; }

// Group packings verify on the group side; theorem1 packings are single
// Clifford orbits, so large ones are checked from one plane.
PackingReport verify_group(const GroupPacking& gp, const OutputOptions& o, bool is_orbit) {
    const auto count = gp.planes.size();
    if (o.mode == "float") return verify_packing(to_packing(gp), verify_options(o, VerifyMode::Float));
    if (o.mode == "sampled") return verify_group_packing(gp, verify_options(o, VerifyMode::Sampled));
    if (o.mode == "exact" || count <= 5000) return verify_group_packing(gp, verify_options(o, VerifyMode::Exact));
    if (is_orbit) return verify_orbit_group_packing(gp, true, o.jobs);
    return verify_group_packing(gp, verify_options(o, VerifyMode::Sampled));
}

PackingReport verify_plain(const Packing& packing, const OutputOptions& o) {
    if (o.mode == "auto") {
        const auto count = packing.planes.size();
        const VerifyMode mode = !packing.is_exact() ? (count <= 5000 ? VerifyMode::Float : VerifyMode::Sampled)
                                                    : (count <= 5000 ? VerifyMode::Exact : VerifyMode::Sampled);
        return verify_packing(packing, verify_options(o, mode));
    }
    return verify_packing(packing, verify_options(o, parse_verify_mode(o.mode)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grassmannian packings from totally singular subspaces, spreads, cliques and quadratic residues"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "Build a packing and verify it");
    construct->require_subcommand(1);
    OutputOptions out;

    int t1_i = 0, t1_k = 0;
    auto* t1 = construct->add_subcommand("theorem1", "All invariant planes of all totally singular (i-k)-spaces");
    t1->add_option("--i", t1_i, "m = 2^i")->required();
    t1->add_option("--k", t1_k, "n = 2^k")->required();
    add_output_flags(t1, out);

    int t2_i = 0, t2_j = 0;
    auto* t2 = construct->add_subcommand("theorem2-spread", "Spread-based packing: j = i gives lines");
    t2->add_option("--i", t2_i, "Even i, m = 2^i")->required();
    t2->add_option("--j", t2_j, "j | i, n = 2^(i-j)")->required();
    add_output_flags(t2, out);

    int t3_p = 0;
    std::optional<int> t3_k;
    bool t3_big = false;
    auto* t3 = construct->add_subcommand("theorem3", "Equidistant packing in G(p, (p-1)/2)");
    t3->add_option("--p", t3_p, "Prime p = 3 or p = -1 mod 8")->required();
    t3->add_option("--k", t3_k, "Quadratic nonresidue (default: smallest)");
    t3->add_flag("--big", t3_big, "Allow p > 23 (sampled verification)");
    add_output_flags(t3, out);

    int orb_i = 0, orb_n = 0;
    std::uint64_t orb_max = 4'000'000;
    auto* orb = construct->add_subcommand("orbit", "Clifford orbit of the first n coordinate vectors");
    orb->add_option("--i", orb_i, "m = 2^i")->required();
    orb->add_option("--n", orb_n, "Plane dimension")->required();
    orb->add_option("--max-planes", orb_max, "Abort after this many planes");
    add_output_flags(orb, out);

    int cl_i = 0, cl_d = 0, cl_l = 0;
    double cl_budget = 60;
    std::size_t cl_target = 0;
    std::uint64_t cl_seed = 1;
    bool cl_greedy = false;
    auto* cl = construct->add_subcommand("clique", "Theorem 2 packing from a clique of totally singular d-spaces");
    cl->add_option("--i", cl_i, "m = 2^i")->required();
    cl->add_option("--d", cl_d, "Subspace dimension, n = 2^(i-d)")->required();
    cl->add_option("--l", cl_l, "Maximum pairwise intersection dimension")->required();
    cl->add_option("--budget", cl_budget, "Search time budget in seconds");
    cl->add_option("--target", cl_target, "Stop once a clique of this size is found");
    cl->add_option("--search-seed", cl_seed, "Local search seed");
    cl->add_flag("--greedy", cl_greedy, "Local search only, no branch and bound");
    add_output_flags(cl, out);

    // verify
    std::string verify_path;
    OutputOptions vopt;
    vopt.mode = "auto";
    auto* verify = app.add_subcommand("verify", "Verify a plane-set file");
    verify->add_option("file", verify_path, "grasspack-planes/1 JSON file")->required();
    verify->add_option("--mode", vopt.mode, "Verification mode")->check(CLI::IsMember({"auto", "exact", "float", "sampled"}));
    verify->add_option("--samples", vopt.samples, "Pairs checked in sampled mode");
    verify->add_option("--seed", vopt.seed, "Seed for sampled mode");
    verify->add_option("--jobs", vopt.jobs, "Worker threads");
    verify->add_option("--format", vopt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    // count
    int cnt_i = 0, cnt_k = 0;
    auto* count = app.add_subcommand("count", "Count totally singular subspaces and Theorem 1 planes");
    count->add_option("--i", cnt_i, "Half the dimension of the binary space")->required();
    count->add_option("--k", cnt_k, "Subspaces of dimension i-k")->required();

    // table
    TableOptions topt;
    std::string tformat = "text";
    auto* table = app.add_subcommand("table", "Parameters of every implemented construction up to --max-m");
    table->add_option("--max-m", topt.max_m, "Largest ambient dimension (<= 128)");
    table->add_option("--min-m", topt.min_m, "Smallest ambient dimension");
    table->add_flag("--formula-only", topt.formula_only, "Skip re-verification by construction");
    table->add_option("--clique-seconds", topt.clique_seconds, "Budget per clique-based row");
    table->add_option("--format", tformat, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*t1) {
            const auto gp = theorem1(t1_i, t1_k);
            const auto report = verify_group(gp, out, true);
            emit(out, out.out.empty() && out.format != "json" ? Packing{gp.m(), gp.n(), {}, gp.provenance, gp.claimed_d2}
                                                              : to_packing(gp),
                 report);
            return finish(report);
        }
        if (*t2) {
            const auto result = theorem2(t2_i, example_b(t2_i, t2_j), 0);
            const auto report = verify_group(result.packing, out, false);
            const auto& gp = result.packing;
            emit(out, out.out.empty() && out.format != "json" ? Packing{gp.m(), gp.n(), {}, gp.provenance, gp.claimed_d2}
                                                              : to_packing(gp),
                 report, {"bound " + to_string(result.bound) + (result.equality ? " (attained)" : "")});
            return finish(report);
        }
        if (*t3) {
            if (t3_p > 23 && !t3_big) throw UsageError("p > 23 requires --big");
            const auto packing = theorem3(t3_p, t3_k);
            OutputOptions o = out;
            if (o.mode == "auto") o.mode = t3_p > 23 ? "sampled" : "float";
            const auto report = verify_plain(packing, o);
            const auto eq = verify_equidistance(packing, t3_p, t3_p > 23 ? o.samples : 0, o.seed);
            emit(o, packing, report,
                 {std::string("equidistant=") + (eq.all_equal ? "yes" : "no") +
                  " worst_deviation=" + std::to_string(eq.worst_deviation) +
                  " generator_angles=" + (eq.generator_angles_ok ? "ok" : "MISMATCH")});
            return finish(report) || !eq.ok() ? 1 : 0;
        }
        if (*orb) {
            Packing packing = orbit_packing(orb_i, orb_n, {orb_max});
            PackingReport report = out.mode == "auto" ? verify_orbit_packing(packing, true, out.jobs)
                                                      : verify_plain(packing, out);
            emit(out, packing, report);
            return finish(report);
        }
        if (*cl) {
            const auto graph = build_graph(cl_i, cl_d, cl_l);
            CliqueBudget budget;
            budget.max_seconds = cl_budget;
            budget.seed = cl_seed;
            if (cl_greedy) budget.local_search_steps = UINT64_MAX;
            const auto found = cl_greedy ? local_search_clique(graph, cl_target, budget)
                                         : max_clique(graph, cl_target, budget);
            if (!verify_clique_subspaces(graph, found.clique)) throw DomainError("clique failed direct verification");
            std::vector<F2Subspace> chosen;
            for (auto v : found.clique) chosen.push_back(graph.nodes[v]);
            const auto result = theorem2(cl_i, chosen, cl_l);
            const auto report = verify_group(result.packing, out, false);
            const auto& gp = result.packing;
            emit(out, out.out.empty() && out.format != "json" ? Packing{gp.m(), gp.n(), {}, gp.provenance, gp.claimed_d2}
                                                              : to_packing(gp),
                 report,
                 {"graph nodes=" + std::to_string(graph.size()) + " clique=" + std::to_string(found.clique.size()) +
                      (found.optimal ? " (maximum)" : " (best found)"),
                  "bound " + to_string(result.bound) + (result.equality ? " (attained)" : "")});
            return finish(report);
        }
        if (*verify) {
            const Packing packing = read_planeset(verify_path);
            const auto report = verify_plain(packing, vopt);
            if (vopt.format == "json") {
                std::cout << report_to_json(report).dump(1) << "\n";
            } else if (vopt.format == "csv") {
                std::cout << "m,n,N,d2,status,mode\n"
                          << report.m << "," << report.n << "," << report.N << "," << report.d2_string() << ","
                          << to_string(report.status) << "," << to_string(report.mode) << "\n";
            } else {
                std::cout << report.summary_line() << "\n";
            }
            return finish(report);
        }
        if (*count) {
            const std::uint64_t subspaces = count_totally_singular(cnt_i, cnt_k);
            std::cout << "totally singular " << (cnt_i - cnt_k) << "-spaces in dimension " << 2 * cnt_i << ": "
                      << subspaces << "\n";
            if (cnt_k < cnt_i) {
                std::cout << "theorem1 planes in G(" << (1 << cnt_i) << "," << (1 << cnt_k)
                          << "): " << theorem1_count(cnt_i, cnt_k) << " d2=" << to_string(theorem1_distance(cnt_k))
                          << "\n";
            }
            return 0;
        }
        if (*table) {
            const auto rows = table_rows(topt);
            if (tformat == "csv") std::cout << table_csv(rows);
            else if (tformat == "json") std::cout << table_json(rows);
            else std::cout << table_text(rows);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const PartialResultError& e) {
        std::cerr << "incomplete: " << e.what() << " (" << e.partial().planes.size() << " planes found)\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
