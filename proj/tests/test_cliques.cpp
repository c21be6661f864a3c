#include "grasspack/cliques.hpp"
#include "grasspack/construct.hpp"

#include <doctest.h>

#include <bit>

#include <random>

using namespace grasspack;

namespace {

SubspaceGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
    SubspaceGraph g;
    g.nodes.resize(n);
    g.adjacency.assign(n, Bitset(n));
    std::bernoulli_distribution edge(density);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (edge(rng)) {
                g.adjacency[u].set(v);
                g.adjacency[v].set(u);
            }
    return g;
}

// Exhaustive clique number by subset enumeration.
std::size_t brute_force_clique(const SubspaceGraph& g) {
    const std::size_t n = g.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            if ((mask >> u) & 1u)
                for (std::size_t v = u + 1; v < n && ok; ++v)
                    if ((mask >> v) & 1u) ok = g.edge(u, v);
        if (ok) best = size;
    }
    return best;
}

// Exhaustive clique number by simple recursion, for up to 200 nodes of a
// sparse graph.
void extend(const SubspaceGraph& g, std::vector<std::size_t>& current, std::size_t from, std::size_t& best) {
    best = std::max(best, current.size());
    for (std::size_t v = from; v < g.size(); ++v) {
        bool ok = true;
        for (auto u : current) ok = ok && g.edge(u, v);
        if (!ok) continue;
        current.push_back(v);
        extend(g, current, v + 1, best);
        current.pop_back();
    }
}

}  // namespace

TEST_CASE("bitset") {
    Bitset b(130);
    CHECK(b.none());
    b.set(3);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.first() == 3);
    CHECK(b.next(3) == 64);
    CHECK(b.next(64) == 129);
    CHECK(b.next(129) == 130);
    Bitset c(130);
    c.set(64);
    b &= c;
    CHECK(b.count() == 1);
    b.reset(64);
    CHECK(b.first() == 130);
}

TEST_CASE("max_clique agrees with brute force on random graphs") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 18;
        const auto g = random_graph(rng, n, 0.2 + 0.7 * (static_cast<double>(rng() % 100) / 100));
        const auto result = max_clique(g, 0, {});
        CHECK(result.optimal);
        CHECK(is_clique(g, result.clique));
        CHECK(result.clique.size() == brute_force_clique(g));
        CHECK(std::is_sorted(result.clique.begin(), result.clique.end()));
    }
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = random_graph(rng, 200, 0.1);
        const auto result = max_clique(g, 0, {});
        std::vector<std::size_t> current;
        std::size_t best = 0;
        extend(g, current, 0, best);
        CHECK(result.optimal);
        CHECK(result.clique.size() == best);
    }
}

TEST_CASE("local search finds valid cliques") {
    std::mt19937_64 rng(9);
    const auto g = random_graph(rng, 60, 0.5);
    CliqueBudget budget;
    budget.local_search_steps = 20000;
    const auto result = local_search_clique(g, 0, budget);
    CHECK_FALSE(result.optimal);
    CHECK(is_clique(g, result.clique));
    CHECK(result.clique.size() == max_clique(g, 0, {}).clique.size());
}

TEST_CASE("subspace graphs") {
    const auto g = build_graph(3, 2, 0);
    CHECK(g.size() == 105);
    for (std::size_t u = 0; u < g.size(); ++u) {
        CHECK_FALSE(g.edge(u, u));
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            CHECK(g.edge(u, v) == g.edge(v, u));
            CHECK(g.edge(u, v) == (subspace_intersection(g.nodes[u], g.nodes[v]).dim() == 0));
        }
    }
    const auto result = max_clique(g, 0, {});
    CHECK(result.optimal);
    CHECK(result.clique.size() == 10);
    CHECK(verify_clique_subspaces(g, result.clique));
    std::vector<F2Subspace> chosen;
    for (auto v : result.clique) chosen.push_back(g.nodes[v]);
    const auto packing = theorem2(3, chosen, 0);
    CHECK(packing.packing.planes.size() == 40);
    CHECK(verify_group_packing(packing.packing, {}).d2_min_exact == Rational(3, 2));

    // Stopping at a target does not claim optimality.
    const auto early = max_clique(g, 5, {});
    CHECK(early.clique.size() >= 5);
    CHECK_FALSE(early.optimal);
    CHECK(build_graph(4, 3, 0).size() == 2025);
}
