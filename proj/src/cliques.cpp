#include "grasspack/cliques.hpp"

#include "grasspack/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>

namespace grasspack {

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitset::first() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return size_;
}

std::size_t Bitset::next(std::size_t after) const {
    std::size_t j = after + 1;
    if (j >= size_) return size_;
    std::size_t k = j >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (j & 63));
    while (true) {
        if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
        if (++k >= words_.size()) return size_;
        w = words_[k];
    }
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
}

SubspaceGraph build_graph_on(int i, std::vector<F2Subspace> nodes, int ell) {
    SubspaceGraph g;
    g.i = i;
    g.d = nodes.empty() ? 0 : nodes.front().dim();
    g.ell = ell;
    g.nodes = std::move(nodes);
    const std::size_t n = g.nodes.size();
    g.adjacency.assign(n, Bitset(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (subspace_intersection(g.nodes[u], g.nodes[v]).dim() <= ell) {
                g.adjacency[u].set(v);
                g.adjacency[v].set(u);
            }
        }
    }
    return g;
}

SubspaceGraph build_graph(int i, int d, int ell) {
    if (ell < 0 || ell >= d || d > i) {
        throw UsageError("build_graph needs 0 <= l < d <= i (got i=" + std::to_string(i) + ", d=" +
                         std::to_string(d) + ", l=" + std::to_string(ell) + ")");
    }
    const OrthogonalSpace space(i);
    auto g = build_graph_on(i, enumerate_totally_singular(space, d), ell);
    g.d = d;
    return g;
}

bool is_clique(const SubspaceGraph& graph, const std::vector<std::size_t>& nodes) {
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (nodes[a] == nodes[b] || !graph.edge(nodes[a], nodes[b])) return false;
    return true;
}

bool verify_clique_subspaces(const SubspaceGraph& graph, const std::vector<std::size_t>& nodes) {
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            if (nodes[a] == nodes[b]) return false;
            const auto t = subspace_intersection(graph.nodes[nodes[a]], graph.nodes[nodes[b]]).dim();
            if (t > graph.ell) return false;
        }
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(double seconds)
        : enabled_(seconds > 0),
          end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}
    bool passed() const { return enabled_ && Clock::now() >= end_; }

private:
    bool enabled_;
    Clock::time_point end_;
};

struct BranchAndBound {
    const std::vector<Bitset>& adj;  // in search order
    std::size_t target;
    std::uint64_t max_nodes;
    const Deadline& deadline;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    std::uint64_t nodes = 0;
    bool aborted = false;

    bool done() const { return target > 0 && best.size() >= target; }

    void expand(Bitset candidates) {
        if (aborted || done()) return;
        ++nodes;
        if ((max_nodes && nodes > max_nodes) || ((nodes & 255) == 0 && deadline.passed())) {
            aborted = true;
            return;
        }
        // Greedy sequential coloring; color classes give the bound.
        std::vector<std::size_t> order;
        std::vector<std::size_t> color;
        Bitset uncolored = candidates;
        std::size_t k = 0;
        while (!uncolored.none()) {
            ++k;
            Bitset available = uncolored;
            for (std::size_t v = available.first(); v < available.size(); v = available.first()) {
                uncolored.reset(v);
                available.reset(v);
                auto& aw = available.words();
                const auto& nw = adj[v].words();
                for (std::size_t w = 0; w < aw.size(); ++w) aw[w] &= ~nw[w];
                order.push_back(v);
                color.push_back(k);
            }
        }
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + color[idx] <= best.size()) return;
            const std::size_t v = order[idx];
            current.push_back(v);
            Bitset next = candidates;
            next &= adj[v];
            if (next.none()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(std::move(next));
            }
            current.pop_back();
            if (aborted || done()) return;
            candidates.reset(v);
        }
    }
};

}  // namespace

CliqueResult local_search_clique(const SubspaceGraph& graph, std::size_t target, const CliqueBudget& budget) {
    const std::size_t n = graph.size();
    CliqueResult result;
    if (n == 0) return result;
    const Deadline deadline(budget.max_seconds);
    std::mt19937_64 rng(budget.seed);

    std::vector<std::uint8_t> in_clique(n, 0);
    std::vector<std::uint32_t> missing(n, 0);  // members of C not adjacent to v
    std::vector<std::uint64_t> tabu_until(n, 0);
    std::vector<std::uint32_t> penalty(n, 0);
    std::vector<std::size_t> members;
    std::vector<std::size_t> best;

    const auto add = [&](std::size_t w) {
        in_clique[w] = 1;
        members.push_back(w);
        for (std::size_t v = 0; v < n; ++v)
            if (v != w && !graph.edge(v, w)) ++missing[v];
    };
    const auto remove = [&](std::size_t u) {
        in_clique[u] = 0;
        members.erase(std::find(members.begin(), members.end(), u));
        for (std::size_t v = 0; v < n; ++v)
            if (v != u && !graph.edge(v, u)) --missing[v];
    };
    const auto pick_min_penalty = [&](const std::vector<std::size_t>& cands) {
        std::uint32_t low = UINT32_MAX;
        for (auto v : cands) low = std::min(low, penalty[v]);
        std::vector<std::size_t> top;
        for (auto v : cands)
            if (penalty[v] == low) top.push_back(v);
        return top[std::uniform_int_distribution<std::size_t>(0, top.size() - 1)(rng)];
    };

    std::uniform_int_distribution<std::size_t> any_vertex(0, n - 1);
    add(any_vertex(rng));
    std::uint64_t perturbations = 0;
    std::uint64_t since_improvement = 0;
    std::vector<std::size_t> adds, swaps;
    for (std::uint64_t step = 1; step <= budget.local_search_steps; ++step) {
        if ((step & 1023) == 0 && deadline.passed()) break;
        if (members.size() > best.size()) {
            best = members;
            since_improvement = 0;
            if (target > 0 && best.size() >= target) break;
        }
        adds.clear();
        swaps.clear();
        for (std::size_t v = 0; v < n; ++v) {
            if (in_clique[v]) continue;
            if (missing[v] == 0) adds.push_back(v);
            else if (missing[v] == 1 && tabu_until[v] <= step) swaps.push_back(v);
        }
        ++since_improvement;
        if (!adds.empty()) {
            add(pick_min_penalty(adds));
        } else if (!swaps.empty() && since_improvement < 4 * n) {
            const std::size_t v = pick_min_penalty(swaps);
            std::size_t u = n;
            for (auto w : members) {
                if (!graph.edge(v, w)) {
                    u = w;
                    break;
                }
            }
            remove(u);
            tabu_until[u] = step + 7;
            add(v);
        } else {
            // Plateau exhausted: penalize the current clique and restart near a
            // random vertex.
            for (auto w : members) ++penalty[w];
            if (++perturbations % 2 == 0) {
                for (auto& p : penalty)
                    if (p) --p;
            }
            const std::size_t v = any_vertex(rng);
            std::vector<std::size_t> keep;
            for (auto w : members)
                if (w != v && graph.edge(v, w)) keep.push_back(w);
            while (!members.empty()) remove(members.back());
            for (auto w : keep) add(w);
            if (!in_clique[v]) add(v);
            since_improvement = 0;
        }
        result.nodes_explored = step;
    }
    if (members.size() > best.size()) best = members;
    std::sort(best.begin(), best.end());
    result.clique = std::move(best);
    return result;
}

CliqueResult max_clique(const SubspaceGraph& graph, std::size_t target, const CliqueBudget& budget) {
    const std::size_t n = graph.size();
    CliqueResult result;
    if (n == 0) {
        result.optimal = true;
        return result;
    }
    const Deadline deadline(budget.max_seconds);

    // Incumbent from local search, limited to a quarter of the time budget.
    CliqueBudget seed_budget = budget;
    seed_budget.max_seconds = budget.max_seconds / 4;
    auto seed = local_search_clique(graph, target, seed_budget);
    if (target > 0 && seed.clique.size() >= target) return seed;

    // Search order: degree descending, enumeration order on ties.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return graph.degree(a) > graph.degree(b); });
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
    std::vector<Bitset> adj(n, Bitset(n));
    for (std::size_t p = 0; p < n; ++p) {
        const auto& row = graph.adjacency[order[p]];
        for (std::size_t v = row.first(); v < n; v = row.next(v)) adj[p].set(position[v]);
    }

    BranchAndBound bb{adj, target, budget.max_nodes, deadline, {}, {}, 0, false};
    for (auto v : seed.clique) bb.best.push_back(position[v]);
    Bitset all(n);
    for (std::size_t p = 0; p < n; ++p) all.set(p);
    bb.expand(all);

    for (auto p : bb.best) result.clique.push_back(order[p]);
    std::sort(result.clique.begin(), result.clique.end());
    result.optimal = !bb.aborted && !bb.done();
    // Reaching the target early only proves optimality if nothing larger can exist.
    if (bb.done() && !bb.aborted) result.optimal = false;
    result.nodes_explored = bb.nodes + seed.nodes_explored;
    return result;
}

}  // namespace grasspack
