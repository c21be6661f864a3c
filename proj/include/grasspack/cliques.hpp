#pragma once

// Intersection graphs on totally singular subspaces and clique search.

#include "grasspack/f2linalg.hpp"

#include <cstdint>
#include <vector>

namespace grasspack {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t j) const { return (words_[j >> 6] >> (j & 63)) & 1u; }
    void set(std::size_t j) { words_[j >> 6] |= std::uint64_t{1} << (j & 63); }
    void reset(std::size_t j) { words_[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }
    std::size_t count() const;
    bool none() const;
    // Smallest set index, or size() if empty.
    std::size_t first() const;
    std::size_t next(std::size_t after) const;

    Bitset& operator&=(const Bitset& o);
    std::vector<std::uint64_t>& words() { return words_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct SubspaceGraph {
    int i = 0;
    int d = 0;
    int ell = 0;
    std::vector<F2Subspace> nodes;   // enumeration order
    std::vector<Bitset> adjacency;

    std::size_t size() const { return nodes.size(); }
    bool edge(std::size_t u, std::size_t v) const { return adjacency[u].test(v); }
    std::size_t degree(std::size_t u) const { return adjacency[u].count(); }
};

// Nodes: all totally singular d-subspaces; edge iff they meet in dim <= l.
SubspaceGraph build_graph(int i, int d, int ell);
// Graph on arbitrary nodes with the same intersection rule.
SubspaceGraph build_graph_on(int i, std::vector<F2Subspace> nodes, int ell);

struct CliqueBudget {
    std::uint64_t max_nodes = 0;  // branch-and-bound nodes, 0: unlimited
    double max_seconds = 0;       // wall clock, 0: unlimited
    std::uint64_t local_search_steps = 200000;
    std::uint64_t seed = 1;
};

struct CliqueResult {
    std::vector<std::size_t> clique;  // ascending node indices
    bool optimal = false;             // search space exhausted
    std::uint64_t nodes_explored = 0;
};

// Branch and bound with greedy-coloring bounds, seeded by local search.
// Stops early once a clique of size >= target is found (target 0: never).
CliqueResult max_clique(const SubspaceGraph& graph, std::size_t target, const CliqueBudget& budget);

// Randomized local search (add moves, one-for-one swaps with tabu, restarts).
// Never claims optimality.
CliqueResult local_search_clique(const SubspaceGraph& graph, std::size_t target, const CliqueBudget& budget);

bool is_clique(const SubspaceGraph& graph, const std::vector<std::size_t>& nodes);
// Checks the intersection rule directly on the subspaces, not the adjacency.
bool verify_clique_subspaces(const SubspaceGraph& graph, const std::vector<std::size_t>& nodes);

}  // namespace grasspack
