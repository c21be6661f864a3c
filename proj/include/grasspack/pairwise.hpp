#pragma once

// Pairwise reduction kernels used by every verifier. Each reduction has a
// serial reference and an OpenMP version; both return identical results
// (minimum with the lexicographically least arg-min pair, and a spectrum).

#include "grasspack/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace grasspack {

using IndexPair = std::pair<std::uint64_t, std::uint64_t>;
using ExactPairFn = std::function<Rational(std::uint64_t, std::uint64_t)>;
using FloatPairFn = std::function<double(std::uint64_t, std::uint64_t)>;

struct ExactPairStats {
    std::uint64_t pairs = 0;
    Rational min{0};
    Rational max{0};
    IndexPair argmin{0, 0};
    std::map<Rational, std::uint64_t> spectrum;
};

struct FloatCluster {
    double value = 0;  // smallest member
    std::uint64_t count = 0;
};

struct FloatPairStats {
    std::uint64_t pairs = 0;
    double min = 0;
    double max = 0;
    IndexPair argmin{0, 0};
    // Keyed by d^2 rounded to the clustering grid.
    std::map<std::int64_t, FloatCluster> spectrum;
};

// Grid used to bucket float distances in the spectrum.
inline constexpr double kSpectrumGrid = 1e-8;

// An empty `pairs` span means all pairs a < b of `count` items.
ExactPairStats exact_pairs_serial(std::uint64_t count, std::span<const IndexPair> pairs,
                                  const ExactPairFn& d2);
ExactPairStats exact_pairs_parallel(std::uint64_t count, std::span<const IndexPair> pairs,
                                    const ExactPairFn& d2, int jobs = 0);
FloatPairStats float_pairs_serial(std::uint64_t count, std::span<const IndexPair> pairs,
                                  const FloatPairFn& d2);
FloatPairStats float_pairs_parallel(std::uint64_t count, std::span<const IndexPair> pairs,
                                    const FloatPairFn& d2, int jobs = 0);

// Deterministic sample of `samples` pairs a < b from mt19937_64(seed).
std::vector<IndexPair> sample_pairs(std::uint64_t count, std::uint64_t samples, std::uint64_t seed);

// Shared by both kernels.
void merge_into(ExactPairStats& into, const ExactPairStats& from);
void merge_into(FloatPairStats& into, const FloatPairStats& from);
void record(ExactPairStats& s, IndexPair ab, const Rational& d2);
void record(FloatPairStats& s, IndexPair ab, double d2);

}  // namespace grasspack
