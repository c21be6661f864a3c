#include "grasspack/pairwise.hpp"

#include "grasspack/errors.hpp"

#include <cmath>
#include <random>

namespace grasspack {

void record(ExactPairStats& s, IndexPair ab, const Rational& d2) {
    if (s.pairs == 0 || d2 < s.min || (d2 == s.min && ab < s.argmin)) {
        s.min = d2;
        s.argmin = ab;
    }
    if (s.pairs == 0 || d2 > s.max) s.max = d2;
    ++s.spectrum[d2];
    ++s.pairs;
}

void record(FloatPairStats& s, IndexPair ab, double d2) {
    if (s.pairs == 0 || d2 < s.min || (d2 == s.min && ab < s.argmin)) {
        s.min = d2;
        s.argmin = ab;
    }
    if (s.pairs == 0 || d2 > s.max) s.max = d2;
    auto& cluster = s.spectrum[std::llround(d2 / kSpectrumGrid)];
    if (cluster.count == 0 || d2 < cluster.value) cluster.value = d2;
    ++cluster.count;
    ++s.pairs;
}

void merge_into(ExactPairStats& into, const ExactPairStats& from) {
    if (from.pairs == 0) return;
    if (into.pairs == 0) {
        into = from;
        return;
    }
    if (from.min < into.min || (from.min == into.min && from.argmin < into.argmin)) {
        into.min = from.min;
        into.argmin = from.argmin;
    }
    if (from.max > into.max) into.max = from.max;
    for (const auto& [v, c] : from.spectrum) into.spectrum[v] += c;
    into.pairs += from.pairs;
}

void merge_into(FloatPairStats& into, const FloatPairStats& from) {
    if (from.pairs == 0) return;
    if (into.pairs == 0) {
        into = from;
        return;
    }
    if (from.min < into.min || (from.min == into.min && from.argmin < into.argmin)) {
        into.min = from.min;
        into.argmin = from.argmin;
    }
    if (from.max > into.max) into.max = from.max;
    for (const auto& [key, c] : from.spectrum) {
        auto& dst = into.spectrum[key];
        if (dst.count == 0 || c.value < dst.value) dst.value = c.value;
        dst.count += c.count;
    }
    into.pairs += from.pairs;
}

std::vector<IndexPair> sample_pairs(std::uint64_t count, std::uint64_t samples, std::uint64_t seed) {
    if (count < 2) throw UsageError("sampling pairs needs at least two planes");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
    std::vector<IndexPair> pairs;
    pairs.reserve(samples);
    while (pairs.size() < samples) {
        std::uint64_t a = pick(rng);
        std::uint64_t b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        pairs.emplace_back(a, b);
    }
    return pairs;
}

ExactPairStats exact_pairs_serial(std::uint64_t count, std::span<const IndexPair> pairs,
                                  const ExactPairFn& d2) {
    ExactPairStats stats;
    if (!pairs.empty()) {
        for (const auto& ab : pairs) record(stats, ab, d2(ab.first, ab.second));
        return stats;
    }
    for (std::uint64_t a = 0; a < count; ++a)
        for (std::uint64_t b = a + 1; b < count; ++b) record(stats, {a, b}, d2(a, b));
    return stats;
}

FloatPairStats float_pairs_serial(std::uint64_t count, std::span<const IndexPair> pairs,
                                  const FloatPairFn& d2) {
    FloatPairStats stats;
    if (!pairs.empty()) {
        for (const auto& ab : pairs) record(stats, ab, d2(ab.first, ab.second));
        return stats;
    }
    for (std::uint64_t a = 0; a < count; ++a)
        for (std::uint64_t b = a + 1; b < count; ++b) record(stats, {a, b}, d2(a, b));
    return stats;
}

}  // namespace grasspack
