#include "grasspack/pairwise.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace grasspack;

namespace {

// Distances with plenty of ties so the arg-min rule matters.
Rational exact_d2(std::uint64_t a, std::uint64_t b) { return Rational(static_cast<std::int64_t>((a * 7 + b * 3) % 11 + 1), 4); }

double float_d2(std::uint64_t a, std::uint64_t b) { return 1.0 + std::sin(static_cast<double>(a * 13 + b * 5)) * 0.5; }

}  // namespace

TEST_CASE("serial and parallel exact kernels agree") {
    for (std::uint64_t count : {2u, 3u, 17u, 200u}) {
        for (int jobs : {1, 2, 4}) {
            const auto s = exact_pairs_serial(count, {}, exact_d2);
            const auto p = exact_pairs_parallel(count, {}, exact_d2, jobs);
            CHECK(s.pairs == count * (count - 1) / 2);
            CHECK(p.pairs == s.pairs);
            CHECK(p.min == s.min);
            CHECK(p.max == s.max);
            CHECK(p.argmin == s.argmin);
            CHECK(p.spectrum == s.spectrum);
        }
    }
    // The arg-min is the lexicographically least minimizing pair.
    const auto s = exact_pairs_serial(200, {}, exact_d2);
    for (std::uint64_t a = 0; a < 200; ++a)
        for (std::uint64_t b = a + 1; b < 200; ++b)
            if (exact_d2(a, b) == s.min) {
                CHECK(s.argmin == IndexPair{a, b});
                return;
            }
}

TEST_CASE("serial and parallel float kernels agree") {
    for (std::uint64_t count : {2u, 50u, 300u}) {
        const auto s = float_pairs_serial(count, {}, float_d2);
        const auto p = float_pairs_parallel(count, {}, float_d2, 3);
        CHECK(p.pairs == s.pairs);
        CHECK(p.min == s.min);
        CHECK(p.max == s.max);
        CHECK(p.argmin == s.argmin);
        REQUIRE(p.spectrum.size() == s.spectrum.size());
        auto it = p.spectrum.begin();
        for (const auto& [key, cluster] : s.spectrum) {
            CHECK(it->first == key);
            CHECK(it->second.count == cluster.count);
            CHECK(it->second.value == cluster.value);
            ++it;
        }
    }
}

TEST_CASE("explicit pair lists") {
    const auto pairs = sample_pairs(1000, 5000, 17);
    CHECK(pairs.size() == 5000);
    for (const auto& [a, b] : pairs) {
        CHECK(a < b);
        CHECK(b < 1000);
    }
    CHECK(sample_pairs(1000, 5000, 17) == pairs);
    CHECK(sample_pairs(1000, 5000, 18) != pairs);
    const auto s = exact_pairs_serial(1000, pairs, exact_d2);
    const auto p = exact_pairs_parallel(1000, pairs, exact_d2, 4);
    CHECK(s.pairs == 5000);
    CHECK(p.min == s.min);
    CHECK(p.argmin == s.argmin);
    CHECK(p.spectrum == s.spectrum);
}

TEST_CASE("merging partial results") {
    ExactPairStats a, b;
    record(a, {0, 5}, Rational(1));
    record(b, {0, 2}, Rational(1));
    record(b, {1, 2}, Rational(3));
    merge_into(a, b);
    CHECK(a.pairs == 3);
    CHECK(a.argmin == IndexPair{0, 2});
    CHECK(a.max == Rational(3));
    CHECK(a.spectrum.at(Rational(1)) == 2);
}
