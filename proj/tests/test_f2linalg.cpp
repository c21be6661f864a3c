#include "grasspack/errors.hpp"
#include "grasspack/f2linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace grasspack;

namespace {

F2Subspace random_subspace(std::mt19937_64& rng, int length, int rows) {
    std::vector<Word> words;
    for (int r = 0; r < rows; ++r) words.push_back(static_cast<Word>(rng()) & ((Word{1} << length) - 1));
    return F2Subspace::canonicalize(length, words);
}

std::set<Word> element_set(const F2Subspace& s) {
    const auto e = s.elements();
    return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("vectors parse and add") {
    const auto v = F2Vector::parse("1010");
    CHECK(v.bits() == 0b1010u);
    CHECK(v.length() == 4);
    CHECK(v.bit(0));
    CHECK_FALSE(v.bit(1));
    CHECK(v.str() == "1010");
    CHECK((v + F2Vector::parse("0110")).str() == "1100");
    CHECK_THROWS_AS(F2Vector::parse("10a"), UsageError);
    CHECK_THROWS_AS(v + F2Vector::parse("01"), UsageError);
}

TEST_CASE("canonical basis is reduced row echelon with descending rows") {
    const std::vector<F2Vector> rows{F2Vector::parse("1100"), F2Vector::parse("0110"), F2Vector::parse("1010")};
    const auto s = F2Subspace::canonicalize(rows);
    CHECK(s.dim() == 2);
    CHECK(s.basis() == std::vector<Word>{0b1010, 0b0110});
    CHECK(s.contains(0b1100));
    CHECK_FALSE(s.contains(0b0001));
}

TEST_CASE("canonical form does not depend on the spanning set") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int length = 1 + static_cast<int>(rng() % 10);
        const auto s = random_subspace(rng, length, 1 + static_cast<int>(rng() % 6));
        // A second spanning set: random combinations of all elements plus the basis.
        std::vector<Word> others = s.elements();
        std::shuffle(others.begin(), others.end(), rng);
        CHECK(F2Subspace::canonicalize(length, others) == s);
        CHECK(s.elements().size() == (std::size_t{1} << s.dim()));
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << s.dim()); ++c) CHECK(s.coordinates(s.element(c)) == c);
    }
}

TEST_CASE("intersection agrees with brute force") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        const int length = 1 + static_cast<int>(rng() % 12);
        const auto a = random_subspace(rng, length, static_cast<int>(rng() % 7));
        const auto b = random_subspace(rng, length, static_cast<int>(rng() % 7));
        const auto meet = subspace_intersection(a, b);
        const auto ea = element_set(a);
        std::set<Word> expected;
        for (auto w : element_set(b))
            if (ea.count(w)) expected.insert(w);
        CHECK(element_set(meet) == expected);
        // dim(A + B) + dim(A meet B) = dim A + dim B
        CHECK(a.sum(b).dim() + meet.dim() == a.dim() + b.dim());
    }
}

TEST_CASE("forms on the quotient") {
    const OrthogonalSpace space(2);
    // X(11)Y(10): Q = 11.10 = 1
    CHECK(space.quadratic_form(0b1110) == 1);
    CHECK(space.quadratic_form(0b1101) == 1);
    CHECK(space.quadratic_form(0b1001) == 0);
    CHECK(quadratic_form(F2Vector::parse("1110")) == 1);
    CHECK(bilinear_form(F2Vector::parse("1000"), F2Vector::parse("0010")) == 1);
    CHECK_THROWS_AS(quadratic_form(F2Vector::parse("111")), UsageError);
    // B is the polarization of Q, exhaustively for i <= 3.
    for (int i = 1; i <= 3; ++i) {
        const OrthogonalSpace sp(i);
        const Word n = Word{1} << (2 * i);
        for (Word v = 0; v < n; ++v)
            for (Word w = 0; w < n; ++w)
                CHECK(sp.bilinear_form(v, w) ==
                      (sp.quadratic_form(v ^ w) ^ sp.quadratic_form(v) ^ sp.quadratic_form(w)));
    }
}

TEST_CASE("singular points and maximal subspaces") {
    for (int i = 1; i <= 5; ++i) {
        const OrthogonalSpace space(i);
        // plus type: (2^i - 1)(2^(i-1) + 1) nonzero singular points
        CHECK(space.singular_points().size() == ((std::size_t{1} << i) - 1) * ((std::size_t{1} << (i - 1)) + 1));
        CHECK(space.is_totally_singular(space.x_subspace()));
        CHECK(space.is_totally_singular(space.y_subspace()));
        CHECK(space.bilinear_rank(space.x_subspace().sum(space.y_subspace())) == 2 * i);
    }
}

TEST_CASE("enumeration counts match the formula") {
    CHECK(gaussian_binomial(4, 2) == 35);
    CHECK(gaussian_binomial(5, 0) == 1);
    CHECK_THROWS_AS(gaussian_binomial(3, 4), UsageError);
    CHECK(count_totally_singular(2, 0) == 6);
    CHECK(count_totally_singular(4, 0) == 270);
    CHECK(count_totally_singular(4, 3) == 135);
    CHECK(count_totally_singular(4, 1) == 2025);
    for (int i = 1; i <= 4; ++i) {
        const OrthogonalSpace space(i);
        for (int k = 0; k <= i; ++k) {
            const auto subspaces = enumerate_totally_singular(space, i - k);
            CHECK(subspaces.size() == count_totally_singular(i, k));
            CHECK(std::is_sorted(subspaces.begin(), subspaces.end()));
            CHECK(std::adjacent_find(subspaces.begin(), subspaces.end()) == subspaces.end());
            for (const auto& s : subspaces) {
                CHECK(s.dim() == i - k);
                CHECK(space.is_totally_singular(s));
            }
        }
    }
}

TEST_CASE("singular subspaces by brute force for i = 2") {
    // All 2-dim subspaces of F2^4 with Q identically 0.
    const OrthogonalSpace space(2);
    std::set<F2Subspace> expected;
    for (Word v = 1; v < 16; ++v)
        for (Word w = v + 1; w < 16; ++w) {
            const Word rows[] = {v, w};
            const auto s = F2Subspace::canonicalize(4, rows);
            if (s.dim() == 2 && space.is_totally_singular(s)) expected.insert(s);
        }
    const auto found = enumerate_totally_singular(space, 2);
    CHECK(std::set<F2Subspace>(found.begin(), found.end()) == expected);
}

TEST_CASE("range checks") {
    CHECK_THROWS_AS(OrthogonalSpace(0), UsageError);
    CHECK_THROWS_AS(OrthogonalSpace(16), UsageError);
    CHECK_THROWS_AS(count_totally_singular(3, 4), UsageError);
}
