#pragma once

// Orthogonal spreads of the plus-type space and field spreads of F2^i, the
// inputs for the spread-based Theorem 2 packings.

#include "grasspack/f2linalg.hpp"

#include <cstdint>
#include <vector>

namespace grasspack {

struct OrthogonalSpread {
    int i = 0;
    std::vector<F2Subspace> members;  // 2^(i-1)+1 maximal totally singular spaces
};

struct FieldSpread {
    int i = 0;
    int j = 0;
    std::vector<F2Subspace> members;  // (2^i-1)/(2^j-1) subspaces of dim j
};

// Partition of the nonzero singular points into maximal totally singular
// spaces, found by exact search in a fixed order. i must be even.
// `node_budget` caps search nodes (0: unlimited); UnsupportedError if hit.
OrthogonalSpread orthogonal_spread(int i, std::uint64_t node_budget = 0);

// Lexicographically least irreducible polynomial of degree `degree` over F2
// (bit d is the coefficient of x^d), tabulated for degree <= 8.
Word irreducible_polynomial(int degree);

// Multiplication in F2[x]/(poly).
Word gf_multiply(Word x, Word y, Word poly, int degree);

// F_(2^j)-multiples classes of nonzero elements of F_(2^i); j must divide i.
FieldSpread field_spread(int i, int j);

// Field spread of F2^i carried into every member of orthogonal_spread(i) via
// the map sending the standard basis to the member's echelon basis. Yields
// (2^(i-1)+1)(2^i-1)/(2^j-1) totally singular j-spaces meeting pairwise in 0.
std::vector<F2Subspace> example_b(int i, int j);

// True when `parts` are pairwise trivially intersecting and jointly cover
// exactly the vectors of `points`.
bool is_partition(const std::vector<F2Subspace>& parts, const std::vector<Word>& points);

}  // namespace grasspack
