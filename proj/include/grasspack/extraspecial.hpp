#pragma once

// The extraspecial 2-group E = <X(a), Y(b)> acting on R^(2^i) by signed
// permutations, characters of the abelian preimages of totally singular
// subspaces, and the generators of its normalizer (the Clifford group).

#include "grasspack/exact_matrix.hpp"
#include "grasspack/f2linalg.hpp"

#include <optional>
#include <vector>

namespace grasspack {

// (-1)^sign X(a) Y(b), acting as e_u -> (-1)^(sign + b.u) e_(u+a).
struct GroupElement {
    int i = 1;
    bool sign = false;
    Word a = 0;
    Word b = 0;

    // Canonical lift X(a)Y(b) of the quotient element packed as (a << i) | b.
    static GroupElement lift(const OrthogonalSpace& space, Word v);

    Word bar() const { return (a << i) | b; }
    bool operator==(const GroupElement&) const = default;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
ExactMatrix as_matrix(const GroupElement& g);
// Inverse of as_matrix: recognizes a signed permutation matrix of E.
std::optional<GroupElement> decode_group_element(const ExactMatrix& m, int i);

// A linear character of the preimage S of a totally singular subspace with
// chi(-I) = -1. It is stored by its values on the canonical lifts of the echelon
// basis rows: bit j of `basis_signs` set means chi(lift(row_j)) = -1.
class CharacterAssignment {
public:
    CharacterAssignment(const OrthogonalSpace& space, F2Subspace base, std::uint64_t basis_signs);

    const F2Subspace& base() const { return base_; }
    std::uint64_t basis_signs() const { return basis_signs_; }

    // chi(lift(v)) in {+1, -1} for v in the base subspace.
    int sign(Word v) const;

    bool operator==(const CharacterAssignment& o) const {
        return base_ == o.base_ && basis_signs_ == o.basis_signs_;
    }

private:
    int i_;
    F2Subspace base_;
    std::uint64_t basis_signs_;
};

// Sign of the group-law cocycle: lift(u) lift(v) = cocycle(u,v) lift(u+v).
int cocycle(const OrthogonalSpace& space, Word u, Word v);

CharacterAssignment solve_character(const OrthogonalSpace& space, const F2Subspace& s);

// Orthogonal projection 2^(-dim S) sum_v chi(v) as_matrix(lift v) onto the
// common eigenspace of S selected by chi.
ExactMatrix character_projection(const OrthogonalSpace& space, const CharacterAssignment& chi);

struct InvariantPlane {
    CharacterAssignment character;
    ExactMatrix projection;
};

// All 2^(dim S) invariant planes of the preimage of S, ordered by basis_signs.
std::vector<InvariantPlane> invariant_planes(const OrthogonalSpace& space, const F2Subspace& s);

// Coordinate-permutation matrix G(A, a): e_u -> e_(Au + a). `columns[j]` is
// the image of the j-th unit vector (MSB first) under A.
ExactMatrix permutation_matrix(int i, const std::vector<Word>& columns, Word shift);

// Hadamard matrix H_(u,v) = 2^(-i/2) (-1)^(u.v).
ExactMatrix hadamard_transform(int i);

// H acting on the first bit only: H_(u,v) = 2^(-1/2) (-1)^(u_1 v_1) when u and v
// agree in every other bit, 0 otherwise.
ExactMatrix hadamard_first_bit(int i);
// X(e_j), Y(e_j) for every unit vector, then G(T,0) for a transvection T and
// G(C,0) for the cyclic coordinate shift C (when i >= 2), then H, then
// hadamard_first_bit (when i >= 2).
std::vector<ExactMatrix> clifford_generators(int i);

// Order of the Clifford group, 2^(i^2+i+2) (2^i - 1) prod_{j=1}^{i-1} (4^j - 1).
// Only defined while it fits in 64 bits.
std::uint64_t clifford_group_order(int i);

}  // namespace grasspack
