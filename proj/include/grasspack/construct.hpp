#pragma once

// Packings from invariant planes of abelian subgroups of E, and orbits of a
// starting plane under the Clifford group.

#include "grasspack/extraspecial.hpp"
#include "grasspack/geometry.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasspack {

// One common eigenspace of the preimage of a totally singular subspace.
struct GroupPlane {
    F2Subspace subspace;
    std::uint64_t signs = 0;  // CharacterAssignment::basis_signs

    CharacterAssignment character(const OrthogonalSpace& space) const {
        return CharacterAssignment(space, subspace, signs);
    }
    bool operator==(const GroupPlane&) const = default;
};

struct GroupPacking {
    int i = 1;
    int k = 0;
    std::vector<GroupPlane> planes;
    std::string provenance;
    std::optional<Rational> claimed_d2;

    int m() const { return 1 << i; }
    int n() const { return 1 << k; }
};

// All 2^(dim S) invariant planes of one subspace, ordered by sign mask.
std::vector<GroupPlane> planes_of(const F2Subspace& s);

// Every invariant plane of every totally singular (i-k)-subspace.
GroupPacking theorem1(int i, int k);

// 2^(i-k) [i k] prod_{j=k}^{i-1} (2^j + 1)
std::uint64_t theorem1_count(int i, int k);
// 2^(k-1), or 1/2 for lines.
Rational theorem1_distance(int k);

// d^2 from the group data alone: 2^k when the characters disagree on the
// common subgroup, otherwise 2^k - 2^(2k-i+t) with t = dim of the
// intersection of the two subspaces.
Rational pair_distance(const OrthogonalSpace& space, const GroupPlane& p, const GroupPlane& q);

// The same quantity through exact projections: 2^k - trace(P_p P_q).
Rational pair_distance_by_trace(const OrthogonalSpace& space, const GroupPlane& p, const GroupPlane& q);

struct AngleSpectrum {
    int n = 1;               // plane dimension 2^k
    bool compatible = false; // characters agree on the common subgroup
    int t = 0;               // dim of the intersection of the subspaces
    int r = 0;               // rank of Q on the span of both subspaces
    std::int64_t n1 = 0;     // number of angles below pi/2

    // n1 copies of arccos 2^(-r/4), the rest pi/2; ascending.
    std::vector<double> angles() const;
    Rational distance_sq() const;
};

AngleSpectrum principal_angle_spectrum(const OrthogonalSpace& space, const GroupPlane& p,
                                       const GroupPlane& q);

struct Theorem2Result {
    GroupPacking packing;
    Rational bound;                    // 2^k - 2^(2k+l-i)
    bool equality = false;             // some pair meets in dim exactly l
    int max_intersection = -1;         // -1 for a single subspace
};

Theorem2Result theorem2(int i, const std::vector<F2Subspace>& subspaces, int ell);

// Exact projections for every plane, in order.
Packing to_packing(const GroupPacking& packing);

// Pairwise verification with pair_distance (Exact: all pairs, Sampled: random
// pairs). Float mode is rejected; use to_packing for that.
PackingReport verify_group_packing(const GroupPacking& packing, const VerifyOptions& options);

// Exact minimum distance of a packing that is a single orbit of an isometry
// group: every distance already occurs between plane 0 and some other plane.
PackingReport verify_orbit_packing(const Packing& packing, bool parallel = true, int jobs = 0);
PackingReport verify_orbit_group_packing(const GroupPacking& packing, bool parallel = true, int jobs = 0);

struct OrbitOptions {
    std::uint64_t max_planes = 4'000'000;
};

class PartialResultError : public std::runtime_error {
public:
    PartialResultError(const std::string& what, Packing partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const Packing& partial() const { return partial_; }

private:
    Packing partial_;
};

// Conjugation by one Clifford generator, with fast paths for signed
// permutations and Hadamard transforms on all bits or the first bit.
class Conjugator {
public:
    explicit Conjugator(const ExactMatrix& generator);
    ExactMatrix apply(const ExactMatrix& projection) const;

private:
    enum class Kind { SignedPermutation, Hadamard, Dense };
    Kind kind_;
    ExactMatrix generator_;
    std::vector<int> image_;  // column c -> row of its nonzero entry
    std::vector<int> sign_;
    int log2m_ = 0;
    int hadamard_bits_ = 0;  // index bits the Walsh transform runs over
};

// Orbit under the Clifford group of the plane spanned by the first n
// coordinate vectors, breadth first in generator order.
Packing orbit_packing(int i, int n, const OrbitOptions& options = {});

}  // namespace grasspack
