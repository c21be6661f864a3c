#pragma once

// Equidistant packings of p(p+1)/2 planes in G(p, (p-1)/2) built from the
// quadratic residues mod p and a normalized Hadamard matrix of order (p+1)/2.

#include "grasspack/geometry.hpp"

#include <optional>
#include <vector>

namespace grasspack {

bool is_prime(int p);

struct ResidueData {
    int p = 0;
    std::vector<int> residues;     // ascending nonzero squares mod p
    std::vector<int> nonresidues;  // ascending
    int k = 0;                     // chosen nonresidue
};

// p must be 3 or a prime = -1 mod 8. k defaults to the smallest nonresidue.
ResidueData residue_data(int p, std::optional<int> k = std::nullopt);

struct HadamardMatrix {
    int order = 0;
    std::vector<int> entries;  // row major, +-1

    int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * order + c]; }
    int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * order + c]; }
    bool is_hadamard() const;    // H H^t = order I, exactly
    bool is_normalized() const;  // first row and column all +1
};

// Sylvester doubling and Paley type I (q = order-1 prime, q = 3 mod 4), in
// that preference order, then normalized. UnsupportedError otherwise.
HadamardMatrix hadamard(int order);
bool hadamard_supported(int order);

// (1 + sqrt(p+2)) / sqrt(p+1)
double theorem3_c(int p);
// (p+1)^2 / (4(p+2))
Rational theorem3_distance(int p);

// Unnormalized spanning vectors of the base plane P_t, one row per residue
// q_s: e_(q_s) + H_(s,t) C e_(k q_s mod p).
Eigen::MatrixXd theorem3_generator(const ResidueData& residues, const HadamardMatrix& h, int t);

// Planes P_0..P_((p-1)/2) and all their cyclic shifts, ordered
// (t, shift) with the shift varying fastest.
Packing theorem3(int p, std::optional<int> k = std::nullopt);

// Applies e_c -> e_(c+shift mod p) to a basis.
Eigen::MatrixXd cyclic_shift(const Eigen::MatrixXd& basis, int shift);

struct EquidistanceReport {
    int p = 0;
    std::uint64_t N = 0;
    double target_d2 = 0;
    double worst_deviation = 0;
    std::pair<std::uint64_t, std::uint64_t> worst_pair{0, 0};
    bool all_equal = false;          // every pair within tolerance of the target
    bool meets_simplex = false;
    bool generator_angles_ok = false;
    std::uint64_t pairs_checked = 0;
    std::vector<double> generator_angles;  // between P_0 and P_1

    bool ok() const { return all_equal && meets_simplex && generator_angles_ok; }
};

// Checks every pair (or `samples` random pairs when samples > 0) against
// (p+1)^2/(4(p+2)) and the angle pattern of same-orbit pairs.
EquidistanceReport verify_equidistance(const Packing& packing, int p, std::uint64_t samples = 0,
                                       std::uint64_t seed = 0x5eed, bool parallel = true);

}  // namespace grasspack
