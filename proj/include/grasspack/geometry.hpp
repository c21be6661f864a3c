#pragma once

// Real-side planes, chordal distances, principal angles, the simplex and
// orthoplex bounds, and whole-packing verification.

#include "grasspack/exact_matrix.hpp"
#include "grasspack/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace grasspack {

inline constexpr double kDistanceTolerance = 1e-9;
inline constexpr double kRankTolerance = 1e-12;

// A plane in G(m, n), held either as an exact projection matrix or as an
// n x m matrix with orthonormal rows.
class Plane {
public:
    static Plane from_projection(ExactMatrix projection);
    // Rows must already be orthonormal (checked to 1e-9).
    static Plane from_orthonormal_basis(Eigen::MatrixXd basis);
    // Orthonormalizes an arbitrary spanning set of `dim` independent rows.
    static Plane from_spanning_rows(const Eigen::MatrixXd& rows, int dim);

    bool is_exact() const { return std::holds_alternative<ExactMatrix>(rep_); }
    int ambient_dim() const { return m_; }
    int dim() const { return n_; }

    const ExactMatrix& exact_projection() const;
    Eigen::MatrixXd projection() const;
    // Orthonormal rows; for exact planes this is derived from the projection.
    Eigen::MatrixXd basis() const;

private:
    Plane(std::variant<ExactMatrix, Eigen::MatrixXd> rep, int m, int n);

    std::variant<ExactMatrix, Eigen::MatrixXd> rep_;
    int m_ = 0;
    int n_ = 0;
};

struct Packing {
    int m = 0;
    int n = 0;
    std::vector<Plane> planes;
    std::string provenance;
    // d^2 the constructor promises; verification fails when it is violated.
    std::optional<Rational> claimed_d2;

    bool is_exact() const;
};

// Modified Gram-Schmidt with column pivoting over the rows of `rows`; returns
// `dim` orthonormal rows spanning the same space. Throws DomainError when the
// pivot drops below kRankTolerance first.
Eigen::MatrixXd orthonormalize_rows(const Eigen::MatrixXd& rows, int dim);

// n - trace(P_P P_Q); exact requires both planes exact.
Rational chordal_distance_sq_exact(const Plane& p, const Plane& q);
double chordal_distance_sq(const Plane& p, const Plane& q);

// Sorted ascending, in [0, pi/2].
std::vector<double> principal_angles(const Plane& p, const Plane& q);

struct Bounds {
    Rational simplex;    // n(m-n)/m * N/(N-1)
    Rational orthoplex;  // n(m-n)/m
    std::int64_t D = 0;  // (m-1)(m+2)/2
    bool simplex_equality_possible = false;   // N <= D + 1
    bool orthoplex_applies = false;           // N > D + 1
    bool orthoplex_equality_possible = false; // N <= 2D
};

Rational simplex_bound(int m, int n, std::int64_t count);
Rational orthoplex_bound(int m, int n);
Bounds packing_bounds(int m, int n, std::int64_t count);

enum class VerifyMode { Exact, Float, Sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Exact;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0x5eed;
    bool parallel = true;
    int jobs = 0;  // 0: runtime default
};

enum class PackingStatus { MeetsSimplex, MeetsOrthoplex, BelowBounds };

std::string to_string(PackingStatus s);
std::string to_string(VerifyMode m);
VerifyMode parse_verify_mode(const std::string& text);

struct SpectrumEntry {
    std::string value;  // exact "num/den" or a %.12g float
    double approx = 0;
    std::uint64_t count = 0;
};

struct PackingReport {
    int m = 0;
    int n = 0;
    std::uint64_t N = 0;
    bool exact = false;
    std::optional<Rational> d2_min_exact;
    double d2_min = 0;
    std::pair<std::uint64_t, std::uint64_t> worst_pair{0, 0};
    std::vector<SpectrumEntry> spectrum;
    Bounds bounds;
    PackingStatus status = PackingStatus::BelowBounds;
    bool degenerate = false;       // some pair at distance 0
    bool bound_violated = false;   // d2_min above an applicable bound
    std::optional<Rational> claimed_d2;
    bool claim_violated = false;
    VerifyMode mode = VerifyMode::Exact;
    std::uint64_t seed = 0;
    std::uint64_t pairs_checked = 0;

    std::string d2_string() const;
    // e.g. "N=18 d2=1 orthoplex=1 MEETS-ORTHOPLEX"
    std::string summary_line() const;
};

// Fills bounds, status and flags once N, exact/d2_min and the spectrum are set.
void finalize_report(PackingReport& report);

PackingReport verify_packing(const Packing& packing, const VerifyOptions& options);

}  // namespace grasspack
