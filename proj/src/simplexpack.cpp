#include "grasspack/simplexpack.hpp"

#include "grasspack/errors.hpp"
#include "grasspack/pairwise.hpp"

#include <algorithm>
#include <cmath>

namespace grasspack {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ResidueData residue_data(int p, std::optional<int> k) {
    if (!is_prime(p) || !(p == 3 || p % 8 == 7)) {
        throw DomainError("p must be 3 or a prime congruent to -1 mod 8 (got " + std::to_string(p) + ")");
    }
    ResidueData data;
    data.p = p;
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (int x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
    for (int x = 1; x < p; ++x) (square[static_cast<std::size_t>(x)] ? data.residues : data.nonresidues).push_back(x);
    data.k = k.value_or(data.nonresidues.front());
    if (std::find(data.nonresidues.begin(), data.nonresidues.end(), data.k) == data.nonresidues.end()) {
        throw DomainError("k=" + std::to_string(data.k) + " is not a quadratic nonresidue mod " + std::to_string(p));
    }
    return data;
}

bool HadamardMatrix::is_hadamard() const {
    for (int r = 0; r < order; ++r) {
        for (int s = 0; s < order; ++s) {
            long dot = 0;
            for (int c = 0; c < order; ++c) dot += at(r, c) * at(s, c);
            if (dot != (r == s ? order : 0)) return false;
        }
    }
    return true;
}

bool HadamardMatrix::is_normalized() const {
    for (int j = 0; j < order; ++j)
        if (at(0, j) != 1 || at(j, 0) != 1) return false;
    return true;
}

namespace {

bool paley_order(int order) {
    const int q = order - 1;
    return order % 4 == 0 && is_prime(q) && q % 4 == 3;
}

HadamardMatrix build(int order) {
    HadamardMatrix h;
    h.order = order;
    h.entries.assign(static_cast<std::size_t>(order) * order, 1);
    if (order == 1) return h;
    if (order == 2) {
        h.at(1, 1) = -1;
        return h;
    }
    if (order % 2 == 0 && hadamard_supported(order / 2)) {
        const HadamardMatrix half = build(order / 2);
        const int o = order / 2;
        for (int r = 0; r < o; ++r) {
            for (int c = 0; c < o; ++c) {
                const int x = half.at(r, c);
                h.at(r, c) = x;
                h.at(r, c + o) = x;
                h.at(r + o, c) = x;
                h.at(r + o, c + o) = -x;
            }
        }
        return h;
    }
    if (paley_order(order)) {
        // H = I + S with S = [[0, 1^t], [-1, Jacobsthal]]
        const int q = order - 1;
        std::vector<int> chi(static_cast<std::size_t>(q), -1);
        chi[0] = 0;
        for (int x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;
        for (int r = 0; r < order; ++r) {
            for (int c = 0; c < order; ++c) {
                int s;
                if (r == 0 && c == 0) s = 0;
                else if (r == 0) s = 1;
                else if (c == 0) s = -1;
                else s = chi[static_cast<std::size_t>(((c - r) % q + q) % q)];
                h.at(r, c) = s + (r == c ? 1 : 0);
            }
        }
        return h;
    }
    throw UnsupportedError("no Sylvester/Paley construction for a Hadamard matrix of order " + std::to_string(order));
}

void normalize(HadamardMatrix& h) {
    for (int r = 0; r < h.order; ++r) {
        if (h.at(r, 0) < 0)
            for (int c = 0; c < h.order; ++c) h.at(r, c) = -h.at(r, c);
    }
    for (int c = 0; c < h.order; ++c) {
        if (h.at(0, c) < 0)
            for (int r = 0; r < h.order; ++r) h.at(r, c) = -h.at(r, c);
    }
}

}  // namespace

bool hadamard_supported(int order) {
    if (order == 1 || order == 2) return true;
    if (order < 1 || order % 4 != 0) return false;
    return hadamard_supported(order / 2) || paley_order(order);
}

HadamardMatrix hadamard(int order) {
    if (!hadamard_supported(order)) {
        throw UnsupportedError("no Sylvester/Paley construction for a Hadamard matrix of order " + std::to_string(order));
    }
    HadamardMatrix h = build(order);
    normalize(h);
    if (!h.is_hadamard()) throw DomainError("constructed matrix is not Hadamard");
    return h;
}

double theorem3_c(int p) { return (1.0 + std::sqrt(p + 2.0)) / std::sqrt(p + 1.0); }

Rational theorem3_distance(int p) { return Rational(std::int64_t{p + 1} * (p + 1), std::int64_t{4} * (p + 2)); }

Eigen::MatrixXd theorem3_generator(const ResidueData& rd, const HadamardMatrix& h, int t) {
    const int p = rd.p;
    const int half = (p - 1) / 2;
    if (h.order != half + 1) throw UsageError("Hadamard order must be (p+1)/2");
    if (t < 0 || t > half) throw UsageError("plane index t out of range");
    const double c = theorem3_c(p);
    Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(half, p);
    for (int s = 1; s <= half; ++s) {
        const int q = rd.residues[static_cast<std::size_t>(s - 1)];
        rows(s - 1, q) = 1.0;
        rows(s - 1, rd.k * q % p) = h.at(s, t) * c;
    }
    return rows;
}

Eigen::MatrixXd cyclic_shift(const Eigen::MatrixXd& basis, int shift) {
    const auto p = basis.cols();
    Eigen::MatrixXd out(basis.rows(), p);
    for (Eigen::Index c = 0; c < p; ++c) out.col((c + shift) % p) = basis.col(c);
    return out;
}

Packing theorem3(int p, std::optional<int> k) {
    const ResidueData rd = residue_data(p, k);
    const HadamardMatrix h = hadamard((p + 1) / 2);
    const int half = (p - 1) / 2;
    const double norm = std::sqrt(1.0 + theorem3_c(p) * theorem3_c(p));
    Packing packing;
    packing.m = p;
    packing.n = half;
    packing.provenance = "theorem3 p=" + std::to_string(p) + " k=" + std::to_string(rd.k);
    packing.claimed_d2 = theorem3_distance(p);
    for (int t = 0; t <= half; ++t) {
        // The rows have disjoint supports, so scaling makes them orthonormal.
        const Eigen::MatrixXd base = theorem3_generator(rd, h, t) / norm;
        for (int shift = 0; shift < p; ++shift) {
            packing.planes.push_back(Plane::from_orthonormal_basis(cyclic_shift(base, shift)));
        }
    }
    return packing;
}

EquidistanceReport verify_equidistance(const Packing& packing, int p, std::uint64_t samples, std::uint64_t seed,
                                       bool parallel) {
    EquidistanceReport report;
    report.p = p;
    report.N = packing.planes.size();
    report.target_d2 = to_double(theorem3_distance(p));
    if (packing.m != p || packing.n != (p - 1) / 2 || report.N < 2) {
        throw UsageError("packing does not have the shape of a theorem3 packing");
    }
    std::vector<Eigen::MatrixXd> bases;
    bases.reserve(report.N);
    for (const auto& plane : packing.planes) bases.push_back(plane.basis());
    const double n = packing.n;
    const FloatPairFn d2 = [&](std::uint64_t a, std::uint64_t b) {
        return n - (bases[a] * bases[b].transpose()).squaredNorm();
    };
    std::vector<IndexPair> pairs;
    if (samples > 0) pairs = sample_pairs(report.N, samples, seed);
    const auto stats = parallel ? float_pairs_parallel(report.N, pairs, d2) : float_pairs_serial(report.N, pairs, d2);
    report.pairs_checked = stats.pairs;
    const double low = report.target_d2 - stats.min;
    const double high = stats.max - report.target_d2;
    report.worst_deviation = std::max(std::abs(low), std::abs(high));
    report.worst_pair = stats.argmin;
    if (std::abs(high) > std::abs(low)) {
        // locate the pair realizing the maximum for the failure message
        for (std::uint64_t a = 0; a < report.N && report.worst_pair == stats.argmin; ++a)
            for (std::uint64_t b = a + 1; b < report.N; ++b)
                if (d2(a, b) == stats.max) {
                    report.worst_pair = {a, b};
                    break;
                }
    }
    report.all_equal = report.worst_deviation <= kDistanceTolerance;
    const double simplex = to_double(simplex_bound(p, packing.n, static_cast<std::int64_t>(report.N)));
    report.meets_simplex = std::abs(stats.min - simplex) <= kDistanceTolerance;

    // Unshifted generators P_t, P_t' (t != t') meet at (p-3)/4 zero angles
    // and (p+1)/4 angles equal to arcsin(2C/(1+C^2)).
    const double c = theorem3_c(p);
    const double theta = std::asin(2 * c / (1 + c * c));
    const auto zeros = static_cast<std::size_t>((p - 3) / 4);
    const auto generators = static_cast<std::size_t>((p + 1) / 2);
    const auto generator = [&](std::size_t t) -> const Plane& { return packing.planes[t * p]; };
    bool ok = report.N == generators * p;
    for (std::size_t t = 0; ok && t < generators; ++t) {
        for (std::size_t u = t + 1; ok && u < generators; ++u) {
            const auto angles = principal_angles(generator(t), generator(u));
            if (t == 0 && u == 1) report.generator_angles = angles;
            ok = angles.size() == static_cast<std::size_t>(packing.n);
            for (std::size_t j = 0; ok && j < angles.size(); ++j) {
                const double expect = j < zeros ? 0.0 : theta;
                ok = std::abs(angles[j] - expect) <= kDistanceTolerance;
            }
        }
    }
    report.generator_angles_ok = ok;
    return report;
}

}  // namespace grasspack
