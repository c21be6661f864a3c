#include "grasspack/geometry.hpp"

#include "grasspack/errors.hpp"
#include "grasspack/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace grasspack {

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Small-denominator rational within tolerance of x, if any.
std::optional<Rational> recognize_rational(double x, std::int64_t max_den = 1024) {
    for (std::int64_t den = 1; den <= max_den; ++den) {
        const double num = std::round(x * static_cast<double>(den));
        if (std::abs(num / static_cast<double>(den) - x) <= kDistanceTolerance) {
            return Rational(static_cast<std::int64_t>(num), den);
        }
    }
    return std::nullopt;
}

// trace(P Q) for symmetric exact projections as (integer, half_scale).
std::int64_t dyadic_trace_sym(const ExactMatrix& p, const ExactMatrix& q) {
    const auto& a = p.entries();
    const auto& b = q.entries();
    std::int64_t t = 0;
    for (std::size_t j = 0; j < a.size(); ++j) t += a[j] * b[j];
    return t;
}

void check_same_shape(const Plane& p, const Plane& q) {
    if (p.ambient_dim() != q.ambient_dim() || p.dim() != q.dim()) {
        throw UsageError("planes live in different Grassmannians");
    }
}

}  // namespace

Plane::Plane(std::variant<ExactMatrix, Eigen::MatrixXd> rep, int m, int n)
    : rep_(std::move(rep)), m_(m), n_(n) {}

Plane Plane::from_projection(ExactMatrix projection) {
    if (projection.rows() != projection.cols()) throw UsageError("projection must be square");
    if (!projection.is_symmetric()) throw DomainError("projection matrix is not symmetric");
    projection.normalize();
    const Rational tr = projection.trace();
    if (tr.denominator() != 1 || tr.numerator() < 0) throw DomainError("projection trace is not a dimension");
    const int m = projection.rows();
    const int n = static_cast<int>(tr.numerator());
    return Plane(std::move(projection), m, n);
}

Plane Plane::from_orthonormal_basis(Eigen::MatrixXd basis) {
    const auto n = basis.rows();
    const Eigen::MatrixXd gram = basis * basis.transpose();
    if ((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > kDistanceTolerance) {
        throw DomainError("basis rows are not orthonormal");
    }
    const int m = static_cast<int>(basis.cols());
    return Plane(std::move(basis), m, static_cast<int>(n));
}

Plane Plane::from_spanning_rows(const Eigen::MatrixXd& rows, int dim) {
    Eigen::MatrixXd basis = orthonormalize_rows(rows, dim);
    const int m = static_cast<int>(basis.cols());
    return Plane(std::move(basis), m, dim);
}

const ExactMatrix& Plane::exact_projection() const {
    if (!is_exact()) throw UsageError("plane has no exact representation");
    return std::get<ExactMatrix>(rep_);
}

Eigen::MatrixXd Plane::projection() const {
    if (is_exact()) return std::get<ExactMatrix>(rep_).to_eigen();
    const auto& a = std::get<Eigen::MatrixXd>(rep_);
    return a.transpose() * a;
}

Eigen::MatrixXd Plane::basis() const {
    if (is_exact()) return orthonormalize_rows(std::get<ExactMatrix>(rep_).to_eigen(), n_);
    return std::get<Eigen::MatrixXd>(rep_);
}

bool Packing::is_exact() const {
    return std::all_of(planes.begin(), planes.end(), [](const Plane& p) { return p.is_exact(); });
}

Eigen::MatrixXd orthonormalize_rows(const Eigen::MatrixXd& rows, int dim) {
    if (dim < 0 || dim > rows.rows()) throw UsageError("cannot extract more rows than given");
    Eigen::MatrixXd work = rows;
    Eigen::MatrixXd out(dim, rows.cols());
    std::vector<bool> used(static_cast<std::size_t>(rows.rows()), false);
    for (int k = 0; k < dim; ++k) {
        int best = -1;
        double best_norm = -1;
        for (int r = 0; r < work.rows(); ++r) {
            if (used[static_cast<std::size_t>(r)]) continue;
            const double nr = work.row(r).norm();
            if (nr > best_norm) {
                best_norm = nr;
                best = r;
            }
        }
        if (best < 0 || best_norm < kRankTolerance) {
            throw DomainError("spanning set is rank deficient (pivot " + format_double(best_norm) + ")");
        }
        used[static_cast<std::size_t>(best)] = true;
        out.row(k) = work.row(best) / best_norm;
        for (int r = 0; r < work.rows(); ++r) {
            if (!used[static_cast<std::size_t>(r)]) work.row(r) -= work.row(r).dot(out.row(k)) * out.row(k);
        }
    }
    return out;
}

Rational chordal_distance_sq_exact(const Plane& p, const Plane& q) {
    check_same_shape(p, q);
    return Rational(p.dim()) - p.exact_projection().trace_product(q.exact_projection());
}

double chordal_distance_sq(const Plane& p, const Plane& q) {
    check_same_shape(p, q);
    if (p.is_exact() && q.is_exact()) return to_double(chordal_distance_sq_exact(p, q));
    const Eigen::MatrixXd cross = p.basis() * q.basis().transpose();
    return static_cast<double>(p.dim()) - cross.squaredNorm();
}

std::vector<double> principal_angles(const Plane& p, const Plane& q) {
    check_same_shape(p, q);
    const Eigen::MatrixXd ap = p.basis();
    const Eigen::MatrixXd aq = q.basis();
    const Eigen::MatrixXd cross = ap * aq.transpose();
    // Cosines lose accuracy near 0 and sines near pi/2; take each angle from
    // whichever is better conditioned. Both lists index angles ascending.
    Eigen::JacobiSVD<Eigen::MatrixXd> cos_svd(cross);
    const Eigen::MatrixXd residual = ap - cross * aq;
    Eigen::JacobiSVD<Eigen::MatrixXd> sin_svd(residual);
    const auto n = static_cast<Eigen::Index>(p.dim());
    std::vector<double> sines(static_cast<std::size_t>(n), 0.0);
    for (Eigen::Index j = 0; j < sin_svd.singularValues().size() && j < n; ++j) {
        sines[static_cast<std::size_t>(j)] = sin_svd.singularValues()(j);
    }
    std::sort(sines.begin(), sines.end());
    std::vector<double> angles;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double c = std::clamp(cos_svd.singularValues()(j), 0.0, 1.0);
        const double s = std::clamp(sines[static_cast<std::size_t>(j)], 0.0, 1.0);
        angles.push_back(c > std::numbers::sqrt2 / 2 ? std::asin(s) : std::acos(c));
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

Rational orthoplex_bound(int m, int n) {
    if (m < 1 || n < 0 || n > m) throw UsageError("bound needs 0 <= n <= m");
    return Rational(std::int64_t{n} * (m - n), m);
}

Rational simplex_bound(int m, int n, std::int64_t count) {
    if (count < 2) throw UsageError("simplex bound needs N >= 2");
    return orthoplex_bound(m, n) * Rational(count, count - 1);
}

Bounds packing_bounds(int m, int n, std::int64_t count) {
    Bounds b;
    b.simplex = simplex_bound(m, n, count);
    b.orthoplex = orthoplex_bound(m, n);
    b.D = std::int64_t{m - 1} * (m + 2) / 2;
    b.simplex_equality_possible = count <= b.D + 1;
    b.orthoplex_applies = count > b.D + 1;
    b.orthoplex_equality_possible = count <= 2 * b.D;
    return b;
}

std::string to_string(PackingStatus s) {
    switch (s) {
        case PackingStatus::MeetsSimplex: return "MEETS-SIMPLEX";
        case PackingStatus::MeetsOrthoplex: return "MEETS-ORTHOPLEX";
        case PackingStatus::BelowBounds: return "BELOW-BOUNDS";
    }
    return "?";
}

std::string to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::Exact: return "exact";
        case VerifyMode::Float: return "float";
        case VerifyMode::Sampled: return "sampled";
    }
    return "?";
}

VerifyMode parse_verify_mode(const std::string& text) {
    if (text == "exact") return VerifyMode::Exact;
    if (text == "float") return VerifyMode::Float;
    if (text == "sampled") return VerifyMode::Sampled;
    throw UsageError("unknown verification mode '" + text + "'");
}

std::string PackingReport::d2_string() const {
    if (d2_min_exact) return to_string(*d2_min_exact);
    return format_double(d2_min);
}

std::string PackingReport::summary_line() const {
    std::string line = "N=" + std::to_string(N) + " d2=" + d2_string();
    if (!d2_min_exact) {
        if (auto r = recognize_rational(d2_min)) line += " (~" + to_string(*r) + ")";
    }
    switch (status) {
        case PackingStatus::MeetsSimplex: line += " simplex=" + to_string(bounds.simplex); break;
        case PackingStatus::MeetsOrthoplex: line += " orthoplex=" + to_string(bounds.orthoplex); break;
        case PackingStatus::BelowBounds:
            line += " simplex=" + to_string(bounds.simplex);
            if (bounds.orthoplex_applies) line += " orthoplex=" + to_string(bounds.orthoplex);
            break;
    }
    line += " " + to_string(status);
    if (degenerate) line += " DEGENERATE";
    if (claim_violated) line += " CLAIM-VIOLATED";
    return line;
}

void finalize_report(PackingReport& r) {
    r.bounds = packing_bounds(r.m, r.n, static_cast<std::int64_t>(r.N));
    const auto equals = [&](const Rational& bound) {
        if (r.d2_min_exact) return *r.d2_min_exact == bound;
        return std::abs(r.d2_min - to_double(bound)) <= kDistanceTolerance;
    };
    const auto above = [&](const Rational& bound) {
        if (r.d2_min_exact) return *r.d2_min_exact > bound;
        return r.d2_min > to_double(bound) + kDistanceTolerance;
    };
    if (equals(r.bounds.simplex)) {
        r.status = PackingStatus::MeetsSimplex;
    } else if (r.bounds.orthoplex_applies && equals(r.bounds.orthoplex)) {
        r.status = PackingStatus::MeetsOrthoplex;
    } else {
        r.status = PackingStatus::BelowBounds;
    }
    r.bound_violated = above(r.bounds.simplex) || (r.bounds.orthoplex_applies && above(r.bounds.orthoplex));
    r.degenerate = r.d2_min_exact ? *r.d2_min_exact == Rational(0) : r.d2_min <= kDistanceTolerance;
    if (r.claimed_d2) {
        r.claim_violated = r.d2_min_exact ? *r.d2_min_exact < *r.claimed_d2
                                          : r.d2_min < to_double(*r.claimed_d2) - kDistanceTolerance;
    }
}

PackingReport verify_packing(const Packing& packing, const VerifyOptions& options) {
    const auto count = static_cast<std::uint64_t>(packing.planes.size());
    if (count < 2) throw UsageError("verification needs at least two planes");
    for (const auto& p : packing.planes) {
        if (p.ambient_dim() != packing.m || p.dim() != packing.n) {
            throw UsageError("plane dimensions do not match the packing header");
        }
    }
    const bool all_exact = packing.is_exact();
    if (options.mode == VerifyMode::Exact && !all_exact) {
        throw UsageError("exact verification of a packing with float planes");
    }

    PackingReport report;
    report.m = packing.m;
    report.n = packing.n;
    report.N = count;
    report.mode = options.mode;
    report.claimed_d2 = packing.claimed_d2;

    std::vector<IndexPair> pairs;
    if (options.mode == VerifyMode::Sampled) {
        report.seed = options.seed;
        pairs = sample_pairs(count, options.samples, options.seed);
    }

    if (all_exact && options.mode != VerifyMode::Float) {
        std::vector<const ExactMatrix*> proj;
        proj.reserve(count);
        for (const auto& p : packing.planes) proj.push_back(&p.exact_projection());
        const Rational n(packing.n);
        const ExactPairFn d2 = [&](std::uint64_t a, std::uint64_t b) {
            const ExactMatrix& pa = *proj[a];
            const ExactMatrix& pb = *proj[b];
            return n - dyadic_value(dyadic_trace_sym(pa, pb), pa.half_scale() + pb.half_scale());
        };
        const auto stats = options.parallel ? exact_pairs_parallel(count, pairs, d2, options.jobs)
                                            : exact_pairs_serial(count, pairs, d2);
        report.exact = options.mode == VerifyMode::Exact;
        report.d2_min_exact = stats.min;
        report.d2_min = to_double(stats.min);
        report.worst_pair = stats.argmin;
        report.pairs_checked = stats.pairs;
        for (const auto& [v, c] : stats.spectrum) report.spectrum.push_back({to_string(v), to_double(v), c});
    } else {
        std::vector<Eigen::MatrixXd> proj;
        proj.reserve(count);
        for (const auto& p : packing.planes) proj.push_back(p.projection());
        const double n = packing.n;
        const FloatPairFn d2 = [&](std::uint64_t a, std::uint64_t b) {
            return n - proj[a].cwiseProduct(proj[b]).sum();
        };
        const auto stats = options.parallel ? float_pairs_parallel(count, pairs, d2, options.jobs)
                                            : float_pairs_serial(count, pairs, d2);
        report.exact = false;
        report.d2_min = stats.min;
        report.worst_pair = stats.argmin;
        report.pairs_checked = stats.pairs;
        for (const auto& [key, c] : stats.spectrum) {
            (void)key;
            report.spectrum.push_back({format_double(c.value), c.value, c.count});
        }
    }
    finalize_report(report);
    return report;
}

}  // namespace grasspack
