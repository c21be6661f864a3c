#include "grasspack/construct.hpp"

#include "grasspack/errors.hpp"
#include "grasspack/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numbers>
#include <unordered_set>

namespace grasspack {

namespace {

Rational pow2r(int e) {
    if (e >= 0) return Rational(std::int64_t{1} << e);
    return Rational(1, std::int64_t{1} << -e);
}

void check_planes_compatible(const GroupPlane& p, const GroupPlane& q, const OrthogonalSpace& space) {
    if (p.subspace.length() != space.length() || q.subspace.length() != space.length() ||
        p.subspace.dim() != q.subspace.dim()) {
        throw UsageError("group planes with different parameters");
    }
}

}  // namespace

std::vector<GroupPlane> planes_of(const F2Subspace& s) {
    std::vector<GroupPlane> out;
    const std::uint64_t count = std::uint64_t{1} << s.dim();
    out.reserve(count);
    for (std::uint64_t signs = 0; signs < count; ++signs) out.push_back({s, signs});
    return out;
}

GroupPacking theorem1(int i, int k) {
    if (i < 1 || k < 0 || k > i - 1) {
        throw UsageError("theorem1 needs 0 <= k <= i-1 (got i=" + std::to_string(i) + ", k=" +
                         std::to_string(k) + ")");
    }
    const OrthogonalSpace space(i);
    GroupPacking packing;
    packing.i = i;
    packing.k = k;
    packing.provenance = "theorem1 i=" + std::to_string(i) + " k=" + std::to_string(k);
    packing.claimed_d2 = theorem1_distance(k);
    for (const auto& s : enumerate_totally_singular(space, i - k)) {
        auto planes = planes_of(s);
        packing.planes.insert(packing.planes.end(), planes.begin(), planes.end());
    }
    return packing;
}

std::uint64_t theorem1_count(int i, int k) {
    if (i < 1 || k < 0 || k > i - 1) throw UsageError("theorem1 needs 0 <= k <= i-1");
    return (std::uint64_t{1} << (i - k)) * count_totally_singular(i, k);
}

Rational theorem1_distance(int k) { return k == 0 ? Rational(1, 2) : pow2r(k - 1); }

Rational pair_distance(const OrthogonalSpace& space, const GroupPlane& p, const GroupPlane& q) {
    check_planes_compatible(p, q, space);
    const int k = space.i() - p.subspace.dim();
    const F2Subspace common = subspace_intersection(p.subspace, q.subspace);
    const auto chi_p = p.character(space);
    const auto chi_q = q.character(space);
    for (Word w : common.basis()) {
        if (chi_p.sign(w) != chi_q.sign(w)) return pow2r(k);
    }
    return pow2r(k) - pow2r(2 * k - space.i() + common.dim());
}

Rational pair_distance_by_trace(const OrthogonalSpace& space, const GroupPlane& p, const GroupPlane& q) {
    check_planes_compatible(p, q, space);
    const int k = space.i() - p.subspace.dim();
    const ExactMatrix pp = character_projection(space, p.character(space));
    const ExactMatrix pq = character_projection(space, q.character(space));
    return pow2r(k) - pp.trace_product(pq);
}

std::vector<double> AngleSpectrum::angles() const {
    std::vector<double> out;
    if (compatible) {
        const double angle = std::acos(std::pow(2.0, -0.25 * r));
        out.assign(static_cast<std::size_t>(n1), angle);
    }
    out.resize(static_cast<std::size_t>(n), std::numbers::pi / 2);
    std::sort(out.begin(), out.end());
    return out;
}

Rational AngleSpectrum::distance_sq() const {
    if (!compatible) return Rational(n);
    // (n - n1) right angles plus n1 angles with cos^2 = 2^(-r/2)
    return Rational(n) - Rational(n1) * pow2r(-r / 2);
}

AngleSpectrum principal_angle_spectrum(const OrthogonalSpace& space, const GroupPlane& p,
                                       const GroupPlane& q) {
    check_planes_compatible(p, q, space);
    const int i = space.i();
    const int k = i - p.subspace.dim();
    AngleSpectrum spec;
    spec.n = 1 << k;
    const F2Subspace common = subspace_intersection(p.subspace, q.subspace);
    spec.t = common.dim();
    spec.r = space.bilinear_rank(p.subspace.sum(q.subspace));
    const auto chi_p = p.character(space);
    const auto chi_q = q.character(space);
    spec.compatible = std::all_of(common.basis().begin(), common.basis().end(),
                                  [&](Word w) { return chi_p.sign(w) == chi_q.sign(w); });
    const int exponent = 2 * k - i + spec.r / 2 + spec.t;
    if (exponent < 0) throw DomainError("angle multiplicity is not an integer");
    spec.n1 = spec.compatible ? (std::int64_t{1} << exponent) : 0;
    if (spec.n1 > spec.n) throw DomainError("angle multiplicity exceeds the plane dimension");
    return spec;
}

Theorem2Result theorem2(int i, const std::vector<F2Subspace>& subspaces, int ell) {
    const OrthogonalSpace space(i);
    if (subspaces.empty()) throw UsageError("theorem2 needs at least one subspace");
    if (ell < 0) throw UsageError("theorem2 needs l >= 0");
    const int d = subspaces.front().dim();
    if (d < 1) throw DomainError("theorem2 needs subspaces of dimension >= 1");
    for (const auto& s : subspaces) {
        if (s.length() != space.length()) throw UsageError("subspace length does not match 2i");
        if (s.dim() != d) throw DomainError("theorem2 subspaces must share one dimension");
        if (!space.is_totally_singular(s)) throw DomainError("subspace " + s.str() + " is not totally singular");
    }
    Theorem2Result result;
    for (std::size_t a = 0; a < subspaces.size(); ++a) {
        for (std::size_t b = a + 1; b < subspaces.size(); ++b) {
            const int t = subspace_intersection(subspaces[a], subspaces[b]).dim();
            if (t > ell) {
                throw DomainError("subspaces #" + std::to_string(a) + " " + subspaces[a].str() + " and #" +
                                  std::to_string(b) + " " + subspaces[b].str() + " meet in dimension " +
                                  std::to_string(t) + " > l=" + std::to_string(ell));
            }
            result.max_intersection = std::max(result.max_intersection, t);
        }
    }
    const int k = i - d;
    result.bound = pow2r(k) - pow2r(2 * k + ell - i);
    result.equality = result.max_intersection == ell;
    auto& packing = result.packing;
    packing.i = i;
    packing.k = k;
    packing.provenance = "theorem2 i=" + std::to_string(i) + " k=" + std::to_string(k) + " l=" +
                         std::to_string(ell) + " M=" + std::to_string(subspaces.size());
    packing.claimed_d2 = result.bound;
    for (const auto& s : subspaces) {
        auto planes = planes_of(s);
        packing.planes.insert(packing.planes.end(), planes.begin(), planes.end());
    }
    return result;
}

Packing to_packing(const GroupPacking& gp) {
    const OrthogonalSpace space(gp.i);
    Packing packing;
    packing.m = gp.m();
    packing.n = gp.n();
    packing.provenance = gp.provenance;
    packing.claimed_d2 = gp.claimed_d2;
    packing.planes.reserve(gp.planes.size());
    for (const auto& p : gp.planes) {
        packing.planes.push_back(Plane::from_projection(character_projection(space, p.character(space))));
    }
    return packing;
}

namespace {

PackingReport report_from_exact(int m, int n, std::uint64_t count, const ExactPairStats& stats,
                                VerifyMode mode, std::optional<Rational> claimed) {
    PackingReport report;
    report.m = m;
    report.n = n;
    report.N = count;
    report.mode = mode;
    report.exact = mode == VerifyMode::Exact;
    report.d2_min_exact = stats.min;
    report.d2_min = to_double(stats.min);
    report.worst_pair = stats.argmin;
    report.pairs_checked = stats.pairs;
    report.claimed_d2 = claimed;
    for (const auto& [v, c] : stats.spectrum) report.spectrum.push_back({to_string(v), to_double(v), c});
    finalize_report(report);
    return report;
}

// Scales a distance distribution seen from one plane to the whole orbit.
ExactPairStats orbit_stats(std::uint64_t count, const ExactPairStats& from_first) {
    ExactPairStats s = from_first;
    for (auto& [v, c] : s.spectrum) c = c * count / 2;
    return s;
}

}  // namespace

PackingReport verify_group_packing(const GroupPacking& gp, const VerifyOptions& options) {
    const auto count = static_cast<std::uint64_t>(gp.planes.size());
    if (count < 2) throw UsageError("verification needs at least two planes");
    if (options.mode == VerifyMode::Float) throw UsageError("group packings verify in exact or sampled mode");
    const OrthogonalSpace space(gp.i);
    std::vector<IndexPair> pairs;
    if (options.mode == VerifyMode::Sampled) pairs = sample_pairs(count, options.samples, options.seed);
    const ExactPairFn d2 = [&](std::uint64_t a, std::uint64_t b) {
        return pair_distance(space, gp.planes[a], gp.planes[b]);
    };
    const auto stats = options.parallel ? exact_pairs_parallel(count, pairs, d2, options.jobs)
                                        : exact_pairs_serial(count, pairs, d2);
    auto report = report_from_exact(gp.m(), gp.n(), count, stats, options.mode, gp.claimed_d2);
    report.seed = options.mode == VerifyMode::Sampled ? options.seed : 0;
    return report;
}

PackingReport verify_orbit_group_packing(const GroupPacking& gp, bool parallel, int jobs) {
    const auto count = static_cast<std::uint64_t>(gp.planes.size());
    if (count < 2) throw UsageError("verification needs at least two planes");
    const OrthogonalSpace space(gp.i);
    std::vector<IndexPair> pairs;
    for (std::uint64_t b = 1; b < count; ++b) pairs.emplace_back(0, b);
    const ExactPairFn d2 = [&](std::uint64_t a, std::uint64_t b) {
        return pair_distance(space, gp.planes[a], gp.planes[b]);
    };
    const auto stats = parallel ? exact_pairs_parallel(count, pairs, d2, jobs) : exact_pairs_serial(count, pairs, d2);
    return report_from_exact(gp.m(), gp.n(), count, orbit_stats(count, stats), VerifyMode::Exact, gp.claimed_d2);
}

PackingReport verify_orbit_packing(const Packing& packing, bool parallel, int jobs) {
    const auto count = static_cast<std::uint64_t>(packing.planes.size());
    if (count < 2) throw UsageError("verification needs at least two planes");
    if (!packing.is_exact()) throw UsageError("orbit verification needs exact planes");
    std::vector<IndexPair> pairs;
    for (std::uint64_t b = 1; b < count; ++b) pairs.emplace_back(0, b);
    const ExactPairFn d2 = [&](std::uint64_t a, std::uint64_t b) {
        return chordal_distance_sq_exact(packing.planes[a], packing.planes[b]);
    };
    const auto stats = parallel ? exact_pairs_parallel(count, pairs, d2, jobs) : exact_pairs_serial(count, pairs, d2);
    return report_from_exact(packing.m, packing.n, count, orbit_stats(count, stats), VerifyMode::Exact,
                             packing.claimed_d2);
}

Conjugator::Conjugator(const ExactMatrix& generator) : kind_(Kind::Dense), generator_(generator) {
    const int m = generator.rows();
    if (m != generator.cols()) throw UsageError("conjugator needs a square matrix");
    if (generator.half_scale() == 0) {
        image_.assign(static_cast<std::size_t>(m), -1);
        sign_.assign(static_cast<std::size_t>(m), 0);
        bool signed_perm = true;
        for (int c = 0; c < m && signed_perm; ++c) {
            for (int r = 0; r < m; ++r) {
                const auto x = generator.at(r, c);
                if (x == 0) continue;
                if ((x != 1 && x != -1) || image_[static_cast<std::size_t>(c)] >= 0) {
                    signed_perm = false;
                    break;
                }
                image_[static_cast<std::size_t>(c)] = r;
                sign_[static_cast<std::size_t>(c)] = static_cast<int>(x);
            }
            if (image_[static_cast<std::size_t>(c)] < 0) signed_perm = false;
        }
        if (signed_perm) kind_ = Kind::SignedPermutation;
    }
    if (kind_ == Kind::Dense && (m & (m - 1)) == 0) {
        log2m_ = std::countr_zero(static_cast<unsigned>(m));
        if (generator == hadamard_transform(log2m_)) {
            kind_ = Kind::Hadamard;
            hadamard_bits_ = m - 1;
        } else if (log2m_ >= 1 && generator == hadamard_first_bit(log2m_)) {
            kind_ = Kind::Hadamard;
            hadamard_bits_ = m / 2;
        }
    }
}

namespace {

// In-place unnormalized Walsh-Hadamard transform of a strided sequence over
// the index bits in `bits`.
void walsh_hadamard(std::int64_t* data, int m, int stride, int bits) {
    for (int len = 1; len < m; len <<= 1) {
        if (!(bits & len)) continue;
        for (int start = 0; start < m; start += 2 * len) {
            for (int j = start; j < start + len; ++j) {
                std::int64_t& x = data[static_cast<std::size_t>(j) * stride];
                std::int64_t& y = data[static_cast<std::size_t>(j + len) * stride];
                const std::int64_t u = x, v = y;
                x = u + v;
                y = u - v;
            }
        }
    }
}

}  // namespace

ExactMatrix Conjugator::apply(const ExactMatrix& p) const {
    const int m = p.rows();
    switch (kind_) {
        case Kind::SignedPermutation: {
            // (G P G^t)[img r][img c] = s_r s_c P[r][c]
            ExactMatrix out(m, m, p.half_scale());
            for (int r = 0; r < m; ++r) {
                const auto ir = image_[static_cast<std::size_t>(r)];
                const auto sr = sign_[static_cast<std::size_t>(r)];
                for (int c = 0; c < m; ++c) {
                    out.at(ir, image_[static_cast<std::size_t>(c)]) =
                        sr * sign_[static_cast<std::size_t>(c)] * p.at(r, c);
                }
            }
            return out.normalize();
        }
        case Kind::Hadamard: {
            std::vector<std::int64_t> e = p.entries();
            for (int c = 0; c < m; ++c) walsh_hadamard(e.data() + c, m, m, hadamard_bits_);
            for (int r = 0; r < m; ++r) walsh_hadamard(e.data() + static_cast<std::size_t>(r) * m, m, 1, hadamard_bits_);
            ExactMatrix out(m, m, p.half_scale() + 2 * std::popcount(static_cast<unsigned>(hadamard_bits_)),
                            std::move(e));
            return out.normalize();
        }
        case Kind::Dense:
            break;
    }
    return p.conjugate_by(generator_);
}

Packing orbit_packing(int i, int n, const OrbitOptions& options) {
    const OrthogonalSpace space(i);
    const int m = 1 << i;
    if (n < 1 || n >= m) throw UsageError("orbit_packing needs 1 <= n < 2^i");
    std::vector<Conjugator> gens;
    for (const auto& g : clifford_generators(i)) gens.emplace_back(g);

    ExactMatrix start(m, m);
    for (int c = 0; c < n; ++c) start.at(c, c) = 1;

    std::vector<ExactMatrix> found;
    const auto hash = [&found](std::size_t idx) { return ExactMatrixHash{}(found[idx]); };
    const auto eq = [&found](std::size_t a, std::size_t b) { return found[a] == found[b]; };
    std::unordered_set<std::size_t, decltype(hash), decltype(eq)> seen(1024, hash, eq);

    found.push_back(start);
    seen.insert(0);
    Packing packing;
    packing.m = m;
    packing.n = n;
    packing.provenance = "orbit i=" + std::to_string(i) + " n=" + std::to_string(n);
    const auto finish = [&] {
        packing.planes.reserve(found.size());
        for (auto& f : found) packing.planes.push_back(Plane::from_projection(std::move(f)));
        found.clear();
    };
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (const auto& g : gens) {
            found.push_back(g.apply(found[head]));
            if (!seen.insert(found.size() - 1).second) {
                found.pop_back();
                continue;
            }
            if (found.size() > options.max_planes) {
                seen.clear();
                finish();
                throw PartialResultError("orbit exceeded " + std::to_string(options.max_planes) + " planes",
                                         std::move(packing));
            }
        }
    }
    seen.clear();
    finish();
    return packing;
}

}  // namespace grasspack
