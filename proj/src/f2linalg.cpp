#include "grasspack/f2linalg.hpp"

#include "grasspack/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

namespace grasspack {

namespace {

Word length_mask(int length) {
    return length >= 32 ? ~Word{0} : ((Word{1} << length) - 1u);
}

void check_length(int length) {
    if (length < 0 || length > kMaxBits) {
        throw UsageError("bit length " + std::to_string(length) + " outside [0, " +
                         std::to_string(kMaxBits) + "]");
    }
}

int pivot_of(Word row) { return std::bit_width(row) - 1; }

// In-place reduced row echelon form; returns the number of nonzero rows,
// which are left at the front sorted by decreasing pivot.
std::vector<Word> rref(std::vector<Word> rows) {
    std::vector<Word> basis;
    for (Word r : rows) {
        for (Word b : basis) {
            if (r & (Word{1} << pivot_of(b))) r ^= b;
        }
        if (r == 0) continue;
        const Word pbit = Word{1} << pivot_of(r);
        for (Word& b : basis) {
            if (b & pbit) b ^= r;
        }
        basis.push_back(r);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return basis;
}

}  // namespace

int parity(Word w) { return std::popcount(w) & 1; }

F2Vector::F2Vector(Word bits, int length) : bits_(bits), length_(length) {
    check_length(length);
    if ((bits & ~length_mask(length)) != 0) {
        throw UsageError("vector bits exceed declared length");
    }
}

F2Vector F2Vector::parse(const std::string& text) {
    Word bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw UsageError("invalid F2 vector literal '" + text + "'");
        bits = (bits << 1) | Word(c == '1');
    }
    return F2Vector(bits, static_cast<int>(text.size()));
}

std::string F2Vector::str() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int p = 0; p < length_; ++p) {
        if (bit(p)) s[static_cast<std::size_t>(p)] = '1';
    }
    return s;
}

F2Vector F2Vector::operator+(const F2Vector& other) const {
    if (length_ != other.length_) throw UsageError("adding vectors of different lengths");
    return F2Vector(bits_ ^ other.bits_, length_);
}

F2Subspace F2Subspace::canonicalize(std::span<const F2Vector> rows) {
    if (rows.empty()) return F2Subspace(0);
    const int length = rows.front().length();
    std::vector<Word> words;
    words.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.length() != length) throw UsageError("canonicalize: mixed row lengths");
        words.push_back(r.bits());
    }
    return canonicalize(length, words);
}

F2Subspace F2Subspace::canonicalize(int length, std::span<const Word> rows) {
    check_length(length);
    F2Subspace s(length);
    for (Word r : rows) {
        if ((r & ~length_mask(length)) != 0) throw UsageError("canonicalize: row exceeds length");
    }
    s.basis_ = rref(std::vector<Word>(rows.begin(), rows.end()));
    return s;
}

Word F2Subspace::reduce(Word v) const {
    for (Word b : basis_) {
        if (v & (Word{1} << pivot_of(b))) v ^= b;
    }
    return v;
}

bool F2Subspace::contains(Word v) const { return reduce(v) == 0; }

std::uint64_t F2Subspace::coordinates(Word v) const {
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (v & (Word{1} << pivot_of(basis_[j]))) c |= std::uint64_t{1} << j;
    }
    return c;
}

Word F2Subspace::element(std::uint64_t coords) const {
    Word v = 0;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        if ((coords >> j) & 1u) v ^= basis_[j];
    }
    return v;
}

std::vector<Word> F2Subspace::elements() const {
    const std::uint64_t count = std::uint64_t{1} << basis_.size();
    std::vector<Word> out;
    out.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c) out.push_back(element(c));
    return out;
}

F2Subspace F2Subspace::sum(const F2Subspace& other) const {
    if (length_ != other.length_) throw UsageError("sum of subspaces with different lengths");
    std::vector<Word> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return canonicalize(length_, rows);
}

std::string F2Subspace::str() const {
    std::string s = "{";
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (j) s += ",";
        s += F2Vector(basis_[j], length_).str();
    }
    return s + "}";
}

std::size_t F2SubspaceHash::operator()(const F2Subspace& s) const noexcept {
    std::size_t h = std::hash<int>{}(s.length());
    for (Word w : s.basis()) h = h * 0x9E3779B97F4A7C15ull + w;
    return h;
}

F2Subspace subspace_intersection(const F2Subspace& s1, const F2Subspace& s2) {
    if (s1.length() != s2.length()) throw UsageError("intersection of subspaces with different lengths");
    // Zassenhaus: reduce [s1 | s1] and [s2 | 0]; rows whose left half vanishes
    // carry a basis of the intersection in their right half.
    const int len = s1.length();
    std::vector<std::uint64_t> rows;
    for (Word w : s1.basis()) rows.push_back((std::uint64_t{w} << len) | w);
    for (Word w : s2.basis()) rows.push_back(std::uint64_t{w} << len);
    std::vector<std::uint64_t> basis;
    for (std::uint64_t r : rows) {
        for (std::uint64_t b : basis) {
            if (r & (std::uint64_t{1} << (std::bit_width(b) - 1))) r ^= b;
        }
        if (r == 0) continue;
        const std::uint64_t pbit = std::uint64_t{1} << (std::bit_width(r) - 1);
        for (auto& b : basis) {
            if (b & pbit) b ^= r;
        }
        basis.push_back(r);
    }
    const std::uint64_t low = (std::uint64_t{1} << len) - 1;
    std::vector<Word> inter;
    for (std::uint64_t b : basis) {
        if ((b >> len) == 0) inter.push_back(static_cast<Word>(b & low));
    }
    return F2Subspace::canonicalize(len, inter);
}

OrthogonalSpace::OrthogonalSpace(int i) : i_(i) {
    if (i < 1 || 2 * i > kMaxBits) {
        throw UsageError("orthogonal space parameter i=" + std::to_string(i) + " outside [1, " +
                         std::to_string(kMaxBits / 2) + "]");
    }
    low_mask_ = length_mask(i);
}

int OrthogonalSpace::quadratic_form(Word v) const { return parity(x_part(v) & y_part(v)); }

int OrthogonalSpace::bilinear_form(Word v, Word w) const {
    return parity(x_part(v) & y_part(w)) ^ parity(x_part(w) & y_part(v));
}

bool OrthogonalSpace::is_totally_singular(const F2Subspace& s) const {
    if (s.length() != length()) throw UsageError("subspace length does not match 2i");
    const auto& rows = s.basis();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (quadratic_form(rows[j])) return false;
        for (std::size_t l = j + 1; l < rows.size(); ++l) {
            if (bilinear_form(rows[j], rows[l])) return false;
        }
    }
    return true;
}

std::vector<Word> OrthogonalSpace::singular_points() const {
    std::vector<Word> pts;
    const Word total = Word{1} << length();
    for (Word v = 1; v < total; ++v) {
        if (!quadratic_form(v)) pts.push_back(v);
    }
    return pts;
}

F2Subspace OrthogonalSpace::x_subspace() const {
    std::vector<Word> rows;
    for (int j = 0; j < i_; ++j) rows.push_back(join(Word{1} << j, 0));
    return F2Subspace::canonicalize(length(), rows);
}

F2Subspace OrthogonalSpace::y_subspace() const {
    std::vector<Word> rows;
    for (int j = 0; j < i_; ++j) rows.push_back(join(0, Word{1} << j));
    return F2Subspace::canonicalize(length(), rows);
}

int OrthogonalSpace::bilinear_rank(const F2Subspace& s) const {
    // Gram matrix of B on the basis, then its rank over F2.
    const auto& rows = s.basis();
    std::vector<Word> gram;
    for (Word r : rows) {
        Word g = 0;
        for (Word c : rows) g = (g << 1) | Word(bilinear_form(r, c));
        gram.push_back(g);
    }
    return F2Subspace::canonicalize(static_cast<int>(rows.size()), gram).dim();
}

int quadratic_form(const F2Vector& v) {
    if (v.length() % 2 != 0 || v.length() == 0) throw UsageError("quadratic form needs even length 2i");
    return OrthogonalSpace(v.length() / 2).quadratic_form(v.bits());
}

int bilinear_form(const F2Vector& v, const F2Vector& w) {
    if (v.length() != w.length() || v.length() % 2 != 0 || v.length() == 0) {
        throw UsageError("bilinear form needs two vectors of equal even length");
    }
    return OrthogonalSpace(v.length() / 2).bilinear_form(v.bits(), w.bits());
}

std::vector<F2Subspace> enumerate_totally_singular(const OrthogonalSpace& space, int d) {
    if (d < 0 || d > space.i()) {
        throw UsageError("totally singular dimension d=" + std::to_string(d) + " outside [0, i]");
    }
    const auto points = space.singular_points();
    std::vector<F2Subspace> level{F2Subspace(space.length())};
    for (int dim = 0; dim < d; ++dim) {
        std::unordered_set<F2Subspace, F2SubspaceHash> next;
        for (const auto& s : level) {
            for (Word v : points) {
                // One representative per coset: v must already be reduced.
                if (s.reduce(v) != v) continue;
                bool perp = true;
                for (Word r : s.basis()) {
                    if (space.bilinear_form(r, v)) {
                        perp = false;
                        break;
                    }
                }
                if (!perp) continue;
                std::vector<Word> rows = s.basis();
                rows.push_back(v);
                next.insert(F2Subspace::canonicalize(space.length(), rows));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::sort(level.begin(), level.end());
    return level;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count exceeds 64 bits");
    return r;
}

}  // namespace

std::uint64_t gaussian_binomial(int i, int k) {
    if (k < 0 || k > i) throw UsageError("gaussian binomial needs 0 <= k <= i");
    if (i >= 63) throw OverflowError("gaussian binomial too large");
    // Multiply and divide alternately; every partial quotient is itself a
    // Gaussian binomial [i-k+j, j], so divisions are exact.
    std::uint64_t value = 1;
    for (int j = 1; j <= k; ++j) {
        value = checked_mul(value, (std::uint64_t{1} << (i - k + j)) - 1);
        value /= (std::uint64_t{1} << j) - 1;
    }
    return value;
}

std::uint64_t count_totally_singular(int i, int k) {
    if (i < 0 || k < 0 || k > i) {
        throw UsageError("count_totally_singular needs 0 <= k <= i (got i=" + std::to_string(i) +
                         ", k=" + std::to_string(k) + ")");
    }
    std::uint64_t count = gaussian_binomial(i, k);
    for (int j = k; j < i; ++j) count = checked_mul(count, (std::uint64_t{1} << j) + 1);
    return count;
}

}  // namespace grasspack
