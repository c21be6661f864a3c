#include "grasspack/exact_matrix.hpp"

#include "grasspack/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace grasspack {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(text));
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw UsageError("malformed rational '" + text + "'");
    }
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exact matrix entry overflow");
    return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exact matrix entry overflow");
    return r;
}

std::int64_t pow2(int e) {
    if (e < 0 || e > 62) throw OverflowError("power of two out of range");
    return std::int64_t{1} << e;
}

// Brings two matrices to a common half_scale so they can be added; the scales
// must share parity.
std::pair<std::int64_t, std::int64_t> align_factors(int e1, int e2) {
    if ((e1 - e2) % 2 != 0) throw DomainError("adding matrices with incompatible half scales");
    const int e = std::max(e1, e2);
    return {pow2((e - e1) / 2), pow2((e - e2) / 2)};
}

}  // namespace

Rational dyadic_value(std::int64_t value, int half_scale) {
    if (value == 0) return Rational(0);
    if (half_scale % 2 != 0) throw DomainError("irrational value (odd half scale)");
    if (half_scale >= 0) return Rational(value, pow2(half_scale / 2));
    return Rational(mul(value, pow2(-half_scale / 2)));
}

ExactMatrix::ExactMatrix(int rows, int cols, int half_scale)
    : rows_(rows), cols_(cols), half_scale_(half_scale),
      entries_(static_cast<std::size_t>(rows) * cols, 0) {}

ExactMatrix::ExactMatrix(int rows, int cols, int half_scale, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), half_scale_(half_scale), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw UsageError("exact matrix entry count does not match shape");
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int r = 0; r < n; ++r) m.at(r, r) = 1;
    return m;
}

ExactMatrix& ExactMatrix::normalize() {
    if (is_zero()) {
        half_scale_ = 0;
        return *this;
    }
    while (half_scale_ >= 2 &&
           std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x % 2 == 0; })) {
        for (auto& x : entries_) x /= 2;
        half_scale_ -= 2;
    }
    return *this;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, half_scale_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_) throw UsageError("exact matrix product shape mismatch");
    ExactMatrix p(rows_, other.cols_, half_scale_ + other.half_scale_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const std::int64_t a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < other.cols_; ++c) {
                const std::int64_t b = other.at(k, c);
                if (b != 0) p.at(r, c) = add(p.at(r, c), mul(a, b));
            }
        }
    }
    return p.normalize();
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw UsageError("exact matrix sum shape mismatch");
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    const auto [f1, f2] = align_factors(half_scale_, other.half_scale_);
    ExactMatrix s(rows_, cols_, std::max(half_scale_, other.half_scale_));
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        s.entries_[j] = add(mul(entries_[j], f1), mul(other.entries_[j], f2));
    }
    return s.normalize();
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix n = *this;
    for (auto& x : n.entries_) x = -x;
    return n;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const { return *this + (-other); }

ExactMatrix ExactMatrix::conjugate_by(const ExactMatrix& m) const { return m * (*this) * m.transpose(); }

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x == 0; });
}

bool ExactMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

bool ExactMatrix::is_orthogonal() const {
    if (rows_ != cols_) return false;
    return (*this) * transpose() == identity(rows_);
}

Rational ExactMatrix::trace() const {
    if (rows_ != cols_) throw UsageError("trace of a non-square matrix");
    std::int64_t t = 0;
    for (int r = 0; r < rows_; ++r) t = add(t, at(r, r));
    return dyadic_value(t, half_scale_);
}

Rational ExactMatrix::trace_product(const ExactMatrix& other) const {
    if (cols_ != other.rows_ || rows_ != other.cols_) throw UsageError("trace product shape mismatch");
    std::int64_t t = 0;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t = add(t, mul(at(r, c), other.at(c, r)));
    return dyadic_value(t, half_scale_ + other.half_scale_);
}

Eigen::MatrixXd ExactMatrix::to_eigen() const {
    const double scale = std::pow(2.0, -0.5 * half_scale_);
    Eigen::MatrixXd m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(r, c) = scale * static_cast<double>(at(r, c));
    return m;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "2^(-" << half_scale_ << "/2) *\n";
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
        os << "\n";
    }
    return os.str();
}

std::size_t ExactMatrixHash::operator()(const ExactMatrix& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.half_scale()) * 0x9E3779B97F4A7C15ull + m.rows();
    for (std::int64_t x : m.entries()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001B3ull;
    return h;
}

}  // namespace grasspack
