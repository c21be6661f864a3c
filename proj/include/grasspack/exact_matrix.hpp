#pragma once

#include "grasspack/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace grasspack {

// Integer matrix scaled by 2^(-half_scale/2).
//
// Normal form: while half_scale >= 2 and every entry is even, halve the
// entries and subtract 2 from half_scale. The zero matrix has half_scale 0.
// Two normalized matrices represent the same real matrix iff they compare
// equal. Arithmetic is checked; overflow throws OverflowError.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols, int half_scale = 0);
    ExactMatrix(int rows, int cols, int half_scale, std::vector<std::int64_t> entries);

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int half_scale() const { return half_scale_; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    std::int64_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::int64_t& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    ExactMatrix& normalize();
    ExactMatrix transpose() const;

    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;
    ExactMatrix operator-() const;

    // m * this * m^t
    ExactMatrix conjugate_by(const ExactMatrix& m) const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_orthogonal() const;  // M M^t = I

    // Exact trace; throws DomainError when the value is irrational (odd
    // half_scale with nonzero integer trace).
    Rational trace() const;
    // trace(this * other) without forming the product.
    Rational trace_product(const ExactMatrix& other) const;

    Eigen::MatrixXd to_eigen() const;
    std::string str() const;

    bool operator==(const ExactMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int half_scale_ = 0;
    std::vector<std::int64_t> entries_;
};

struct ExactMatrixHash {
    std::size_t operator()(const ExactMatrix& m) const noexcept;
};

// value * 2^(-half_scale/2) as a rational; half_scale must be even or value 0.
Rational dyadic_value(std::int64_t value, int half_scale);

}  // namespace grasspack
