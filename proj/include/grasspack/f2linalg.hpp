#pragma once

// Linear algebra over F2 and the orthogonal geometry of the quotient group
// E/{+-I} of the extraspecial 2-group.
//
// Bit conventions. A vector u in U = F2^i is the bit string u_1 ... u_i and is
// packed into a word with u_1 as the most significant bit, so the integer
// value of the word is the lexicographic index of u. An element
// X(a)Y(b) of the quotient is the length-2i string (a, b), a first, packed the
// same way: word = (a << i) | b.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace grasspack {

using Word = std::uint32_t;

// Longest supported bit string. 2i <= 30 keeps Zassenhaus rows in 64 bits.
inline constexpr int kMaxBits = 30;

int parity(Word w);

class F2Vector {
public:
    F2Vector() = default;
    F2Vector(Word bits, int length);

    // Parses a string of '0'/'1' characters, first character most significant.
    static F2Vector parse(const std::string& text);

    Word bits() const { return bits_; }
    int length() const { return length_; }
    bool bit(int position) const { return (bits_ >> (length_ - 1 - position)) & 1u; }
    std::string str() const;

    F2Vector operator+(const F2Vector& other) const;
    bool operator==(const F2Vector&) const = default;

private:
    Word bits_ = 0;
    int length_ = 0;
};

// A subspace of F2^length stored by its reduced row echelon basis. Rows are
// sorted by decreasing leading bit, i.e. pivots strictly increase left to
// right, and every pivot column holds a single 1.
class F2Subspace {
public:
    F2Subspace() = default;
    explicit F2Subspace(int length) : length_(length) {}

    static F2Subspace canonicalize(std::span<const F2Vector> rows);
    static F2Subspace canonicalize(int length, std::span<const Word> rows);

    int length() const { return length_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Word>& basis() const { return basis_; }

    bool contains(Word v) const;
    // Reduces v against the basis; zero iff v lies in the subspace.
    Word reduce(Word v) const;
    // Bit j of the result is the coefficient of basis row j in v (v must lie
    // in the subspace).
    std::uint64_t coordinates(Word v) const;
    // Element with coordinate mask `coords`.
    Word element(std::uint64_t coords) const;
    std::vector<Word> elements() const;

    F2Subspace sum(const F2Subspace& other) const;

    std::string str() const;

    bool operator==(const F2Subspace&) const = default;
    auto operator<=>(const F2Subspace&) const = default;

private:
    int length_ = 0;
    std::vector<Word> basis_;
};

struct F2SubspaceHash {
    std::size_t operator()(const F2Subspace& s) const noexcept;
};

F2Subspace subspace_intersection(const F2Subspace& s1, const F2Subspace& s2);

// (E/{+-I}, Q) of plus type and dimension 2i.
class OrthogonalSpace {
public:
    explicit OrthogonalSpace(int i);

    int i() const { return i_; }
    int length() const { return 2 * i_; }
    Word x_part(Word v) const { return v >> i_; }
    Word y_part(Word v) const { return v & low_mask_; }
    Word join(Word a, Word b) const { return (a << i_) | b; }

    // Q(X(a)Y(b)) = a.b
    int quadratic_form(Word v) const;
    // B(v, w) = a.b' + a'.b
    int bilinear_form(Word v, Word w) const;

    bool is_totally_singular(const F2Subspace& s) const;

    // All nonzero v with Q(v) = 0, ascending.
    std::vector<Word> singular_points() const;

    // The subspaces X = {(a, 0)} and Y = {(0, b)}.
    F2Subspace x_subspace() const;
    F2Subspace y_subspace() const;

    // Rank of B restricted to s.
    int bilinear_rank(const F2Subspace& s) const;

private:
    int i_;
    Word low_mask_;
};

int quadratic_form(const F2Vector& v);
int bilinear_form(const F2Vector& v, const F2Vector& w);

// Every totally singular d-subspace exactly once, sorted by canonical basis.
std::vector<F2Subspace> enumerate_totally_singular(const OrthogonalSpace& space, int d);

// Gaussian binomial [i k] over F2.
std::uint64_t gaussian_binomial(int i, int k);

// Number of totally singular (i-k)-subspaces of the 2i-dimensional plus-type
// space: [i k] * prod_{j=k}^{i-1} (2^j + 1).
std::uint64_t count_totally_singular(int i, int k);

}  // namespace grasspack
