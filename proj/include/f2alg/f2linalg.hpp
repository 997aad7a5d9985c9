// Exact linear algebra over F2 on dense bit-packed rows: row reduction,
// rank, span membership, kernel. All values are immutable after
// construction as far as callers are concerned; every operation here is a
// pure function of its inputs.
#ifndef F2ALG_F2LINALG_HPP
#define F2ALG_F2LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace f2alg {

class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}
    static F2Vector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    // Entrywise XOR; both vectors must have equal length.
    void xor_with(const F2Vector& other);
    bool is_zero() const;
    // F2 inner product <*this, other>.
    bool dot(const F2Vector& other) const;
    // Index of the first 1 entry, or npos when zero.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_set() const;

    std::vector<int> to_bits() const;
    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const F2Vector& a, const F2Vector& b)
    {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

struct F2Matrix {
    std::size_t cols = 0;
    std::vector<F2Vector> rows;

    F2Matrix() = default;
    explicit F2Matrix(std::size_t cols_) : cols(cols_) {}
    static F2Matrix from_bits(const std::vector<std::vector<int>>& rows);

    std::size_t row_count() const { return rows.size(); }
    void add_row(F2Vector r);

    friend bool operator==(const F2Matrix& a, const F2Matrix& b)
    {
        return a.cols == b.cols && a.rows == b.rows;
    }
};

struct RowReduceResult {
    F2Matrix rref;                     // same row count as the input, zero rows at the bottom
    std::size_t rank = 0;              // number of nonzero rows of rref
    std::vector<std::size_t> pivots;   // strictly increasing pivot column indices
};

RowReduceResult row_reduce(const F2Matrix& m);

struct SpanMembership {
    bool member = false;
    // When member: coords[r] = 1 iff row r of m participates in a combination
    // summing to v.
    std::optional<F2Vector> coords;
};

// Throws DimensionError when v's length differs from m's column count.
SpanMembership span_membership(const F2Matrix& m, const F2Vector& v);

// Basis of { x : m x = 0 }, one kernel vector per row. rank(m) + kernel
// row count = m.cols.
F2Matrix kernel(const F2Matrix& m);

}  // namespace f2alg

#endif
