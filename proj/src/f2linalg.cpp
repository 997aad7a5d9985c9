#include "f2alg/f2linalg.hpp"

#include <bit>
#include <utility>

#include "f2alg/errors.hpp"
#include "f2alg/f2kernel.hpp"

namespace f2alg {

F2Vector F2Vector::from_bits(const std::vector<int>& bits)
{
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1)
            v.set(i);
    return v;
}

void F2Vector::xor_with(const F2Vector& other)
{
    if (len_ != other.len_)
        throw DimensionError("xor of F2 vectors of unequal length");
    bitops::xor_words(words_.data(), other.words_.data(), words_.size());
}

bool F2Vector::is_zero() const
{
    return bitops::is_zero(words_.data(), words_.size());
}

bool F2Vector::dot(const F2Vector& other) const
{
    if (len_ != other.len_)
        throw DimensionError("dot of F2 vectors of unequal length");
    return bitops::and_parity(words_.data(), other.words_.data(), words_.size());
}

std::size_t F2Vector::first_set() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
}

std::vector<int> F2Vector::to_bits() const
{
    std::vector<int> bits(len_);
    for (std::size_t i = 0; i < len_; ++i)
        bits[i] = get(i) ? 1 : 0;
    return bits;
}

F2Matrix F2Matrix::from_bits(const std::vector<std::vector<int>>& rows)
{
    F2Matrix m(rows.empty() ? 0 : rows.front().size());
    for (const auto& r : rows)
        m.add_row(F2Vector::from_bits(r));
    return m;
}

void F2Matrix::add_row(F2Vector r)
{
    if (rows.empty() && cols == 0)
        cols = r.size();
    if (r.size() != cols)
        throw DimensionError("matrix rows must have equal length");
    rows.push_back(std::move(r));
}

namespace {

    // Gauss-Jordan over rows, optionally carrying companion rows through the
    // same elementary operations (used to recover combinations of the
    // original rows).
    struct Elimination {
        std::vector<F2Vector> rows;
        std::vector<F2Vector> trail;  // empty when not tracked
        std::vector<std::size_t> pivots;
        std::size_t rank = 0;
    };

    Elimination eliminate(const F2Matrix& m, bool track)
    {
        Elimination e;
        e.rows = m.rows;
        if (track) {
            e.trail.assign(m.row_count(), F2Vector(m.row_count()));
            for (std::size_t r = 0; r < m.row_count(); ++r)
                e.trail[r].set(r);
        }
        std::size_t next = 0;
        for (std::size_t col = 0; col < m.cols && next < e.rows.size(); ++col) {
            std::size_t pivot = F2Vector::npos;
            for (std::size_t r = next; r < e.rows.size(); ++r) {
                if (e.rows[r].get(col)) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == F2Vector::npos)
                continue;
            std::swap(e.rows[next], e.rows[pivot]);
            if (track)
                std::swap(e.trail[next], e.trail[pivot]);
            for (std::size_t r = 0; r < e.rows.size(); ++r) {
                if (r != next && e.rows[r].get(col)) {
                    e.rows[r].xor_with(e.rows[next]);
                    if (track)
                        e.trail[r].xor_with(e.trail[next]);
                }
            }
            e.pivots.push_back(col);
            ++next;
        }
        e.rank = next;
        return e;
    }

}  // namespace

RowReduceResult row_reduce(const F2Matrix& m)
{
    Elimination e = eliminate(m, false);
    RowReduceResult res;
    res.rref.cols = m.cols;
    res.rref.rows = std::move(e.rows);
    res.rank = e.rank;
    res.pivots = std::move(e.pivots);
    return res;
}

SpanMembership span_membership(const F2Matrix& m, const F2Vector& v)
{
    if (v.size() != m.cols)
        throw DimensionError("span_membership: vector length differs from column count");
    Elimination e = eliminate(m, true);
    F2Vector rem = v;
    F2Vector combo(m.row_count());
    for (std::size_t r = 0; r < e.rank; ++r) {
        if (rem.get(e.pivots[r])) {
            rem.xor_with(e.rows[r]);
            combo.xor_with(e.trail[r]);
        }
    }
    SpanMembership out;
    out.member = rem.is_zero();
    if (out.member)
        out.coords = std::move(combo);
    return out;
}

F2Matrix kernel(const F2Matrix& m)
{
    Elimination e = eliminate(m, false);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : e.pivots)
        is_pivot[c] = true;
    F2Matrix ker(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c])
            continue;
        F2Vector x(m.cols);
        x.set(c);
        for (std::size_t r = 0; r < e.rank; ++r)
            if (e.rows[r].get(c))
                x.set(e.pivots[r]);
        ker.add_row(std::move(x));
    }
    return ker;
}

}  // namespace f2alg
