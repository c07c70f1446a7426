#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qcss {

// Fixed-length bit vector over GF(2). XOR is the group operation.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_indices(std::size_t n, std::span<const std::size_t> idx) {
        BitVector v(n);
        for (std::size_t i : idx) v.set(i);
        return v;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        check_index(i);
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) {
        check_index(i);
        w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVector& operator^=(const BitVector& o) {
        check_same_size(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool operator==(const BitVector&) const = default;

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // Parity of |this AND other| — the symplectic workhorse.
    bool parity_and(const BitVector& o) const {
        check_same_size(o);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return __builtin_parityll(acc);
    }
    std::size_t count_and(const BitVector& o) const {
        check_same_size(o);
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k)
            c += static_cast<std::size_t>(__builtin_popcountll(w_[k] & o.w_[k]));
        return c;
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                out.push_back(k * 64 + b);
                w &= w - 1;
            }
        }
        return out;
    }

    // Index of lowest set bit, or npos if zero.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
        return npos;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("BitVector index out of range");
    }
    void check_same_size(const BitVector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("BitVector length mismatch");
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-major bit matrix. Rows all share one length.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix from_rows(std::vector<BitVector> rows) {
        BitMatrix m;
        if (!rows.empty()) m.cols_ = rows.front().size();
        for (const auto& r : rows)
            if (r.size() != m.cols_) throw std::invalid_argument("BitMatrix rows of unequal length");
        m.rows_ = std::move(rows);
        return m;
    }

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return cols_; }
    BitVector& row(std::size_t i) { return rows_.at(i); }
    const BitVector& row(std::size_t i) const { return rows_.at(i); }
    void add_row(BitVector r) {
        if (rows_.empty()) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix row length mismatch");
        rows_.push_back(std::move(r));
    }

    // In-place row reduction to row echelon form. Leftmost pivot, first-row
    // tie-break (deterministic decompositions). Returns pivot column per
    // echelon row.
    std::vector<std::size_t> row_reduce();

    std::size_t rank() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// Echelonized view of a generator set with row-operation tracking, so that
// membership queries return the combination of *original* rows.
class Gf2Solver {
public:
    explicit Gf2Solver(const BitMatrix& m);

    std::size_t rank() const { return pivot_cols_.size(); }

    // Subset of original rows whose XOR equals target (selector over rows);
    // nullopt if target is outside the row space.
    std::optional<BitVector> solve(const BitVector& target) const;

    bool in_row_space(const BitVector& target) const { return solve(target).has_value(); }

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<BitVector> echelon_;       // reduced rows, nonzero only
    std::vector<BitVector> combination_;   // echelon_[i] = XOR of original rows selected here
    std::vector<std::size_t> pivot_cols_;  // strictly increasing
};

}  // namespace qcss
