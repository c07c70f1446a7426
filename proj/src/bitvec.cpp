#include "qcss/bitvec.hpp"

namespace qcss {

std::vector<std::size_t> BitMatrix::row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols_ && next_row < rows_.size(); ++col) {
        std::size_t pivot = rows_.size();
        for (std::size_t r = next_row; r < rows_.size(); ++r) {
            if (rows_[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_.size()) continue;
        std::swap(rows_[next_row], rows_[pivot]);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r != next_row && rows_[r].get(col)) rows_[r] ^= rows_[next_row];
        }
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

std::size_t BitMatrix::rank() const {
    BitMatrix copy = *this;
    return copy.row_reduce().size();
}

Gf2Solver::Gf2Solver(const BitMatrix& m) : n_rows_(m.n_rows()), n_cols_(m.n_cols()) {
    for (std::size_t r = 0; r < n_rows_; ++r) {
        BitVector row = m.row(r);
        BitVector comb(n_rows_);
        comb.set(r);
        // Eliminate against existing pivots.
        for (std::size_t i = 0; i < echelon_.size(); ++i) {
            if (row.get(pivot_cols_[i])) {
                row ^= echelon_[i];
                comb ^= combination_[i];
            }
        }
        std::size_t lead = row.lowest_set();
        if (lead == BitVector::npos) continue;  // dependent row
        // Insert keeping pivot columns sorted; reduce rows above.
        std::size_t pos = 0;
        while (pos < pivot_cols_.size() && pivot_cols_[pos] < lead) ++pos;
        echelon_.insert(echelon_.begin() + static_cast<std::ptrdiff_t>(pos), row);
        combination_.insert(combination_.begin() + static_cast<std::ptrdiff_t>(pos), comb);
        pivot_cols_.insert(pivot_cols_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        for (std::size_t i = 0; i < echelon_.size(); ++i) {
            if (i != pos && echelon_[i].get(lead)) {
                echelon_[i] ^= echelon_[pos];
                combination_[i] ^= combination_[pos];
            }
        }
    }
}

std::optional<BitVector> Gf2Solver::solve(const BitVector& target) const {
    if (target.size() != n_cols_) throw std::invalid_argument("Gf2Solver target length mismatch");
    BitVector residue = target;
    BitVector selector(n_rows_);
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
        if (residue.get(pivot_cols_[i])) {
            residue ^= echelon_[i];
            selector ^= combination_[i];
        }
    }
    if (residue.any()) return std::nullopt;
    return selector;
}

}  // namespace qcss
