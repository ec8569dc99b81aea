#ifndef EMSIM_F2LINALG_HPP
#define EMSIM_F2LINALG_HPP

#include <cstdint>
#include <vector>

#include "emsim/bitword.hpp"

namespace emsim {

/// Incremental system of F2 linear equations. Rows are kept in reduced
/// row-echelon form so rank() is just the stored row count and the period
/// solve falls out of the nullspace. add_row streams one sample at a time,
/// which is how the attack consumes Simon measurements.
class EquationSet {
public:
    explicit EquationSet(int width);

    /// Returns true iff y was linearly independent of the current rows
    /// (rank increased). Duplicates and dependent rows are absorbed.
    bool add_row(const BitWord& y);

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

    /// Echelon rows, pivot-descending.
    std::vector<BitWord> rows() const;

    /// The unique nonzero s with dot(r, s) = 0 for every row r.
    /// Requires rank == width-1; throws RankDeficient below that and
    /// FullRank at full rank (the caller reads full rank as period 0).
    BitWord solve_period() const;

    /// Basis of {s : dot(r,s) = 0 for all rows r}; size = width - rank.
    std::vector<BitWord> nullspace_basis() const;

private:
    int width_;
    std::vector<std::uint32_t> rows_;  // reduced echelon, sorted by pivot descending
};

}  // namespace emsim

#endif
