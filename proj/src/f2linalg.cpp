#include "emsim/f2linalg.hpp"

#include <algorithm>
#include <bit>

namespace emsim {

namespace {
// Highest set bit position (value-space), rows are nonzero when queried.
inline int pivot(std::uint32_t v) { return std::bit_width(v) - 1; }
}  // namespace

EquationSet::EquationSet(int width) : width_(width) {
    if (width < 1 || width > BitWord::kMaxWidth)
        throw InvalidArgument("EquationSet width out of range: " + std::to_string(width));
}

bool EquationSet::add_row(const BitWord& y) {
    if (y.width() != width_)
        throw WidthMismatch("row width " + std::to_string(y.width()) +
                            " != system width " + std::to_string(width_));
    std::uint32_t v = y.bits();
    for (std::uint32_t r : rows_)
        if (v >> pivot(r) & 1) v ^= r;
    if (v == 0) return false;

    // Back-substitute the new pivot out of existing rows, then insert.
    int p = pivot(v);
    for (std::uint32_t& r : rows_)
        if (r >> p & 1) r ^= v;
    rows_.insert(std::upper_bound(rows_.begin(), rows_.end(), v,
                                  [](std::uint32_t a, std::uint32_t b) { return pivot(a) > pivot(b); }),
                 v);
    return true;
}

std::vector<BitWord> EquationSet::rows() const {
    std::vector<BitWord> out;
    out.reserve(rows_.size());
    for (std::uint32_t r : rows_) out.emplace_back(width_, r);
    return out;
}

BitWord EquationSet::solve_period() const {
    if (rank() < width_ - 1)
        throw RankDeficient("rank " + std::to_string(rank()) + " < width-1 = " +
                            std::to_string(width_ - 1));
    if (rank() == width_)
        throw FullRank("system has full rank " + std::to_string(width_));
    return nullspace_basis().front();
}

std::vector<BitWord> EquationSet::nullspace_basis() const {
    std::uint32_t pivot_mask = 0;
    for (std::uint32_t r : rows_) pivot_mask |= 1u << pivot(r);

    std::vector<BitWord> basis;
    for (int c = width_ - 1; c >= 0; --c) {
        if (pivot_mask >> c & 1) continue;
        // Free column c: set it, read the pivot coordinates off the RREF rows.
        std::uint32_t v = 1u << c;
        for (std::uint32_t r : rows_)
            if (r >> c & 1) v |= 1u << pivot(r);
        basis.emplace_back(width_, v);
    }
    return basis;
}

}  // namespace emsim
