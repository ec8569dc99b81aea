#ifndef EMSIM_DISTRIBUTION_HPP
#define EMSIM_DISTRIBUTION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "emsim/bitword.hpp"

namespace emsim {

/// Outcome -> weight map over n-bit strings, dense. Holds either exact
/// probabilities (normalized within 1e-9) or sampled counts; counts may be
/// fractional when they are means over repeated experiments.
class Distribution {
public:
    enum class Kind { Probabilities, Counts };

    Distribution(int width, Kind kind);
    static Distribution probabilities(int width, std::vector<double> weights);
    static Distribution counts(int width, std::vector<double> weights);

    int width() const { return width_; }
    Kind kind() const { return kind_; }
    bool is_counts() const { return kind_ == Kind::Counts; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(weights_.size()); }

    double weight(std::uint32_t outcome) const { return weights_[outcome]; }
    const std::vector<double>& weights() const { return weights_; }
    double total() const;

    void add(std::uint32_t outcome, double w = 1.0);

    /// Weights scaled to sum to 1.
    std::vector<double> normalized() const;

    /// Outcomes with nonzero weight.
    std::vector<BitWord> support() const;

    /// The 2^(width-1) heaviest observed outcomes, ties broken by smaller
    /// value; shorter when fewer outcomes carry weight.
    std::vector<std::uint32_t> top_half() const;

    bool operator==(const Distribution&) const = default;

    // CSV "outcome,count" with outcomes as fixed-width binary strings,
    // sorted by outcome.
    void write_csv(std::ostream& out) const;
    static Distribution read_csv(std::istream& in);
    static Distribution read_csv_file(const std::string& path);

private:
    int width_;
    Kind kind_;
    std::vector<double> weights_;
};

}  // namespace emsim

#endif
