#include "emsim/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace emsim {

Distribution::Distribution(int width, Kind kind)
    : width_(width), kind_(kind), weights_(size_t{1} << width, 0.0) {
    if (width < 1 || width > BitWord::kMaxWidth)
        throw InvalidArgument("distribution width out of range: " + std::to_string(width));
}

Distribution Distribution::probabilities(int width, std::vector<double> weights) {
    Distribution d(width, Kind::Probabilities);
    if (weights.size() != d.weights_.size())
        throw BadLength("expected " + std::to_string(d.weights_.size()) + " weights");
    d.weights_ = std::move(weights);
    double total = d.total();
    if (std::abs(total - 1.0) > 1e-9)
        throw InvalidArgument("probabilities sum to " + std::to_string(total));
    for (double w : d.weights_)
        if (w < 0) throw InvalidArgument("negative probability");
    return d;
}

Distribution Distribution::counts(int width, std::vector<double> weights) {
    Distribution d(width, Kind::Counts);
    if (weights.size() != d.weights_.size())
        throw BadLength("expected " + std::to_string(d.weights_.size()) + " weights");
    for (double w : weights)
        if (w < 0) throw InvalidArgument("negative count");
    d.weights_ = std::move(weights);
    return d;
}

double Distribution::total() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

void Distribution::add(std::uint32_t outcome, double w) {
    weights_[outcome] += w;
}

std::vector<double> Distribution::normalized() const {
    double t = total();
    if (t <= 0) throw InvalidArgument("cannot normalize an empty distribution");
    std::vector<double> out = weights_;
    for (double& w : out) w /= t;
    return out;
}

std::vector<BitWord> Distribution::support() const {
    std::vector<BitWord> out;
    for (std::uint32_t x = 0; x < size(); ++x)
        if (weights_[x] > 0) out.emplace_back(width_, x);
    return out;
}

std::vector<std::uint32_t> Distribution::top_half() const {
    std::vector<std::uint32_t> order;
    for (std::uint32_t x = 0; x < size(); ++x)
        if (weights_[x] > 0) order.push_back(x);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (weights_[a] != weights_[b]) return weights_[a] > weights_[b];
        return a < b;
    });
    if (order.size() > size() / 2) order.resize(size() / 2);
    return order;
}

void Distribution::write_csv(std::ostream& out) const {
    out << "outcome,count\n";
    for (std::uint32_t x = 0; x < size(); ++x) {
        std::ostringstream w;
        w.precision(17);
        w << weights_[x];
        out << BitWord(width_, x).str() << "," << w.str() << "\n";
    }
}

Distribution Distribution::read_csv(std::istream& in) {
    std::string line;
    std::vector<std::pair<BitWord, double>> entries;
    int width = -1;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "outcome,count") continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected outcome,count");
        BitWord outcome = BitWord::parse(line.substr(0, comma));
        if (width == -1) width = outcome.width();
        if (outcome.width() != width)
            throw ParseError("line " + std::to_string(lineno) + ": inconsistent outcome width");
        double count;
        try {
            count = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad count");
        }
        entries.emplace_back(outcome, count);
    }
    if (width == -1) throw ParseError("empty distribution file");
    Distribution d(width, Kind::Counts);
    for (auto& [outcome, count] : entries) d.add(outcome.bits(), count);
    return d;
}

Distribution Distribution::read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open distribution file: " + path);
    return read_csv(in);
}

}  // namespace emsim
