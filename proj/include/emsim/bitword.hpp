#ifndef EMSIM_BITWORD_HPP
#define EMSIM_BITWORD_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "emsim/errors.hpp"

namespace emsim {

/// Fixed-width bit string, the universal value type for plaintexts, keys and
/// measurement outcomes. Bit index 0 is the leftmost character of the string
/// form and the most significant bit of the stored value: "010" with width 3
/// has bit0=0, bit1=1, bit2=0 and value 2.
class BitWord {
public:
    static constexpr int kMaxWidth = 16;

    BitWord() = default;

    BitWord(int width, std::uint32_t bits) : width_(width), bits_(bits) {
        if (width < 1 || width > kMaxWidth)
            throw InvalidArgument("BitWord width must be in 1.." +
                                  std::to_string(kMaxWidth) + ", got " + std::to_string(width));
        if (bits >> width)
            throw InvalidArgument("BitWord value " + std::to_string(bits) +
                                  " does not fit in width " + std::to_string(width));
    }

    static BitWord zero(int width) { return BitWord(width, 0); }

    static BitWord parse(std::string_view text) {
        if (text.empty() || text.size() > kMaxWidth)
            throw ParseError("bit string length must be 1.." + std::to_string(kMaxWidth));
        std::uint32_t v = 0;
        for (char c : text) {
            if (c != '0' && c != '1')
                throw ParseError("bad character '" + std::string(1, c) + "' in bit string");
            v = (v << 1) | static_cast<std::uint32_t>(c - '0');
        }
        return BitWord(static_cast<int>(text.size()), v);
    }

    int width() const { return width_; }
    std::uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    /// Bit at index i, 0 = most significant.
    int bit(int i) const { return static_cast<int>((bits_ >> (width_ - 1 - i)) & 1u); }

    BitWord with_bit(int i, int value) const {
        std::uint32_t mask = 1u << (width_ - 1 - i);
        return BitWord(width_, value ? (bits_ | mask) : (bits_ & ~mask));
    }

    BitWord operator^(const BitWord& other) const {
        check_same_width(other);
        return BitWord(width_, bits_ ^ other.bits_);
    }

    bool operator==(const BitWord&) const = default;

    std::string str() const {
        std::string s(static_cast<size_t>(width_), '0');
        for (int i = 0; i < width_; ++i)
            if (bit(i)) s[static_cast<size_t>(i)] = '1';
        return s;
    }

    void check_same_width(const BitWord& other) const {
        if (width_ != other.width_)
            throw WidthMismatch("widths " + std::to_string(width_) + " and " +
                                std::to_string(other.width_) + " differ");
    }

private:
    int width_ = 1;
    std::uint32_t bits_ = 0;
};

/// Parity of the bitwise AND; the F2 inner product y·v.
inline int dot(const BitWord& x, const BitWord& y) {
    x.check_same_width(y);
    return std::popcount(x.bits() & y.bits()) & 1;
}

}  // namespace emsim

#endif
