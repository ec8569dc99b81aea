#ifndef EMSIM_RATIONAL_HPP
#define EMSIM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "emsim/errors.hpp"

namespace emsim {

/// Small exact rational. Epsilon values and the sigma_p masses are compared
/// exactly against reference constants, so they must never pass through a float.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw InvalidArgument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    /// Parses "0.434", "1", "1/4" exactly.
    static Rational parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty rational");
        auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
        }
        auto pt = text.find('.');
        if (pt == std::string_view::npos) return Rational(parse_int(text));
        std::string_view whole = text.substr(0, pt), frac = text.substr(pt + 1);
        if (frac.size() > 15) throw ParseError("too many decimal digits: " + std::string(text));
        std::int64_t den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        bool neg = !whole.empty() && whole.front() == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        std::int64_t n = (neg ? -1 : 1) * ((neg ? -w : w) * den + f);
        return Rational(n, den);
    }

private:
    static std::int64_t parse_int(std::string_view s) {
        if (s.empty()) throw ParseError("empty integer");
        std::int64_t sign = 1;
        size_t i = 0;
        if (s[0] == '-') { sign = -1; i = 1; }
        if (i == s.size()) throw ParseError("bare sign");
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("bad digit in '" + std::string(s) + "'");
            v = v * 10 + (s[i] - '0');
        }
        return sign * v;
    }
};

}  // namespace emsim

#endif
