#ifndef EMSIM_GALOIS_HPP
#define EMSIM_GALOIS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "emsim/bitword.hpp"

namespace emsim {

/// GF(2^n) description: extension degree n in 2..8 and an irreducible
/// modulus of degree exactly n, stored with bit k = coefficient of X^k.
/// Irreducibility is verified at construction by trial division.
struct FieldSpec {
    int n;
    std::uint32_t poly;

    FieldSpec(int n, std::uint32_t poly);
};

/// Invertible affine transformation v -> M v + c over F2^n. Row i of the
/// matrix produces output bit i (bit 0 = most significant).
struct AffineMap {
    int n;
    std::vector<std::uint32_t> rows;
    std::uint32_t constant;

    AffineMap(int n, std::vector<std::uint32_t> rows, std::uint32_t constant);
    static AffineMap identity(int n);

    std::uint32_t apply(std::uint32_t v) const;
};

/// Bijective lookup table on 2^n entries; the public permutation P and every
/// synthesized circuit's truth table. Bijectivity is enforced at construction.
class PermTable {
public:
    PermTable(int n, std::vector<std::uint16_t> table);
    static PermTable identity(int n);

    int n() const { return n_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(table_.size()); }
    std::uint16_t operator[](std::uint32_t x) const { return table_[x]; }
    const std::vector<std::uint16_t>& table() const { return table_; }

    BitWord apply(const BitWord& x) const;

    bool operator==(const PermTable&) const = default;

private:
    int n_;
    std::vector<std::uint16_t> table_;
};

/// Carry-less product reduced modulo spec.poly.
std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, const FieldSpec& spec);

/// Multiplicative inverse via a^(2^n - 2); 0 maps to 0.
std::uint32_t gf_inv(std::uint32_t a, const FieldSpec& spec);

/// AES-style S-box: field inversion followed by the affine map.
PermTable build_sbox(const FieldSpec& spec, const AffineMap& aff);

/// Hex LUT parsing: one digit per entry for n <= 4, two digits for n in 5..8.
PermTable parse_lut(std::string_view text, int n);

/// Canonical uppercase hex form; parse_lut(format_lut(p), p.n()) == p.
std::string format_lut(const PermTable& p);

PermTable invert_perm(const PermTable& p);

}  // namespace emsim

#endif
