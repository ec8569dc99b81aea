#include "emsim/galois.hpp"

#include <algorithm>
#include <bit>

#include "emsim/f2linalg.hpp"

namespace emsim {

namespace {

// Remainder of carry-less division a mod b, b != 0.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = static_cast<int>(std::bit_width(b));
    while (static_cast<int>(std::bit_width(a)) >= db)
        a ^= b << (static_cast<int>(std::bit_width(a)) - db);
    return a;
}

bool poly_irreducible(std::uint32_t poly, int n) {
    // Trial division by every polynomial of degree 1..n/2. A reducible poly
    // of degree n has a factor in that range.
    for (int d = 1; d <= n / 2; ++d)
        for (std::uint32_t q = 1u << d; q < (2u << d); ++q)
            if (poly_mod(poly, q) == 0) return false;
    return true;
}

}  // namespace

FieldSpec::FieldSpec(int n, std::uint32_t poly) : n(n), poly(poly) {
    if (n < 2 || n > 8)
        throw InvalidArgument("field degree must be in 2..8, got " + std::to_string(n));
    if (static_cast<int>(std::bit_width(poly)) != n + 1)
        throw InvalidArgument("modulus must have degree exactly " + std::to_string(n));
    if (!poly_irreducible(poly, n))
        throw NotIrreducible("polynomial " + std::to_string(poly) + " factors over F2");
}

AffineMap::AffineMap(int n, std::vector<std::uint32_t> rows_in, std::uint32_t constant)
    : n(n), rows(std::move(rows_in)), constant(constant) {
    if (n < 1 || n > 8) throw InvalidArgument("affine dimension out of range");
    if (rows.size() != static_cast<size_t>(n))
        throw InvalidArgument("affine matrix needs exactly n rows");
    for (std::uint32_t r : rows)
        if (r >> n) throw InvalidArgument("affine matrix row wider than n bits");
    if (constant >> n) throw InvalidArgument("affine constant wider than n bits");

    EquationSet rank_check(n);
    for (std::uint32_t r : rows) rank_check.add_row(BitWord(n, r));
    if (rank_check.rank() != n)
        throw NonInvertibleAffine("matrix rank " + std::to_string(rank_check.rank()) +
                                  " < " + std::to_string(n));
}

AffineMap AffineMap::identity(int n) {
    std::vector<std::uint32_t> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = 1u << (n - 1 - i);
    return AffineMap(n, std::move(rows), 0);
}

std::uint32_t AffineMap::apply(std::uint32_t v) const {
    std::uint32_t out = constant;
    for (int i = 0; i < n; ++i)
        out ^= static_cast<std::uint32_t>(std::popcount(rows[static_cast<size_t>(i)] & v) & 1)
               << (n - 1 - i);
    return out;
}

PermTable::PermTable(int n, std::vector<std::uint16_t> table) : n_(n), table_(std::move(table)) {
    if (n < 1 || n > BitWord::kMaxWidth)
        throw InvalidArgument("permutation width out of range: " + std::to_string(n));
    size_t size = size_t{1} << n;
    if (table_.size() != size)
        throw BadLength("permutation table has " + std::to_string(table_.size()) +
                        " entries, expected " + std::to_string(size));
    std::vector<bool> seen(size, false);
    for (std::uint16_t v : table_) {
        if (v >= size) throw NotBijective("entry " + std::to_string(v) + " out of range");
        if (seen[v]) throw NotBijective("value " + std::to_string(v) + " appears twice");
        seen[v] = true;
    }
}

PermTable PermTable::identity(int n) {
    std::vector<std::uint16_t> t(size_t{1} << n);
    for (size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint16_t>(i);
    return PermTable(n, std::move(t));
}

BitWord PermTable::apply(const BitWord& x) const {
    if (x.width() != n_)
        throw WidthMismatch("input width " + std::to_string(x.width()) +
                            " != table width " + std::to_string(n_));
    return BitWord(n_, table_[x.bits()]);
}

std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, const FieldSpec& spec) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> spec.n & 1) a ^= spec.poly;
    }
    return r;
}

std::uint32_t gf_inv(std::uint32_t a, const FieldSpec& spec) {
    if (a == 0) return 0;
    // a^(2^n - 2) by square and multiply.
    std::uint32_t result = 1, base = a;
    unsigned exp = (1u << spec.n) - 2;
    while (exp) {
        if (exp & 1) result = gf_mul(result, base, spec);
        base = gf_mul(base, base, spec);
        exp >>= 1;
    }
    return result;
}

PermTable build_sbox(const FieldSpec& spec, const AffineMap& aff) {
    if (aff.n != spec.n)
        throw WidthMismatch("affine dimension " + std::to_string(aff.n) +
                            " != field degree " + std::to_string(spec.n));
    std::vector<std::uint16_t> table(size_t{1} << spec.n);
    for (std::uint32_t a = 0; a < table.size(); ++a)
        table[a] = static_cast<std::uint16_t>(aff.apply(gf_inv(a, spec)));
    return PermTable(spec.n, std::move(table));
}

PermTable parse_lut(std::string_view text, int n) {
    if (n < 1 || n > 8) throw InvalidArgument("LUT width must be in 1..8");
    int digits = n <= 4 ? 1 : 2;
    size_t expected = (size_t{1} << n) * static_cast<size_t>(digits);
    if (text.size() != expected)
        throw BadLength("LUT for n=" + std::to_string(n) + " needs " +
                        std::to_string(expected) + " hex digits, got " +
                        std::to_string(text.size()));
    auto nibble = [&](char c) -> std::uint32_t {
        if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
        if (c >= 'A' && c <= 'F') return static_cast<std::uint32_t>(c - 'A' + 10);
        if (c >= 'a' && c <= 'f') return static_cast<std::uint32_t>(c - 'a' + 10);
        throw BadDigit("bad hex digit '" + std::string(1, c) + "'");
    };
    std::vector<std::uint16_t> table(size_t{1} << n);
    for (size_t i = 0; i < table.size(); ++i) {
        std::uint32_t v = nibble(text[i * digits]);
        if (digits == 2) v = v << 4 | nibble(text[i * 2 + 1]);
        if (v >> n) throw BadDigit("entry " + std::to_string(v) + " exceeds width " + std::to_string(n));
        table[i] = static_cast<std::uint16_t>(v);
    }
    return PermTable(n, std::move(table));
}

std::string format_lut(const PermTable& p) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    int digits = p.n() <= 4 ? 1 : 2;
    out.reserve(p.size() * static_cast<size_t>(digits));
    for (std::uint32_t i = 0; i < p.size(); ++i) {
        if (digits == 2) out.push_back(hex[p[i] >> 4]);
        out.push_back(hex[p[i] & 0xF]);
    }
    return out;
}

PermTable invert_perm(const PermTable& p) {
    std::vector<std::uint16_t> inv(p.size());
    for (std::uint32_t x = 0; x < p.size(); ++x) inv[p[x]] = static_cast<std::uint16_t>(x);
    return PermTable(p.n(), std::move(inv));
}

}  // namespace emsim
