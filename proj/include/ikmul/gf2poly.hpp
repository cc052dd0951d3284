#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ikmul {

// Dense polynomial over GF(2), stored as packed 64-bit words. Bit i holds
// the coefficient of x^i. nominal_width() is the declared length in bits;
// every coefficient at or above it is zero. Equality compares coefficient
// sequences only, so two values of different nominal width can be equal.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::size_t width) : words_(word_count(width)), width_(width) {}

    // Low 64 coefficients from an integer literal; width is the bit length
    // of the value (at least 1).
    static Gf2Poly from_word(std::uint64_t value);
    static Gf2Poly from_word(std::uint64_t value, std::size_t width);
    static Gf2Poly one() { return from_word(1); }
    // The monomial x^k, width k+1.
    static Gf2Poly x_pow(std::size_t k);
    // Packed little-endian words; bits at or above width are discarded.
    static Gf2Poly from_words(std::vector<std::uint64_t> words, std::size_t width);

    std::size_t nominal_width() const { return width_; }
    // Index of the highest set coefficient; -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const;

    bool bit(std::size_t i) const;
    // Widens the polynomial to i+1 bits if needed.
    void set_bit(std::size_t i, bool value = true);

    std::span<const std::uint64_t> words() const { return words_; }

    // Same coefficients with a new declared width; width must exceed degree().
    Gf2Poly with_width(std::size_t width) const;

    Gf2Poly& operator^=(const Gf2Poly& rhs);

    friend bool operator==(const Gf2Poly& lhs, const Gf2Poly& rhs);
    friend bool operator!=(const Gf2Poly& lhs, const Gf2Poly& rhs) { return !(lhs == rhs); }

private:
    static std::size_t word_count(std::size_t width) { return (width + 63) / 64; }
    void clear_excess_bits();

    std::vector<std::uint64_t> words_;
    std::size_t width_ = 0;
};

// Addition in GF(2)[x] is coefficient-wise XOR; width is the max of the inputs.
Gf2Poly operator^(Gf2Poly lhs, const Gf2Poly& rhs);

// p * x^k; width grows by k.
Gf2Poly shift_left(const Gf2Poly& p, std::size_t k);

// Coefficients lo..hi inclusive, re-based at x^0; width hi-lo+1.
// Bits beyond p's width read as zero. Requires hi >= lo.
Gf2Poly extract(const Gf2Poly& p, std::size_t hi, std::size_t lo);

// Convolution product c_i = XOR_{k+l=i} a_k*b_l. Width is
// width(a)+width(b)-1 (the 2n-1-bit product). This is the reference
// multiplier every other routine is checked against.
Gf2Poly mul_schoolbook(const Gf2Poly& a, const Gf2Poly& b);

struct SchoolbookCost {
    std::uint64_t partial_mults = 0;
    std::uint64_t xor_ops = 0;
    bool operator==(const SchoolbookCost&) const = default;
};

// Cost of the direct n x n bit product: n^2 one-bit multiplications and
// (n-1)^2 XOR operations. Requires n >= 1.
SchoolbookCost op_counts_schoolbook(std::uint64_t n);

// Big-endian hex with mandatory 0x prefix; the least significant digit
// encodes coefficients of x^3..x^0. Throws std::invalid_argument naming the
// offending character position. Width is 4 bits per digit.
Gf2Poly parse_hex(std::string_view text);

// Canonical lowercase hex: no leading zero digits beyond a single "0x0".
std::string format_hex(const Gf2Poly& p);

}  // namespace ikmul
