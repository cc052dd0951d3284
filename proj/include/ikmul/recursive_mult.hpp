#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ikmul/gf2poly.hpp"

namespace ikmul {

enum class SplitStep { karatsuba2, bailey3 };

// How an operand is fragmented into segments: steps are applied outermost
// first (a 2-way or 3-way split per step), and base_width is the bit width
// of one final segment. The total segment count s is the product of the
// split factors.
struct SplitStrategy {
    std::vector<SplitStep> steps;
    unsigned base_width = 1;

    unsigned segment_count() const;
    unsigned operand_width() const { return segment_count() * base_width; }

    // The stock configurations: 2/4/8 segments with 128/64/32-bit segments.
    static SplitStrategy karatsuba(unsigned segments);
    static SplitStrategy karatsuba(unsigned segments, unsigned base_width);
    // 3/6/9 segments with 81/39/27-bit segments. The 6-segment variant
    // nests a 3-way split inside an outer 2-way split.
    static SplitStrategy bailey(unsigned segments);
    static SplitStrategy bailey(unsigned segments, unsigned base_width);

    bool operator==(const SplitStrategy&) const = default;
};

struct SplitHalves {
    Gf2Poly hi;  // a1
    Gf2Poly lo;  // a0
};

// a = hi * x^n ^ lo with both halves of width n. The operand must fit in
// 2n bits; shorter operands are zero-padded.
SplitHalves split2(const Gf2Poly& a, std::size_t n);

// Recursive 2-way multiplication: three half-width products per level,
// recursing until the operand width is at most base_width. Operands are
// padded to the next width of the form base_width * 2^k.
Gf2Poly mul_karatsuba2(const Gf2Poly& a, const Gf2Poly& b, unsigned base_width = 1);

// Recursive 3-way multiplication: six third-width products per level.
// Operands are padded to the next width of the form base_width * 3^k.
Gf2Poly mul_bailey3(const Gf2Poly& a, const Gf2Poly& b, unsigned base_width = 1);

// Multiplication following an explicit strategy, one split per step, with
// base_width-bit leaf products. Operands must fit in operand_width() bits.
Gf2Poly mul_recursive(const Gf2Poly& a, const Gf2Poly& b, const SplitStrategy& strategy);

// Leaf products performed by the recursion: a factor of 3 per 2-way step
// and 6 per 3-way step.
std::uint64_t recursive_mult_count(const SplitStrategy& strategy);

}  // namespace ikmul
