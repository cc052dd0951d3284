#include "ikmul/recursive_mult.hpp"

#include <span>
#include <stdexcept>
#include <string>

namespace ikmul {

namespace {

std::size_t effective_width(const Gf2Poly& p) {
    return static_cast<std::size_t>(p.degree() + 1);
}

std::size_t product_width(const Gf2Poly& a, const Gf2Poly& b) {
    const std::size_t wa = a.nominal_width();
    const std::size_t wb = b.nominal_width();
    return (wa == 0 || wb == 0) ? wa + wb : wa + wb - 1;
}

// C = p0 ^ (p0 ^ p1 ^ p01) * x^n ^ p1 * x^2n
Gf2Poly combine2(const Gf2Poly& p0, const Gf2Poly& p1, const Gf2Poly& p01, std::size_t n) {
    Gf2Poly c = p0;
    c ^= shift_left(p0 ^ p1 ^ p01, n);
    c ^= shift_left(p1, 2 * n);
    return c;
}

// C = d0 ^ (d0^d1^d01) x^t ^ (d0^d1^d2^d02) x^2t ^ (d1^d2^d12) x^3t ^ d2 x^4t
Gf2Poly combine3(const Gf2Poly& d0, const Gf2Poly& d1, const Gf2Poly& d2,
                 const Gf2Poly& d01, const Gf2Poly& d02, const Gf2Poly& d12, std::size_t t) {
    Gf2Poly c = d0;
    c ^= shift_left(d0 ^ d1 ^ d01, t);
    c ^= shift_left(d0 ^ d1 ^ d2 ^ d02, 2 * t);
    c ^= shift_left(d1 ^ d2 ^ d12, 3 * t);
    c ^= shift_left(d2, 4 * t);
    return c;
}

Gf2Poly mul_k2_rec(const Gf2Poly& a, const Gf2Poly& b, std::size_t width, unsigned base_width) {
    if (width <= base_width) {
        return mul_schoolbook(a.with_width(width), b.with_width(width));
    }
    const std::size_t n = width / 2;
    const auto [a1, a0] = split2(a, n);
    const auto [b1, b0] = split2(b, n);
    const Gf2Poly p0 = mul_k2_rec(a0, b0, n, base_width);
    const Gf2Poly p1 = mul_k2_rec(a1, b1, n, base_width);
    const Gf2Poly p01 = mul_k2_rec(a0 ^ a1, b0 ^ b1, n, base_width);
    return combine2(p0, p1, p01, n);
}

Gf2Poly mul_b3_rec(const Gf2Poly& a, const Gf2Poly& b, std::size_t width, unsigned base_width) {
    if (width <= base_width) {
        return mul_schoolbook(a.with_width(width), b.with_width(width));
    }
    const std::size_t t = width / 3;
    const Gf2Poly a0 = extract(a, t - 1, 0);
    const Gf2Poly a1 = extract(a, 2 * t - 1, t);
    const Gf2Poly a2 = extract(a, 3 * t - 1, 2 * t);
    const Gf2Poly b0 = extract(b, t - 1, 0);
    const Gf2Poly b1 = extract(b, 2 * t - 1, t);
    const Gf2Poly b2 = extract(b, 3 * t - 1, 2 * t);
    const Gf2Poly d0 = mul_b3_rec(a0, b0, t, base_width);
    const Gf2Poly d1 = mul_b3_rec(a1, b1, t, base_width);
    const Gf2Poly d2 = mul_b3_rec(a2, b2, t, base_width);
    const Gf2Poly d01 = mul_b3_rec(a0 ^ a1, b0 ^ b1, t, base_width);
    const Gf2Poly d02 = mul_b3_rec(a0 ^ a2, b0 ^ b2, t, base_width);
    const Gf2Poly d12 = mul_b3_rec(a1 ^ a2, b1 ^ b2, t, base_width);
    return combine3(d0, d1, d2, d01, d02, d12, t);
}

Gf2Poly mul_strategy_rec(const Gf2Poly& a, const Gf2Poly& b, std::size_t width,
                         std::span<const SplitStep> steps, unsigned base_width) {
    if (steps.empty()) {
        return mul_schoolbook(a.with_width(width), b.with_width(width));
    }
    const auto rest = steps.subspan(1);
    if (steps.front() == SplitStep::karatsuba2) {
        const std::size_t n = width / 2;
        const auto [a1, a0] = split2(a, n);
        const auto [b1, b0] = split2(b, n);
        const Gf2Poly p0 = mul_strategy_rec(a0, b0, n, rest, base_width);
        const Gf2Poly p1 = mul_strategy_rec(a1, b1, n, rest, base_width);
        const Gf2Poly p01 = mul_strategy_rec(a0 ^ a1, b0 ^ b1, n, rest, base_width);
        return combine2(p0, p1, p01, n);
    }
    const std::size_t t = width / 3;
    const Gf2Poly a0 = extract(a, t - 1, 0);
    const Gf2Poly a1 = extract(a, 2 * t - 1, t);
    const Gf2Poly a2 = extract(a, 3 * t - 1, 2 * t);
    const Gf2Poly b0 = extract(b, t - 1, 0);
    const Gf2Poly b1 = extract(b, 2 * t - 1, t);
    const Gf2Poly b2 = extract(b, 3 * t - 1, 2 * t);
    const Gf2Poly d0 = mul_strategy_rec(a0, b0, t, rest, base_width);
    const Gf2Poly d1 = mul_strategy_rec(a1, b1, t, rest, base_width);
    const Gf2Poly d2 = mul_strategy_rec(a2, b2, t, rest, base_width);
    const Gf2Poly d01 = mul_strategy_rec(a0 ^ a1, b0 ^ b1, t, rest, base_width);
    const Gf2Poly d02 = mul_strategy_rec(a0 ^ a2, b0 ^ b2, t, rest, base_width);
    const Gf2Poly d12 = mul_strategy_rec(a1 ^ a2, b1 ^ b2, t, rest, base_width);
    return combine3(d0, d1, d2, d01, d02, d12, t);
}

}  // namespace

unsigned SplitStrategy::segment_count() const {
    unsigned s = 1;
    for (const SplitStep step : steps) {
        s *= step == SplitStep::karatsuba2 ? 2 : 3;
    }
    return s;
}

SplitStrategy SplitStrategy::karatsuba(unsigned segments) {
    switch (segments) {
        case 2: return karatsuba(2, 128);
        case 4: return karatsuba(4, 64);
        case 8: return karatsuba(8, 32);
        default:
            throw std::invalid_argument("SplitStrategy::karatsuba: segments must be 2, 4 or 8");
    }
}

SplitStrategy SplitStrategy::karatsuba(unsigned segments, unsigned base_width) {
    SplitStrategy strategy;
    strategy.base_width = base_width;
    for (unsigned s = segments; s > 1; s /= 2) {
        if (s % 2 != 0) {
            throw std::invalid_argument("SplitStrategy::karatsuba: segments must be a power of 2");
        }
        strategy.steps.push_back(SplitStep::karatsuba2);
    }
    return strategy;
}

SplitStrategy SplitStrategy::bailey(unsigned segments) {
    switch (segments) {
        case 3: return bailey(3, 81);
        case 6: return bailey(6, 39);
        case 9: return bailey(9, 27);
        default:
            throw std::invalid_argument("SplitStrategy::bailey: segments must be 3, 6 or 9");
    }
}

SplitStrategy SplitStrategy::bailey(unsigned segments, unsigned base_width) {
    SplitStrategy strategy;
    strategy.base_width = base_width;
    switch (segments) {
        case 3:
            strategy.steps = {SplitStep::bailey3};
            break;
        case 6:
            strategy.steps = {SplitStep::karatsuba2, SplitStep::bailey3};
            break;
        case 9:
            strategy.steps = {SplitStep::bailey3, SplitStep::bailey3};
            break;
        default:
            throw std::invalid_argument("SplitStrategy::bailey: segments must be 3, 6 or 9");
    }
    return strategy;
}

SplitHalves split2(const Gf2Poly& a, std::size_t n) {
    if (a.degree() >= static_cast<int>(2 * n)) {
        throw std::invalid_argument("split2: operand does not fit in " + std::to_string(2 * n) +
                                    " bits");
    }
    return {extract(a, 2 * n - 1, n), extract(a, n - 1, 0)};
}

Gf2Poly mul_karatsuba2(const Gf2Poly& a, const Gf2Poly& b, unsigned base_width) {
    if (base_width == 0) throw std::invalid_argument("mul_karatsuba2: base_width must be >= 1");
    if (a.is_zero() || b.is_zero()) return Gf2Poly(product_width(a, b));
    std::size_t width = base_width;
    const std::size_t need = std::max(a.nominal_width(), b.nominal_width());
    while (width < need) width *= 2;
    return mul_k2_rec(a, b, width, base_width).with_width(product_width(a, b));
}

Gf2Poly mul_bailey3(const Gf2Poly& a, const Gf2Poly& b, unsigned base_width) {
    if (base_width == 0) throw std::invalid_argument("mul_bailey3: base_width must be >= 1");
    if (a.is_zero() || b.is_zero()) return Gf2Poly(product_width(a, b));
    std::size_t width = base_width;
    const std::size_t need = std::max(a.nominal_width(), b.nominal_width());
    while (width < need) width *= 3;
    return mul_b3_rec(a, b, width, base_width).with_width(product_width(a, b));
}

Gf2Poly mul_recursive(const Gf2Poly& a, const Gf2Poly& b, const SplitStrategy& strategy) {
    const std::size_t width = strategy.operand_width();
    if (effective_width(a) > width || effective_width(b) > width) {
        throw std::invalid_argument("mul_recursive: operand wider than " + std::to_string(width) +
                                    " bits");
    }
    const Gf2Poly product = mul_strategy_rec(a, b, width, strategy.steps, strategy.base_width);
    return product.with_width(std::max(product_width(a, b),
                                       static_cast<std::size_t>(product.degree() + 1)));
}

std::uint64_t recursive_mult_count(const SplitStrategy& strategy) {
    std::uint64_t count = 1;
    for (const SplitStep step : strategy.steps) {
        count *= step == SplitStep::karatsuba2 ? 3 : 6;
    }
    return count;
}

}  // namespace ikmul
