#include "ikmul/gf2poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ikmul {

namespace {

int bit_length(std::uint64_t value) {
    int n = 0;
    while (value != 0) {
        ++n;
        value >>= 1;
    }
    return n;
}

// dst ^= src << shift; dst must already be large enough.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::size_t shift) {
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == 0) continue;
        if (i + word_shift < dst.size()) {
            dst[i + word_shift] ^= src[i] << bit_shift;
        }
        if (bit_shift != 0 && i + word_shift + 1 < dst.size()) {
            dst[i + word_shift + 1] ^= src[i] >> (64 - bit_shift);
        }
    }
}

}  // namespace

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words, std::size_t width) {
    Gf2Poly p(width);
    words.resize(p.words_.size(), 0);
    p.words_ = std::move(words);
    p.clear_excess_bits();
    return p;
}

Gf2Poly Gf2Poly::from_word(std::uint64_t value) {
    return from_word(value, static_cast<std::size_t>(std::max(bit_length(value), 1)));
}

Gf2Poly Gf2Poly::from_word(std::uint64_t value, std::size_t width) {
    if (width < static_cast<std::size_t>(bit_length(value))) {
        throw std::invalid_argument("Gf2Poly::from_word: value does not fit in width");
    }
    Gf2Poly p(width);
    if (!p.words_.empty()) p.words_[0] = value;
    return p;
}

Gf2Poly Gf2Poly::x_pow(std::size_t k) {
    Gf2Poly p(k + 1);
    p.words_[k / 64] = std::uint64_t{1} << (k % 64);
    return p;
}

int Gf2Poly::degree() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != 0) {
            return static_cast<int>(i) * 64 + bit_length(words_[i]) - 1;
        }
    }
    return -1;
}

bool Gf2Poly::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Gf2Poly::bit(std::size_t i) const {
    if (i >= width_) return false;
    return (words_[i / 64] >> (i % 64)) & 1;
}

void Gf2Poly::set_bit(std::size_t i, bool value) {
    if (i >= width_) {
        width_ = i + 1;
        words_.resize(word_count(width_), 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

Gf2Poly Gf2Poly::with_width(std::size_t width) const {
    const int deg = degree();
    if (deg >= 0 && static_cast<std::size_t>(deg) >= width) {
        throw std::invalid_argument("Gf2Poly::with_width: width " + std::to_string(width) +
                                    " does not cover degree " + std::to_string(deg));
    }
    Gf2Poly p(width);
    const std::size_t n = std::min(p.words_.size(), words_.size());
    std::copy(words_.begin(), words_.begin() + n, p.words_.begin());
    return p;
}

void Gf2Poly::clear_excess_bits() {
    if (width_ % 64 != 0 && !words_.empty()) {
        words_.back() &= ~std::uint64_t{0} >> (64 - width_ % 64);
    }
}

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& rhs) {
    if (rhs.width_ > width_) {
        width_ = rhs.width_;
        words_.resize(word_count(width_), 0);
    }
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) {
        words_[i] ^= rhs.words_[i];
    }
    return *this;
}

Gf2Poly operator^(Gf2Poly lhs, const Gf2Poly& rhs) {
    lhs ^= rhs;
    return lhs;
}

bool operator==(const Gf2Poly& lhs, const Gf2Poly& rhs) {
    const std::size_t n = std::max(lhs.words_.size(), rhs.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = i < lhs.words_.size() ? lhs.words_[i] : 0;
        const std::uint64_t b = i < rhs.words_.size() ? rhs.words_[i] : 0;
        if (a != b) return false;
    }
    return true;
}

Gf2Poly shift_left(const Gf2Poly& p, std::size_t k) {
    const std::size_t width = p.nominal_width() + k;
    std::vector<std::uint64_t> words((width + 63) / 64, 0);
    xor_shifted(words, p.words(), k);
    return Gf2Poly::from_words(std::move(words), width);
}

Gf2Poly extract(const Gf2Poly& p, std::size_t hi, std::size_t lo) {
    if (hi < lo) {
        throw std::invalid_argument("extract: hi must be >= lo");
    }
    Gf2Poly out(hi - lo + 1);
    for (std::size_t i = lo; i <= hi && i < p.nominal_width(); ++i) {
        if (p.bit(i)) out.set_bit(i - lo);
    }
    return out;
}

Gf2Poly mul_schoolbook(const Gf2Poly& a, const Gf2Poly& b) {
    const std::size_t wa = a.nominal_width();
    const std::size_t wb = b.nominal_width();
    const std::size_t width = (wa == 0 || wb == 0) ? wa + wb : wa + wb - 1;
    std::vector<std::uint64_t> acc((width + 63) / 64, 0);
    for (std::size_t i = 0; i < wa; ++i) {
        if (a.bit(i)) xor_shifted(acc, b.words(), i);
    }
    return Gf2Poly::from_words(std::move(acc), width);
}

SchoolbookCost op_counts_schoolbook(std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("op_counts_schoolbook: n must be >= 1");
    }
    return {n * n, (n - 1) * (n - 1)};
}

Gf2Poly parse_hex(std::string_view text) {
    auto fail = [](std::size_t pos, const std::string& what) {
        throw std::invalid_argument("parse_hex: " + what + " at position " +
                                    std::to_string(pos));
    };
    if (text.size() < 2 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
        fail(0, "missing 0x prefix");
    }
    if (text.size() == 2) {
        fail(2, "missing hex digits");
    }
    const std::size_t digits = text.size() - 2;
    Gf2Poly p(digits * 4);
    for (std::size_t i = 2; i < text.size(); ++i) {
        const char c = text[i];
        int nibble = 0;
        if (c >= '0' && c <= '9') {
            nibble = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            nibble = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            nibble = c - 'A' + 10;
        } else {
            fail(i, std::string("invalid hex digit '") + c + "'");
        }
        const std::size_t shift = (text.size() - 1 - i) * 4;
        for (unsigned b = 0; b < 4; ++b) {
            if ((nibble >> b) & 1) p.set_bit(shift + b);
        }
    }
    return p;
}

std::string format_hex(const Gf2Poly& p) {
    const int deg = p.degree();
    if (deg < 0) return "0x0";
    const std::size_t digits = static_cast<std::size_t>(deg) / 4 + 1;
    std::string out = "0x";
    out.reserve(2 + digits);
    for (std::size_t d = digits; d-- > 0;) {
        int nibble = 0;
        for (unsigned b = 0; b < 4; ++b) {
            if (p.bit(d * 4 + b)) nibble |= 1 << b;
        }
        out += "0123456789abcdef"[nibble];
    }
    return out;
}

}  // namespace ikmul
