#include "lightsout/bitvec.hpp"

#include <algorithm>
#include <string>

#include "lightsout/errors.hpp"

namespace lightsout {

namespace {

void require_same_size(const BitVec& a, const BitVec& b, const char* op) {
    if (a.size() != b.size())
        throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
}

}  // namespace

BitVec BitVec::ones(std::size_t n) {
    BitVec v(n);
    std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
    if (const auto tail = n % word_bits; tail != 0) v.words_.back() = (word_type{1} << tail) - 1;
    return v;
}

BitVec BitVec::unit(std::size_t n, std::size_t i) {
    if (i >= n) throw ValidationError("unit vector index " + std::to_string(i) + " out of range");
    BitVec v(n);
    v.set(i);
    return v;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        switch (bits[i]) {
            case '0':
                break;
            case '1':
                v.set(i);
                break;
            default:
                throw ValidationError("bit string contains '" + std::string(1, bits[i]) +
                                      "' at position " + std::to_string(i));
        }
    }
    return v;
}

BitVec BitVec::from_indices(std::size_t n, std::span<const std::size_t> indices) {
    BitVec v(n);
    for (auto i : indices) {
        if (i >= n)
            throw ValidationError("index " + std::to_string(i) + " out of range for length " +
                                  std::to_string(n));
        v.set(i);
    }
    return v;
}

bool BitVec::at(std::size_t i) const {
    if (i >= size_)
        throw DimensionError("bit index " + std::to_string(i) + " out of range for length " +
                             std::to_string(size_));
    return get(i);
}

std::size_t BitVec::weight() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVec::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

std::vector<std::size_t> BitVec::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        for (word_type bits = words_[w]; bits != 0; bits &= bits - 1)
            out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
    }
    return out;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    require_same_size(*this, other, "xor");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    require_same_size(*this, other, "and");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

bool BitVec::lex_less(const BitVec& other) const {
    require_same_size(*this, other, "lex_less");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const word_type diff = words_[w] ^ other.words_[w];
        if (diff == 0) continue;
        // Lowest differing index decides; the side holding 0 there is smaller.
        const word_type lowest = diff & (~diff + 1);
        return (words_[w] & lowest) == 0;
    }
    return false;
}

BitVec operator^(BitVec lhs, const BitVec& rhs) {
    lhs ^= rhs;
    return lhs;
}

BitVec operator&(BitVec lhs, const BitVec& rhs) {
    lhs &= rhs;
    return lhs;
}

bool bv_dot(const BitVec& x, const BitVec& y) {
    require_same_size(x, y, "bv_dot");
    const auto xw = x.words();
    const auto yw = y.words();
    BitVec::word_type acc = 0;
    for (std::size_t w = 0; w < xw.size(); ++w) acc ^= xw[w] & yw[w];
    return std::popcount(acc) & 1;
}

}  // namespace lightsout
