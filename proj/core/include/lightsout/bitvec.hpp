#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lightsout {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bit i lives in word i / 64 at position i % 64. Storage bits at logical
/// positions >= size() are always zero, so word-wise equality, popcount and
/// dot products never need masking.
class BitVec {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), words_(word_count(n), 0) {}

    static BitVec zeros(std::size_t n) { return BitVec(n); }
    static BitVec ones(std::size_t n);
    static BitVec unit(std::size_t n, std::size_t i);

    /// Parses a string of '0'/'1' characters; index 0 is the first character.
    /// Throws ValidationError on any other character.
    static BitVec from_string(std::string_view bits);

    /// Builds a vector of length n with the given positions set.
    /// Throws ValidationError on an index >= n.
    static BitVec from_indices(std::size_t n, std::span<const std::size_t> indices);

    static constexpr std::size_t word_count(std::size_t n) noexcept {
        return (n + word_bits - 1) / word_bits;
    }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    void set(std::size_t i, bool value = true) noexcept {
        const word_type mask = word_type{1} << (i % word_bits);
        if (value)
            words_[i / word_bits] |= mask;
        else
            words_[i / word_bits] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }
    [[nodiscard]] bool operator[](std::size_t i) const noexcept { return get(i); }

    /// Bounds-checked read; throws DimensionError.
    [[nodiscard]] bool at(std::size_t i) const;

    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] bool none() const noexcept;
    [[nodiscard]] bool any() const noexcept { return !none(); }

    /// Set positions in increasing order.
    [[nodiscard]] std::vector<std::size_t> indices() const;

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }
    [[nodiscard]] std::span<word_type> words() noexcept { return words_; }

    /// In-place XOR. Throws DimensionError on length mismatch.
    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);

    /// XOR of words [first_word, end) of other into this, no size check.
    /// Used by elimination kernels that know both rows share a width.
    void xor_from_word(const BitVec& other, std::size_t first_word) noexcept {
        for (std::size_t w = first_word; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    /// Lexicographic order on the '0'/'1' string form (bit 0 most significant).
    /// Both operands must have equal length.
    [[nodiscard]] bool lex_less(const BitVec& other) const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

[[nodiscard]] BitVec operator^(BitVec lhs, const BitVec& rhs);
[[nodiscard]] BitVec operator&(BitVec lhs, const BitVec& rhs);

/// Inner product over GF(2): parity of the positions set in both x and y.
/// Throws DimensionError when lengths differ.
[[nodiscard]] bool bv_dot(const BitVec& x, const BitVec& y);

}  // namespace lightsout
