#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ewi {

/// Fixed-length, word-packed bit set. All cardinalities go through popcount.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
    bool test(std::size_t i) const { return words_[i / kWordBits] >> (i % kWordBits) & 1; }
    std::span<const Word> words() const { return words_; }
    // Callers writing whole words must keep the bits past size() clear.
    std::span<Word> words() { return words_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<Word> words_;
};

/// |a AND b|; both operands must have the same length.
inline std::size_t intersection_count(const BitVector& a, const BitVector& b) {
    const auto wa = a.words(), wb = b.words();
    std::size_t c = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    return c;
}

/// |a XOR b|; both operands must have the same length.
inline std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
    const auto wa = a.words(), wb = b.words();
    std::size_t c = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
    return c;
}

/// In-place transpose of a 64x64 bit matrix: bit c of row r moves to bit r of
/// row c.
inline void transpose64(std::array<std::uint64_t, 64>& a) {
    std::uint64_t mask = 0x00000000FFFFFFFFull;
    for (unsigned j = 32; j != 0; j >>= 1, mask ^= mask << j) {
        for (unsigned k = 0; k < 64; k = ((k | j) + 1) & ~j) {
            const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & mask;
            a[k] ^= t << j;
            a[k | j] ^= t;
        }
    }
}

} // namespace ewi
