#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qldpc {

// Fixed-length bit vector over GF(2), packed 64 bits per word.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVec from_bits(const std::vector<int>& bits) {
        BitVec v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) v.set(i);
        return v;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void clear(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    void assign(std::size_t i, bool v) { v ? set(i) : clear(i); }
    void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

    void reset() { std::fill(words_.begin(), words_.end(), 0); }

    BitVec& operator^=(const BitVec& o) {
        if (o.n_ != n_) throw std::invalid_argument("BitVec xor: length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    std::size_t weight() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Parity of the AND with another vector, i.e. the GF(2) dot product.
    std::uint8_t dot(const BitVec& o) const {
        if (o.n_ != n_) throw std::invalid_argument("BitVec dot: length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) idx.push_back(i);
        return idx;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace qldpc
