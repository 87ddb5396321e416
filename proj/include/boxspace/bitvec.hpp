#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace boxspace {

// Fixed-length GF(2) vector packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(int i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(int i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVec&) const = default;

  int popcount() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  int hamming(const BitVec& o) const {
    int n = 0;
    for (size_t w = 0; w < words_.size(); ++w)
      n += std::popcount(words_[w] ^ o.words_[w]);
    return n;
  }

 private:
  int bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace boxspace
