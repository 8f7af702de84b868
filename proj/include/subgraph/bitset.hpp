#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace subgraph {

// Membership bitmask over element indices 0..n-1. compare() treats the mask
// as one wide unsigned integer (highest word first); together with the order
// this gives the canonical subgroup ordering used everywhere.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((std::size_t(nbits) + 63) / 64, 0) {}

  int bit_capacity() const { return nbits_; }

  void set(int i) { words_[std::size_t(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[std::size_t(i) >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset r(a.nbits_);
    for (std::size_t k = 0; k < r.words_.size(); ++k) r.words_[k] = a.words_[k] & b.words_[k];
    return r;
  }

  friend Bitset operator|(const Bitset& a, const Bitset& b) {
    Bitset r(a.nbits_);
    for (std::size_t k = 0; k < r.words_.size(); ++k) r.words_[k] = a.words_[k] | b.words_[k];
    return r;
  }

  bool operator==(const Bitset&) const = default;

  int compare(const Bitset& o) const {
    for (std::size_t k = words_.size(); k-- > 0;) {
      if (words_[k] != o.words_[k]) return words_[k] < o.words_[k] ? -1 : 1;
    }
    return 0;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(int(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace subgraph
