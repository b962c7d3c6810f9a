#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace macposets {

// Fixed-width bitset sized at runtime. Posets here are small (tens to a few
// hundred elements), so a couple of words per set is the common case.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  DynBitset& operator|=(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // this \ o
  DynBitset& subtract(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool subset_of(const DynBitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const DynBitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  friend bool operator==(const DynBitset& a, const DynBitset& b) {
    return a.bits_ == b.bits_ && a.words_ == b.words_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  int bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace macposets
