#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace radx {

// Subset of a fixed finite carrier, stored as machine words. All subsets in
// the library are bit vectors over canonical element indices, so they compare
// and hash cheaply and iteration order is always ascending index order.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static Bitset singleton(std::size_t universe, std::size_t i) {
    Bitset b(universe);
    b.set(i);
    return b;
  }

  static Bitset full(std::size_t universe) {
    Bitset b(universe);
    for (std::size_t i = 0; i < universe; ++i) b.set(i);
    return b;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  // Any strict total order works for canonical sorting; word-lexicographic is
  // cheap and stable.
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t k = a.w_.size(); k-- > 0;)
      if (a.w_[k] != b.w_[k]) return a.w_[k] < b.w_[k];
    return false;
  }

  // Calls fn(i) for every member in ascending order.
  template <typename Fn>
  void for_each(Fn fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        fn(k * 64 + std::size_t(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint16_t> members() const {
    std::vector<std::uint16_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(std::uint16_t(i)); });
    return out;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) s.push_back(test(i) ? '1' : '0');
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace radx
