#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kjdt {

// Subset of a fixed universe {0, ..., n-1}, packed into 64-bit words.
// Indices refer to positions in a poset's canonical element order.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  // smallest member, -1 when empty
  int first() const {
    for (int wi = 0; wi < (int)w_.size(); ++wi)
      if (w_[wi]) return wi * 64 + __builtin_ctzll(w_[wi]);
    return -1;
  }

  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // set difference
  Bits& subtract(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool contains(const Bits& o) const {  // o subset of *this
    for (size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & w_[i]) return true;
    return false;
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Bits& a, const Bits& b) { return !(a == b); }

  // Canonical order for listings of ideals and shapes: by cardinality, then
  // lexicographically by the ascending member sequence.
  friend bool operator<(const Bits& a, const Bits& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (size_t i = 0; i < a.w_.size(); ++i) {
      std::uint64_t diff = a.w_[i] ^ b.w_[i];
      if (diff) {
        // the side owning the lowest differing index has the smaller member
        std::uint64_t low = diff & ~(diff - 1);
        return a.w_[i] & low;
      }
    }
    return false;
  }

  template <class F>
  void for_each(F f) const {  // ascending indices
    for (int wi = 0; wi < (int)w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(wi * 64 + __builtin_ctzll(w));
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
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline Bits operator|(Bits a, const Bits& b) { return a |= b; }
inline Bits operator&(Bits a, const Bits& b) { return a &= b; }
inline Bits difference(Bits a, const Bits& b) { return a.subtract(b); }

}  // namespace kjdt
