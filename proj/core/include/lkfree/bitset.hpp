#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lkfree {

// Fixed-length bit array backed by 64-bit words. Used for hypergraph edge
// sets (indexed by colex rank) and for forbidden-count lists.
//
// Ordering: operator< compares the bit pattern as an unsigned integer with
// bit 0 least significant. Canonical forms are minima under this order.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::uint64_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::uint64_t size() const { return nbits_; }

  bool test(std::uint64_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::uint64_t i, bool value = true) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void reset(std::uint64_t i) { set(i, false); }

  void flip(std::uint64_t i) {
    check_index(i);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::uint64_t count() const {
    std::uint64_t total = 0;
    for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
  }

  bool any() const {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }

  bool none() const { return !any(); }

  // Complement within the declared length; bits beyond nbits_ stay zero.
  void flip_all() {
    for (auto& w : words_) w = ~w;
    mask_tail();
  }

  Bitset& operator&=(const Bitset& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  Bitset& operator^=(const Bitset& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
  }

  // Calls fn(index) for every set bit, in increasing index order.
  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        const int b = std::countr_zero(w);
        fn(static_cast<std::uint64_t>(wi) * 64 + static_cast<std::uint64_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  void check_index(std::uint64_t i) const {
    if (i >= nbits_) throw std::out_of_range("Bitset: index out of range");
  }

  void check_same(const Bitset& other) const {
    if (nbits_ != other.nbits_)
      throw std::invalid_argument("Bitset: length mismatch");
  }

  void mask_tail() {
    if (nbits_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
    }
  }

  std::uint64_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lkfree
