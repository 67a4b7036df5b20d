#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordconv {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Subset of a carrier {0, ..., n-1}, n <= 64, stored as a bitmask.
class Subset {
 public:
  constexpr Subset() = default;
  explicit constexpr Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset none() { return Subset(0); }
  static constexpr Subset single(int i) { return Subset(std::uint64_t{1} << i); }
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool test(int i) const { return (bits_ >> i) & 1u; }
  constexpr Subset with(int i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  /// Least member; undefined on the empty set.
  constexpr int min_element() const { return std::countr_zero(bits_); }
  constexpr int max_element() const { return 63 - std::countl_zero(bits_); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  Subset& operator|=(Subset b) { bits_ |= b.bits_; return *this; }
  Subset& operator&=(Subset b) { bits_ &= b.bits_; return *this; }
  Subset& operator-=(Subset b) { bits_ &= ~b.bits_; return *this; }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(Subset a, Subset b) { return a.bits_ < b.bits_; }

  class MemberIter {
   public:
    explicit constexpr MemberIter(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    MemberIter& operator++() { rest_ &= rest_ - 1; return *this; }
    friend bool operator!=(MemberIter a, MemberIter b) { return a.rest_ != b.rest_; }
   private:
    std::uint64_t rest_;
  };

  struct MemberRange {
    std::uint64_t bits;
    MemberIter begin() const { return MemberIter(bits); }
    MemberIter end() const { return MemberIter(0); }
  };

  /// Range over the member indices, ascending.
  constexpr MemberRange members() const { return MemberRange{bits_}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Enumerates all submasks of a set, descending from the set itself to the
/// empty set; the classic (b - 1) & a walk.
template <typename F>
inline void for_each_submask(Subset a, F&& f) {
  std::uint64_t m = a.bits();
  for (std::uint64_t b = m;; b = (b - 1) & m) {
    f(Subset(b));
    if (b == 0) break;
  }
}

}  // namespace ordconv
