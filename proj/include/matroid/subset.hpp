#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "matroid/errors.hpp"

namespace matroid {

/// Largest ground set any Matroid may have. Oracles tabulate all 2^n subsets.
inline constexpr int kMaxElements = 24;

/// A set of ground-set elements stored as a bit mask (bit i <=> element i).
///
/// The natural ordering is the canonical one used everywhere in the library:
/// by cardinality first, then by the numeric value of the mask.
class Subset {
 public:
  using word_type = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(word_type bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }
  static Subset of(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }
  static Subset singleton(int e) {
    check_index(e);
    return Subset(word_type{1} << e);
  }
  /// {0, ..., n-1}
  static Subset full(int n) {
    if (n < 0 || n > kMaxElements) throw InputError("ground size out of range: " + std::to_string(n));
    return Subset(n == 32 ? ~word_type{0} : (word_type{1} << n) - 1);
  }

  constexpr word_type bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return e >= 0 && e < 32 && ((bits_ >> e) & 1u); }
  /// True iff `other` is a subset of *this.
  constexpr bool includes(Subset other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Index of the smallest element; -1 when empty.
  constexpr int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  /// True iff no element has index >= n.
  constexpr bool within(int n) const { return n >= 32 || (bits_ >> n) == 0; }

  Subset with(int e) const { return Subset(bits_ | singleton(e).bits_); }
  Subset without(int e) const { return Subset(bits_ & ~singleton(e).bits_); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;
  constexpr std::strong_ordering operator<=>(const Subset& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits_ <=> o.bits_;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  static void check_index(int e) {
    if (e < 0 || e >= kMaxElements) throw InputError("element index out of range: " + std::to_string(e));
  }

 private:
  word_type bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Subset s) { return os << s.to_string(); }

/// Calls fn(sub) for every subset of `set`, starting from the empty set.
template <class Fn>
void for_each_subset(Subset set, Fn&& fn) {
  const auto mask = set.bits();
  Subset::word_type sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace matroid
