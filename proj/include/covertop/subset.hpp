#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covertop/base.hpp"

namespace covertop {

//! A subset of a Base, stored as a bitmask (element i is bit i).
//!
//! The canonical order on subsets of one base is the numeric order of the
//! mask, so {} < {a} < {b} < {a,b} < ... for a base a,b,...
class Subset {
 public:
  explicit Subset(Base base);

  static Subset full(Base base);
  static Subset of(Base base, std::initializer_list<std::size_t> elements);
  static Subset of(Base base, std::span<const std::size_t> elements);
  static Subset named(Base base, std::initializer_list<std::string_view> names);
  static Subset singleton(Base base, std::size_t element);
  //! Bits beyond 64 are zero; requires mask < 2^size.
  static Subset from_mask(Base base, std::uint64_t mask);

  const Base& base() const noexcept { return base_; }
  std::size_t universe() const noexcept { return size_; }

  bool contains(std::size_t element) const;
  void insert(std::size_t element);
  void erase(std::size_t element);
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  //! Set difference.
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  Subset complement() const;

  std::vector<std::size_t> elements() const;
  std::vector<std::string> names() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  //! The mask as an integer; only valid for bases of at most 64 elements.
  std::uint64_t mask() const;
  std::size_t hash() const noexcept;

  //! "{a,b}" using the element names of the base.
  std::string to_string() const;

  friend bool operator==(const Subset& a, const Subset& b);
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  void check_same_base(const Subset& other) const;
  void check_index(std::size_t element) const;

  Base base_;
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

Subset union_of(const Subset& a, const Subset& b);
Subset intersect(const Subset& a, const Subset& b);
bool contains(const Subset& u, std::size_t element);
bool is_subset(const Subset& a, const Subset& b);

//! Visits every subset of `base` in canonical order. Capped by caps::lattice.
void for_each_subset(const Base& base, const std::function<void(const Subset&)>& f);
std::vector<Subset> all_subsets(const Base& base);

}  // namespace covertop

template <>
struct std::hash<covertop::Subset> {
  std::size_t operator()(const covertop::Subset& s) const noexcept { return s.hash(); }
};
