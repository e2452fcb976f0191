#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covertop {

enum class BaseKind { atomic, product, lists, powerset };

//! A finite set of named elements with a fixed canonical order.
//!
//! Elements are addressed by their index in the canonical order:
//!  - atomic bases keep declaration order,
//!  - products are row-major over (left, right),
//!  - lists are ordered by length, then lexicographically; `[]` is index 0,
//!  - powersets are indexed by the bitmask of their atoms.
//!
//! Bases are immutable and cheap to copy.
class Base {
 public:
  //! Atomic base from distinct, non-empty names.
  static Base atomic(std::vector<std::string> names);
  static Base product(const Base& left, const Base& right);
  //! Lists over `atoms` of length at most `max_len`.
  static Base lists(const Base& atoms, std::size_t max_len);
  //! All finite subsets of `atoms`.
  static Base powerset(const Base& atoms);

  std::size_t size() const noexcept;
  BaseKind kind() const noexcept;
  const std::string& name(std::size_t index) const;
  const std::vector<std::string>& names() const noexcept;
  std::optional<std::size_t> find(std::string_view name) const;
  //! Like find(), but throws InputError for unknown names.
  std::size_t index_of(std::string_view name) const;

  // Product bases.
  const Base& left() const;
  const Base& right() const;
  std::size_t pair(std::size_t l, std::size_t r) const;
  std::pair<std::size_t, std::size_t> unpair(std::size_t index) const;

  // List and powerset bases.
  const Base& atoms() const;

  // List bases.
  std::size_t max_len() const;
  std::span<const std::size_t> list(std::size_t index) const;
  std::optional<std::size_t> list_index(std::span<const std::size_t> atoms) const;
  //! Index of the concatenation, or nullopt when it exceeds max_len().
  std::optional<std::size_t> concat(std::size_t l, std::size_t k) const;

  //! Same kind, same names in the same order, same components.
  friend bool operator==(const Base& a, const Base& b);
  bool same_object(const Base& other) const noexcept { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit Base(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const noexcept { return *impl_; }
  std::shared_ptr<const Impl> impl_;
};

}  // namespace covertop
