#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "covertop/base.hpp"
#include "covertop/subset.hpp"

namespace covertop {

enum class OpKind { table, preorder, monoid };

//! A binary operation on subsets, given by its values on pairs of elements:
//! lift(U, V) is the union of delta(a, b) over a in U and b in V.
//!
//! The preorder and monoid kinds remember their source data; their element
//! tables are delta(a, b) = {x | x <= a and x <= b} and delta(a, b) = {a*b}.
//!
//! A table may be partial only when built by from_partial_table(); undefined
//! entries stand for results that do not exist in a truncated base (list
//! concatenations past the length bound). lift() skips them and
//! lift_checked() reports that it did.
class SubsetOp {
 public:
  //! Row-major total table with base.size()^2 entries.
  static SubsetOp from_table(Base base, std::vector<Subset> entries);
  static SubsetOp from_function(Base base,
                                const std::function<Subset(std::size_t, std::size_t)>& delta);
  static SubsetOp from_partial_table(Base base, std::vector<std::optional<Subset>> entries);
  //! Pairs (a, b) mean a <= b. Reflexive pairs are added; the result must be
  //! transitive.
  static SubsetOp from_preorder(Base base,
                                const std::vector<std::pair<std::size_t, std::size_t>>& leq);
  //! Row-major product table; must be associative, and `unit` (if given) must
  //! be a two-sided unit.
  static SubsetOp from_monoid(Base base, std::vector<std::size_t> product,
                              std::optional<std::size_t> unit);

  OpKind kind() const noexcept;
  const Base& base() const noexcept;

  bool defined(std::size_t a, std::size_t b) const;
  bool is_partial() const noexcept;
  //! delta(a, b); the empty set for undefined entries.
  const Subset& at(std::size_t a, std::size_t b) const;

  Subset lift(const Subset& u, const Subset& v) const;
  Subset lift(std::size_t a, const Subset& v) const;
  Subset lift(const Subset& u, std::size_t b) const;

  struct Checked {
    Subset value;
    bool overflow = false;
  };
  Checked lift_checked(const Subset& u, const Subset& v) const;

  // Preorder kind.
  bool leq(std::size_t a, std::size_t b) const;
  // Monoid kind.
  std::size_t product(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> monoid_unit() const;

  //! Same base and same element table.
  friend bool operator==(const SubsetOp& a, const SubsetOp& b);

 private:
  struct Impl;
  explicit SubsetOp(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace covertop
