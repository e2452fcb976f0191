#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "covertop/base.hpp"
#include "covertop/subset.hpp"

namespace covertop {

//! A relation r between a source base S and a target base T, stored as the
//! preimage r^-b of every target element b.
class Relation {
 public:
  Relation(Base source, Base target);

  static Relation from_pairs(Base source, Base target,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  //! `preimages[b]` is r^-b.
  static Relation from_preimages(Base source, Base target, std::vector<Subset> preimages);
  static Relation identity(const Base& base);

  const Base& source() const noexcept { return source_; }
  const Base& target() const noexcept { return target_; }

  void relate(std::size_t a, std::size_t b);
  bool related(std::size_t a, std::size_t b) const;
  const Subset& preimage(std::size_t b) const;
  //! r^-V = {a | a r b for some b in V}.
  Subset rminus(const Subset& v) const;
  Relation transpose() const;
  //! All related pairs, ordered by source then target index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  Base source_;
  Base target_;
  std::vector<Subset> preimages_;
};

Subset rminus(const Relation& r, const Subset& v);
//! r then s: for r between S and T and s between T and W, relates a to c
//! when a r b and b s c for some b. Its preimage map is r^- after s^-.
Relation compose(const Relation& r, const Relation& s);
Relation identity(const Base& base);

}  // namespace covertop
