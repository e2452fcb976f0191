#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "covertop/cover.hpp"

namespace covertop {

//! The complete lattice of saturated subsets of a small cover. Join is
//! saturate(P u Q) and meet is P n Q. Points are kept in canonical order.
class SatLattice {
 public:
  //! Enumerates all subsets; capped by caps::lattice.
  static SatLattice of(const Cover& cover);

  const std::vector<Subset>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  //! Index of a saturated subset; throws InputError otherwise.
  std::size_t index_of(const Subset& point) const;
  std::size_t join(std::size_t p, std::size_t q) const;
  std::size_t meet(std::size_t p, std::size_t q) const;
  std::size_t bottom() const;
  std::size_t top() const;
  bool leq(std::size_t p, std::size_t q) const;
  //! Covering pairs (p, q): p < q with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  //! Graphviz rendering of the Hasse diagram. Node names are stable hashes
  //! of the point masks.
  std::string to_dot() const;

 private:
  SatLattice(Cover cover, std::vector<Subset> points);
  Cover cover_;
  std::vector<Subset> points_;
  std::unordered_map<Subset, std::size_t> index_;
};

SatLattice sat_lattice(const Cover& cover);

//! Stable node identifier for a subset: "n" followed by a hex FNV-1a hash of
//! its mask words.
std::string stable_node_name(const Subset& s);

}  // namespace covertop
