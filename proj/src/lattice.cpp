#include "covertop/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "covertop/errors.hpp"
#include "covertop/limits.hpp"

namespace covertop {

SatLattice::SatLattice(Cover cover, std::vector<Subset> points)
    : cover_(std::move(cover)), points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

SatLattice SatLattice::of(const Cover& cover) {
  caps::require(cover.base().size(), caps::lattice, "saturation lattice");
  std::set<Subset> unique;
  for_each_subset(cover.base(), [&](const Subset& u) { unique.insert(cover.saturate(u)); });
  return SatLattice(cover, std::vector<Subset>(unique.begin(), unique.end()));
}

std::size_t SatLattice::index_of(const Subset& point) const {
  auto it = index_.find(point);
  if (it == index_.end()) throw InputError(point.to_string() + " is not saturated");
  return it->second;
}

std::size_t SatLattice::join(std::size_t p, std::size_t q) const {
  return index_of(cover_.saturate(points_.at(p) | points_.at(q)));
}

std::size_t SatLattice::meet(std::size_t p, std::size_t q) const {
  return index_of(points_.at(p) & points_.at(q));
}

std::size_t SatLattice::bottom() const { return index_of(cover_.saturate(Subset(cover_.base()))); }

std::size_t SatLattice::top() const { return index_of(Subset::full(cover_.base())); }

bool SatLattice::leq(std::size_t p, std::size_t q) const {
  return points_.at(p).is_subset_of(points_.at(q));
}

std::vector<std::pair<std::size_t, std::size_t>> SatLattice::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < size(); ++p) {
    for (std::size_t q = 0; q < size(); ++q) {
      if (p == q || !leq(p, q)) continue;
      bool covering = true;
      for (std::size_t r = 0; r < size() && covering; ++r) {
        if (r != p && r != q && leq(p, r) && leq(r, q)) covering = false;
      }
      if (covering) edges.emplace_back(p, q);
    }
  }
  return edges;
}

std::string stable_node_name(const Subset& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : s.words()) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (w >> (8 * byte)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "n%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string SatLattice::to_dot() const {
  std::string out = "digraph sat {\n  rankdir=BT;\n";
  for (const auto& p : points_) {
    out += "  " + stable_node_name(p) + " [label=\"" + p.to_string() + "\"];\n";
  }
  for (auto [p, q] : hasse_edges()) {
    out += "  " + stable_node_name(points_[p]) + " -> " + stable_node_name(points_[q]) + ";\n";
  }
  out += "}\n";
  return out;
}

SatLattice sat_lattice(const Cover& cover) { return SatLattice::of(cover); }

}  // namespace covertop
