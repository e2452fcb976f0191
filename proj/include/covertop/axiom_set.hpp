#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "covertop/base.hpp"
#include "covertop/subset.hpp"

namespace covertop {

//! Where an axiom came from. The tag and its coordinates identify an axiom
//! uniquely among the axioms of one element.
enum class AxiomTag {
  user,            // (ordinal)
  commutativity,   // (b, c): a in delta(b,c) covered by c o b
  associativity,   // (b, c, d): a in (b o c) o d covered by b o (c o d)
  unit,            // (a): a covered by a o I
  unit_inverse,    // (a): x in a o I covered by {a}
  localization,    // (b, j, c): a in delta(b,c) covered by D(b,j) o c
  weakening,       // (b, c): a in delta(b,c) covered by {c}
  contraction,     // (): a covered by a o a
  tensor_left,     // (j): (a,b) covered by C(a,j) x {b}
  tensor_right,    // (j): (a,b) covered by {a} x D(b,j)
  list_generator,  // (j): [a] covered by {[u] | u in C(a,j)}
  list_commutativity,  // (l, k): l.k covered by {k.l}
};

const char* tag_name(AxiomTag tag);

struct AxiomId {
  AxiomTag tag = AxiomTag::user;
  std::vector<std::size_t> coords;
  //! Human-readable form, fixed when the axiom is created.
  std::string label;

  friend bool operator==(const AxiomId& a, const AxiomId& b) {
    return a.tag == b.tag && a.coords == b.coords;
  }
  friend std::strong_ordering operator<=>(const AxiomId& a, const AxiomId& b) {
    if (auto c = a.tag <=> b.tag; c != 0) return c;
    return a.coords <=> b.coords;
  }
};

struct Axiom {
  AxiomId id;
  Subset cover;
  friend bool operator==(const Axiom& a, const Axiom& b) {
    return a.id == b.id && a.cover == b.cover;
  }
};

//! The families I(a) and C(a, i): for each element, an ordered list of
//! (id, cover) pairs. Duplicate covers under different ids are kept.
class AxiomSet {
 public:
  explicit AxiomSet(Base base);

  const Base& base() const noexcept { return base_; }
  //! Adds C(element, id) = cover. Throws InvariantError on a repeated id.
  void add(std::size_t element, AxiomId id, Subset cover);
  const std::vector<Axiom>& of(std::size_t element) const;
  const Axiom* find(std::size_t element, const AxiomId& id) const;
  std::size_t size() const noexcept { return total_; }

  //! Appends every axiom of `other` (same base).
  void merge(const AxiomSet& other);

  friend bool operator==(const AxiomSet& a, const AxiomSet& b);

 private:
  Base base_;
  std::vector<std::vector<Axiom>> axioms_;
  std::vector<std::set<std::pair<AxiomTag, std::vector<std::size_t>>>> ids_;
  std::size_t total_ = 0;
};

//! User axioms from (element, cover) pairs. Ids are ax1, ax2, ... counted per
//! element in input order.
AxiomSet make_axiom_set(const Base& base,
                        const std::vector<std::pair<std::size_t, Subset>>& entries);

AxiomId make_id(AxiomTag tag, std::vector<std::size_t> coords, std::string label);

//! The labels of one element's axioms, with repeats renamed "label#2",
//! "label#3", ... so that they are pairwise distinct.
std::vector<std::string> distinct_labels(const std::vector<Axiom>& family);

}  // namespace covertop
