#include "covertop/axiom_set.hpp"

#include <unordered_set>

#include "covertop/errors.hpp"

namespace covertop {

const char* tag_name(AxiomTag tag) {
  switch (tag) {
    case AxiomTag::user: return "user";
    case AxiomTag::commutativity: return "comm";
    case AxiomTag::associativity: return "assoc";
    case AxiomTag::unit: return "unit";
    case AxiomTag::unit_inverse: return "unit-inv";
    case AxiomTag::localization: return "locax";
    case AxiomTag::weakening: return "weak";
    case AxiomTag::contraction: return "contr";
    case AxiomTag::tensor_left: return "tensor-left";
    case AxiomTag::tensor_right: return "tensor-right";
    case AxiomTag::list_generator: return "gen";
    case AxiomTag::list_commutativity: return "list-comm";
  }
  return "?";
}

AxiomId make_id(AxiomTag tag, std::vector<std::size_t> coords, std::string label) {
  return AxiomId{tag, std::move(coords), std::move(label)};
}

AxiomSet::AxiomSet(Base base)
    : base_(std::move(base)), axioms_(base_.size()), ids_(base_.size()) {}

void AxiomSet::add(std::size_t element, AxiomId id, Subset cover) {
  if (element >= base_.size()) throw InputError("axiom element out of range");
  if (!(cover.base() == base_)) throw BaseMismatch("axiom cover over a different base");
  if (!ids_[element].emplace(id.tag, id.coords).second) {
    throw InvariantError("repeated axiom id " + id.label + " for " + base_.name(element));
  }
  axioms_[element].push_back(Axiom{std::move(id), std::move(cover)});
  ++total_;
}

const std::vector<Axiom>& AxiomSet::of(std::size_t element) const {
  if (element >= base_.size()) throw InputError("element index out of range");
  return axioms_[element];
}

const Axiom* AxiomSet::find(std::size_t element, const AxiomId& id) const {
  for (const auto& ax : of(element)) {
    if (ax.id == id) return &ax;
  }
  return nullptr;
}

void AxiomSet::merge(const AxiomSet& other) {
  if (!(other.base_ == base_)) throw BaseMismatch("merging axiom sets over different bases");
  for (std::size_t a = 0; a < base_.size(); ++a) {
    for (const auto& ax : other.axioms_[a]) add(a, ax.id, ax.cover);
  }
}

bool operator==(const AxiomSet& a, const AxiomSet& b) {
  return a.base_ == b.base_ && a.axioms_ == b.axioms_;
}

AxiomSet make_axiom_set(const Base& base,
                        const std::vector<std::pair<std::size_t, Subset>>& entries) {
  AxiomSet out(base);
  std::vector<std::size_t> ordinal(base.size(), 0);
  for (const auto& [element, cover] : entries) {
    if (element >= base.size()) throw InputError("axiom element out of range");
    const std::size_t k = ++ordinal[element];
    out.add(element, make_id(AxiomTag::user, {k}, "ax" + std::to_string(k)), cover);
  }
  return out;
}

std::vector<std::string> distinct_labels(const std::vector<Axiom>& family) {
  std::unordered_set<std::string> seen;
  for (const auto& ax : family) seen.insert(ax.id.label);
  std::unordered_set<std::string> used;
  std::vector<std::string> out;
  out.reserve(family.size());
  for (const auto& ax : family) {
    std::string label = ax.id.label;
    for (std::size_t k = 1; used.contains(label) || (k > 1 && seen.contains(label));) {
      label = ax.id.label + "#" + std::to_string(++k);
    }
    used.insert(label);
    out.push_back(std::move(label));
  }
  return out;
}

}  // namespace covertop
