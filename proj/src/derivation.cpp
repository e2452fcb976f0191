#include "covertop/derivation.hpp"

#include <algorithm>
#include <unordered_map>

#include "covertop/errors.hpp"

namespace covertop {

std::size_t DerivationTree::height() const {
  std::size_t h = 0;
  for (const auto& child : children) h = std::max(h, child.height());
  return rule == Rule::infinity ? h + 1 : 0;
}

namespace {

class Search {
 public:
  Search(const AxiomSet& axioms, const Subset& goal)
      : axioms_(axioms), goal_(goal), failed_at_(axioms.base().size(), 0),
        has_failed_(axioms.base().size(), false) {}

  std::optional<DerivationTree> derive(std::size_t x, std::size_t budget) {
    if (goal_.contains(x)) return DerivationTree{x, DerivationTree::Rule::reflexivity, {}, {}};
    if (auto it = found_.find(x); it != found_.end() && it->second.height() <= budget) {
      return it->second;
    }
    if (budget == 0 || (has_failed_[x] && failed_at_[x] >= budget)) return std::nullopt;
    for (const auto& ax : axioms_.of(x)) {
      if (ax.cover.contains(x)) continue;  // never shortens a proof
      DerivationTree node{x, DerivationTree::Rule::infinity, ax.id, {}};
      bool ok = true;
      for (std::size_t y : ax.cover.elements()) {
        auto child = derive(y, budget - 1);
        if (!child) {
          ok = false;
          break;
        }
        node.children.push_back(std::move(*child));
      }
      if (ok) {
        found_.insert_or_assign(x, node);
        return node;
      }
    }
    has_failed_[x] = true;
    failed_at_[x] = std::max(failed_at_[x], budget);
    return std::nullopt;
  }

 private:
  const AxiomSet& axioms_;
  const Subset& goal_;
  std::vector<std::size_t> failed_at_;
  std::vector<bool> has_failed_;
  std::unordered_map<std::size_t, DerivationTree> found_;
};

void render_into(const DerivationTree& t, const Base& base, std::size_t indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += base.name(t.element);
  if (t.rule == DerivationTree::Rule::reflexivity) {
    out += "  [reflexivity]\n";
  } else {
    out += "  [infinity " + t.axiom->label + "]\n";
  }
  for (const auto& c : t.children) render_into(c, base, indent + 1, out);
}

}  // namespace

std::optional<DerivationTree> bounded_derive(const AxiomSet& axioms, std::size_t element,
                                             const Subset& goal, std::size_t depth) {
  if (!(goal.base() == axioms.base())) throw BaseMismatch("goal over a different base");
  if (element >= axioms.base().size()) throw InputError("element index out of range");
  Search search(axioms, goal);
  for (std::size_t budget = 0; budget <= depth; ++budget) {
    if (auto tree = search.derive(element, budget)) return tree;
  }
  return std::nullopt;
}

bool validate_derivation(const AxiomSet& axioms, const DerivationTree& tree, const Subset& goal) {
  if (tree.element >= axioms.base().size()) return false;
  if (tree.rule == DerivationTree::Rule::reflexivity) {
    return tree.children.empty() && goal.contains(tree.element);
  }
  if (!tree.axiom) return false;
  const Axiom* ax = axioms.find(tree.element, *tree.axiom);
  if (ax == nullptr) return false;
  const auto members = ax->cover.elements();
  if (members.size() != tree.children.size()) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (tree.children[i].element != members[i]) return false;
    if (!validate_derivation(axioms, tree.children[i], goal)) return false;
  }
  return true;
}

std::string render(const DerivationTree& tree, const Base& base) {
  std::string out;
  render_into(tree, base, 0, out);
  return out;
}

}  // namespace covertop
