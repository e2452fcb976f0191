#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "covertop/axiom_set.hpp"
#include "covertop/subset.hpp"

namespace covertop {

inline constexpr std::size_t default_derivation_depth = 6;

//! A proof of element <| goal built from reflexivity (element in goal) and
//! infinity (every member of some C(element, i) is derivable).
struct DerivationTree {
  enum class Rule { reflexivity, infinity };

  std::size_t element = 0;
  Rule rule = Rule::reflexivity;
  std::optional<AxiomId> axiom;  // infinity nodes only
  std::vector<DerivationTree> children;

  //! Number of infinity steps on the longest branch.
  std::size_t height() const;
};

//! Searches for a derivation of element <| goal using at most `depth`
//! infinity steps on any branch. Returns a tree of least height; within a
//! height, reflexivity is tried first, then axioms in the order they were
//! added. Axioms whose cover contains the element itself are never used.
std::optional<DerivationTree> bounded_derive(const AxiomSet& axioms, std::size_t element,
                                             const Subset& goal,
                                             std::size_t depth = default_derivation_depth);

//! Re-checks every step of a tree against the axioms.
bool validate_derivation(const AxiomSet& axioms, const DerivationTree& tree, const Subset& goal);

//! Indented text rendering, one node per line.
std::string render(const DerivationTree& tree, const Base& base);

}  // namespace covertop
