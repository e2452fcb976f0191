#pragma once

#include <optional>
#include <vector>

#include "covertop/axiom_set.hpp"
#include "covertop/generation.hpp"
#include "covertop/subset.hpp"
#include "covertop/subset_op.hpp"

namespace covertop {

//! Naive round-based saturation: repeatedly add every head whose cover is
//! already included, until nothing changes.
Subset oracle_saturate(const AxiomSet& axioms, const Subset& u);

//! The saturation of every subset of a small base (indexed by mask).
struct ClosureTable {
  Base base;
  std::vector<Subset> table;

  const Subset& saturate(const Subset& u) const { return table.at(u.mask()); }
};

//! The least cover satisfying the user axioms and the subset-level laws of
//! the mode, computed as a least fixed point over the whole powerset:
//! transitivity, stability (U <| V implies U o W <| V o W), associativity and
//! commutativity up to the cover, the unit laws when a unit is supplied, and
//! for formal mode U o V <| U, U o V <| V and U <| U o U.
//! Never looks at the generated axioms. Capped by caps::semantic_oracle.
ClosureTable semantic_closure_oracle(const AxiomSet& user, const SubsetOp& op,
                                     const std::optional<Subset>& unit, Mode mode);

}  // namespace covertop
