#pragma once

#include "covertop/cover.hpp"
#include "covertop/generation.hpp"
#include "covertop/laws.hpp"
#include "covertop/relation.hpp"

namespace covertop {

enum class MapMethod {
  axioms,      // r^-b <| r^-C(b,i) for every axiom of the generated target
  exhaustive,  // b <|T V implies r^-b <|S r^-V, for every V within T
};

//! Is r a basic cover map from `source` to `target`?
LawReport is_basic_cover_map(const Relation& r, const Cover& source, const GeneratedCover& target,
                             MapMethod method = MapMethod::axioms);
//! Exhaustive check for a black-box target. Runs over the subsets of the
//! target, or over the saturated subsets W of the source (checking that
//! {b | r^-b within W} is saturated) when the source is smaller. The smaller
//! base is capped by caps::exhaustive_map.
LawReport is_basic_cover_map(const Relation& r, const Cover& source, const Cover& target);

//! Basic cover map with r^-(b1 o b2) =A r^-b1 o r^-b2 for all b1, b2.
LawReport is_convergent_map(const Relation& r, const OpCover& source, const OpCover& target);
LawReport is_convergent_map(const Relation& r, const OpCover& source,
                            const ConvergentCover& target);
//! Convergent, and r^-I_T =A I_S. Both sides need a unit.
LawReport is_unital_map(const Relation& r, const OpCover& source, const OpCover& target);
LawReport is_unital_map(const Relation& r, const OpCover& source, const ConvergentCover& target);
//! Convergent and total: r^-T =A S.
LawReport is_formal_map(const Relation& r, const OpCover& source, const OpCover& target);
LawReport is_formal_map(const Relation& r, const OpCover& source, const ConvergentCover& target);

//! The three conditions for a unital convergent (or formal) map into a cover
//! generated from user axioms and an element table:
//!  r^-a <| r^-C(a,i) for the user axioms only, r^-delta(a,b) =A r^-a o r^-b,
//!  and r^-I_T =A I_S (the whole base for formal covers without a unit).
LawReport check_generated_target_conditions(const Relation& r, const OpCover& source,
                                            const ConvergentCover& target);

//! sat(r1^-b) = sat(r2^-b) for every target element b.
LawReport maps_equal(const Relation& r1, const Relation& r2, const Cover& source);

}  // namespace covertop
