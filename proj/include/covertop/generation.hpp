#pragma once

#include <optional>

#include "covertop/axiom_set.hpp"
#include "covertop/cover.hpp"
#include "covertop/subset_op.hpp"

namespace covertop {

enum class Mode { basic, convergent, formal };

const char* mode_name(Mode mode);

//! A cover together with an operation and, optionally, a unit subset.
//! This is the common currency of the law checkers and map checks.
struct OpCover {
  Cover cover;
  SubsetOp op;
  std::optional<Subset> unit;
};

//! A cover generated from user axioms and an element table, together with the
//! data it was generated from.
struct ConvergentCover {
  Mode mode;
  AxiomSet generators;
  SubsetOp op;
  std::optional<Subset> unit;
  GeneratedCover cover;

  //! The cover with its operation and effective unit.
  OpCover view() const { return OpCover{cover.cover(), op, effective_unit()}; }
  //! The declared unit, or the whole base for formal covers without one.
  std::optional<Subset> effective_unit() const;
};

//! Adds, for every a in delta(b,c), the axioms a <| c o b (commutativity)
//! and, for a in (b o c) o d, a <| b o (c o d) (associativity).
AxiomSet extend_semigroup_axioms(const AxiomSet& user, const SubsetOp& op);

//! Adds a <| a o I for every a, and x <| {a} for every x in a o I.
AxiomSet add_unit_axioms(const AxiomSet& axioms, const SubsetOp& op, const Subset& unit);

//! Adds, for every a in delta(b,c) and every axiom j of b, a <| D(b,j) o c.
//! Only the axioms passed in are localized; the new ones are not.
AxiomSet localize(const AxiomSet& axioms, const SubsetOp& op);

//! Adds weakening a <| {c} for a in delta(b,c), and contraction a <| a o a.
AxiomSet add_frame_axioms(const AxiomSet& axioms, const SubsetOp& op);

//! Axioms of the product cover on left x right:
//! (a,b) <| C(a,i) x {b} and (a,b) <| {a} x D(b,j).
AxiomSet tensor_axioms(const AxiomSet& left, const AxiomSet& right);

//! The same axioms, labels kept, re-tagged as user axioms so that a
//! generated axiom-set can seed another generation.
AxiomSet as_user(const AxiomSet& axioms);

GeneratedCover generate_basic(AxiomSet axioms);

//! The least convergent cover containing the user axioms, with o the lift of
//! the element table. With a unit, its axioms are added before localizing.
ConvergentCover generate_convergent(const AxiomSet& user, const SubsetOp& op,
                                    std::optional<Subset> unit = std::nullopt);

//! The least formal cover containing the user axioms.
ConvergentCover generate_formal(const AxiomSet& user, const SubsetOp& op,
                                std::optional<Subset> unit = std::nullopt);

ConvergentCover generate(Mode mode, const AxiomSet& user, const SubsetOp& op,
                         std::optional<Subset> unit = std::nullopt);

}  // namespace covertop
