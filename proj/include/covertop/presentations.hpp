#pragma once

#include <vector>

#include "covertop/cover.hpp"
#include "covertop/generation.hpp"
#include "covertop/laws.hpp"
#include "covertop/relation.hpp"

namespace covertop {

enum class Style {
  circ,    // an arbitrary element table
  lhd,     // the meet-like operation induced by the cover itself
  leq,     // delta(a,b) = a down<= b for a preorder
  bullet,  // delta(a,b) = {a * b} for a monoid
};

const char* style_name(Style style);

//! A formal cover in one of the presentation styles, with the checks that
//! were run while building it.
struct Presentation {
  Style style;
  OpCover cover;
  std::vector<LawReport> checks;
};

//! a <| U and a <| V imply a <| U down V, for all a, U, V.
LawReport is_lhd_formal(const Cover& cover);
//! The cover with U down V as its operation and the whole base as unit.
Presentation as_lhd(const Cover& cover);
//! The formal cover generated by the user axioms with the preorder table.
//! Checks: a <= b implies a <| {b}, and the lhd condition when small.
Presentation as_leq_formal(const AxiomSet& user, const SubsetOp& preorder);
//! The formal cover generated by the user axioms with delta(a,b) = {a*b}.
Presentation as_bullet_formal(const AxiomSet& user, const SubsetOp& monoid);

//! a <=m b iff a = b, a = l*b, a = b*r or a = l*b*r for some l, r.
SubsetOp m_preorder(const SubsetOp& monoid);

//! Every cover on a finite base is finitary.
bool is_finitary(const Cover& cover);
//! a <| U implies a <| {u} for some u in U.
LawReport is_unary(const Cover& cover);

//! The cover on finite subsets of S with union as a monoid operation:
//! r^-l = sat(a1) n ... n sat(an) (the whole base for the empty list),
//! l <|' K iff r^-l <| r^-K, and l r' b iff r^-l <| {b}.
struct DotConstruction {
  Base base;
  Cover cover;
  SubsetOp op;
  Relation r;        // S -> Pw(S)
  Relation r_prime;  // Pw(S) -> S
};

//! Capped by caps::dot_source.
DotConstruction dot_construction(const Cover& s);

//! r and r' are basic cover maps and mutually inverse up to equality.
std::vector<LawReport> check_dot_isomorphism(const DotConstruction& dot, const Cover& s);

//! The identity relation is a basic cover map in both directions, that is,
//! the two covers on one base coincide.
LawReport identity_iso(const Cover& a, const Cover& b);

//! Stability, associativity, commutativity, weakening, contraction and the
//! frame equality; passes only if all of them do.
LawReport formal_law_suite(const Cover& cover, const SubsetOp& op);

}  // namespace covertop
