#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covertop/cover.hpp"
#include "covertop/generation.hpp"
#include "covertop/subset_op.hpp"

namespace covertop {

//! Named elements and subsets that make a law fail.
struct Witness {
  std::vector<std::pair<std::string, std::string>> elements;  // role, element name
  std::vector<std::pair<std::string, Subset>> subsets;        // role, subset

  Witness& element(std::string role, std::string name) {
    elements.emplace_back(std::move(role), std::move(name));
    return *this;
  }
  Witness& subset(std::string role, Subset s) {
    subsets.emplace_back(std::move(role), std::move(s));
    return *this;
  }
};

//! Outcome of one law check. A failing report carries the first
//! counterexample: element tuples are ordered by the set of elements they
//! use (canonical subset order), then lexicographically; subset tuples are
//! ordered lexicographically in canonical subset order.
struct LawReport {
  std::string law;
  bool passed = true;
  std::optional<Witness> witness;
  //! Set when the check was not run (size cap); `passed` is then meaningless.
  bool skipped = false;
  std::string note;

  static LawReport pass(std::string law) { return LawReport{std::move(law), true, {}, false, {}}; }
  static LawReport fail(std::string law, Witness w) {
    return LawReport{std::move(law), false, std::move(w), false, {}};
  }
  explicit operator bool() const noexcept { return passed && !skipped; }
};

// Operations.

//! U down V = down(U) n down(V), where down(U) = {x | x <| {u} for some u in U}.
Subset down_arrow(const Cover& cover, const Subset& u, const Subset& v);
//! The element table a down b = sat{a} n sat{b}.
SubsetOp down_op(const Cover& cover);
//! U down<= V for a preorder operation.
Subset down_arrow_leq(const SubsetOp& preorder, const Subset& u, const Subset& v);
//! U -> V = {a | a o U <| V}.
Subset implication(const Cover& cover, const SubsetOp& op, const Subset& u, const Subset& v);

// Element-level laws.

//! a <| U implies a o b <| U o b and b o a <| b o U.
LawReport check_stability(const Cover& cover, const SubsetOp& op);
//! a <| U implies a o b <| U o b.
LawReport check_localization(const Cover& cover, const SubsetOp& op);
//! (a o b) o c <| a o (b o c).
LawReport check_associativity(const Cover& cover, const SubsetOp& op);
//! a o b <| b o a.
LawReport check_commutativity(const Cover& cover, const SubsetOp& op);
//! b o c <| {b} and b o c <| {c}.
LawReport check_weakening(const Cover& cover, const SubsetOp& op);
//! a <| a o a.
LawReport check_contraction(const Cover& cover, const SubsetOp& op);
//! a =A a o I and a =A I o a.
LawReport check_unit(const Cover& cover, const SubsetOp& op, const Subset& unit);
//! a =A a o S.
LawReport check_top_unit(const Cover& cover, const SubsetOp& op);

// Subset-level laws.

//! sat(U) o sat(V) <| U o V.
LawReport check_stability_subsets(const Cover& cover, const SubsetOp& op);
LawReport check_associativity_subsets(const Cover& cover, const SubsetOp& op);
LawReport check_commutativity_subsets(const Cover& cover, const SubsetOp& op);
//! U o V <| U and U o V <| V.
LawReport check_weakening_subsets(const Cover& cover, const SubsetOp& op);
//! U <| U o U.
LawReport check_contraction_subsets(const Cover& cover, const SubsetOp& op);
//! sat(sat(U) o sat(V)) = sat(U o V).
LawReport check_well_defined(const Cover& cover, const SubsetOp& op);
//! sat(U o V) = sat(U) n sat(V).
LawReport check_frame_equality(const Cover& cover, const SubsetOp& op);
//! U o V =A U down V.
LawReport check_down_coincides(const Cover& cover, const SubsetOp& op);
//! The induced operation on saturated sets preserves binary and empty joins
//! in each argument.
LawReport check_distributivity(const Cover& cover, const SubsetOp& op);
//! W o U <| V iff W <| U -> V.
LawReport check_adjunction(const Cover& cover, const SubsetOp& op);

//! The two chains of equivalent conditions relating o to meets of saturated
//! sets. Each chain is equivalent for convergent covers.
struct MeetConditions {
  // o below meets.
  bool sat_below_meet = false;     // sat(U o V) within sat(U) n sat(V)
  bool below_both = false;         // U o V <| U and U o V <| V
  bool below_cover = false;        // U <| W implies U o V <| W
  bool element_below_both = false; // a o b <| a and a o b <| b
  bool element_below_cover = false;// a <| W implies a o b <| W
  // meets below o.
  bool meet_below_sat = false;     // sat(U) n sat(V) within sat(U o V)
  bool idempotent = false;         // U <| U o U
  bool meet_cover = false;         // W <| U and W <| V imply W <| U o V
  bool element_idempotent = false; // a <| a o a
  bool element_meet_cover = false; // a <| U and a <| V imply a <| U o V

  bool below_chain_agrees() const;
  bool meet_chain_agrees() const;
};
MeetConditions evaluate_meet_conditions(const Cover& cover, const SubsetOp& op);

//! The laws applicable to an operation cover, in a fixed order. Checks that
//! would exceed a size cap are reported as skipped. With threads > 1 the
//! checks run on a small pool; the report order does not change.
std::vector<LawReport> law_suite(const OpCover& c, std::size_t threads = 1);

}  // namespace covertop
