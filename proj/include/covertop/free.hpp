#pragma once

#include <cstddef>
#include <vector>

#include "covertop/generation.hpp"
#include "covertop/laws.hpp"
#include "covertop/relation.hpp"

namespace covertop {

//! A cover with an operation that is associative and commutative up to the
//! cover and has a unit, held in the generating form (mode basic).
using CircBasicCover = ConvergentCover;

//! Builds the cover generated by `axioms` together with `op` and `unit`.
CircBasicCover make_circ_basic_cover(AxiomSet axioms, SubsetOp op, Subset unit);

//! Associativity, commutativity and the unit law up to the cover. The
//! operation distributes over unions by construction.
std::vector<LawReport> validate_circ_basic_cover(const CircBasicCover& c);

//! The result of one free construction: the new cover, its unit map back to
//! the input, and the checks run on them.
struct FreeResult {
  ConvergentCover cover;
  Relation unit_map;
  std::vector<LawReport> validation;
};

//! Lists of length at most `max_len` over S with concatenation and unit {[]}.
//! Axioms: [a] <| {[u] | u in C(a,i)} for every axiom of S, and
//! l.k <| {k.l} whenever |l|+|k| <= max_len. The unit map relates [a] to a.
FreeResult free_O(const GeneratedCover& s, std::size_t max_len);

//! The convergent cover generated by the same data; unit map is the identity.
FreeResult free_Q(const CircBasicCover& c);

//! The formal cover generated by the same data; unit map is the identity.
FreeResult free_L(const ConvergentCover& q);

enum class FreeStage { O, Q, L };

//! The map through the free cover induced by r from `source` to the input of
//! the construction, with the triangle and the map-level checks.
struct Factorization {
  Relation map;
  std::vector<LawReport> validation;
};

//! For O, `source` must have a unit and `r` must be a basic cover map into S;
//! the induced map sends [a1..an] to r^-a1 o ... o r^-an and [] to the unit.
//! For Q and L the induced map is r itself.
Factorization factor_through(FreeStage stage, const Relation& r, const OpCover& source,
                             const FreeResult& free);

}  // namespace covertop
