#pragma once

#include <optional>
#include <vector>

#include "covertop/cover.hpp"
#include "covertop/generation.hpp"
#include "covertop/laws.hpp"
#include "covertop/relation.hpp"

namespace covertop {

//! E: one element "*" and no axioms.
GeneratedCover unit_cover();

//! The product cover on S x T generated by (a,b) <| C(a,i) x {b} and
//! (a,b) <| {a} x D(b,j).
GeneratedCover tensor_cover(const GeneratedCover& s, const GeneratedCover& t);

//! r1 x r2 between S1 x S2 and T1 x T2.
Relation tensor_map(const Relation& r1, const Relation& r2);

// Structural relations; each is named after its direction as a cover map.

//! S1 (x) S2 -> S2 (x) S1, relating (a1,a2) to (a2,a1).
Relation gamma(const Base& s1, const Base& s2);
//! S1 (x) (S2 (x) S3) -> (S1 (x) S2) (x) S3.
Relation alpha(const Base& s1, const Base& s2, const Base& s3);
//! E (x) S -> S.
Relation lambda(const Base& s);
//! S (x) E -> S.
Relation rho(const Base& s);

//! The six coherence equations (pentagon, triangle, lambda_E = rho_E,
//! symmetry, rho = lambda after gamma, hexagon), each as maps_equal.
std::vector<LawReport> check_coherence(const GeneratedCover& s1, const GeneratedCover& s2,
                                       const GeneratedCover& s3, const GeneratedCover& s4);

//! gamma, alpha, lambda, rho and their transposes are basic cover maps.
std::vector<LawReport> check_structural_maps(const GeneratedCover& s1, const GeneratedCover& s2,
                                             const GeneratedCover& s3);

//! sat(U) x sat(V) =A U x V in the product cover, for all U, V.
LawReport check_product_saturation(const GeneratedCover& s, const GeneratedCover& t);

//! S -> S (x) S relating c to (a,b) whenever c is in delta(a,b).
Relation mu_from_circ(const Cover& cover, const SubsetOp& op);
//! delta(a,b) = mu^-(a,b).
SubsetOp circ_from_mu(const Relation& mu);
//! S -> E relating exactly the elements of `unit` to *; the whole base
//! when no unit is given.
Relation eta_from_unit(const Base& s, const std::optional<Subset>& unit);

//! mu is a basic cover map into S (x) S, coassociative and cocommutative.
std::vector<LawReport> check_cosemigroup(const GeneratedCover& s, const Relation& mu);
//! Cosemigroup laws plus both counit triangles for eta.
std::vector<LawReport> check_comonoid(const GeneratedCover& s, const Relation& mu,
                                      const Relation& eta);

}  // namespace covertop
