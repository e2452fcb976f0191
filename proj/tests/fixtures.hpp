#pragma once

// Small presentations shared by the unit and acceptance tests.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "covertop/axiom_set.hpp"
#include "covertop/base.hpp"
#include "covertop/generation.hpp"
#include "covertop/subset.hpp"
#include "covertop/subset_op.hpp"

namespace fixtures {

using namespace covertop;

//! S = {a,b,c} with the single axiom a <| {b,c}.
inline AxiomSet abc() {
  const Base base = Base::atomic({"a", "b", "c"});
  return make_axiom_set(base, {{0, Subset::of(base, {1, 2})}});
}

inline Base chain_base() { return Base::atomic({"z", "o"}); }

//! delta = min on the chain z < o.
inline SubsetOp chain_min() {
  const Base base = chain_base();
  return SubsetOp::from_function(base, [&](std::size_t a, std::size_t b) {
    return Subset::singleton(base, std::min(a, b));
  });
}

inline AxiomSet no_axioms(const Base& base) { return AxiomSet(base); }

inline Base pqt_base() { return Base::atomic({"p", "q", "t"}); }

//! p <= t and q <= t.
inline SubsetOp pqt_preorder() { return SubsetOp::from_preorder(pqt_base(), {{0, 2}, {1, 2}}); }

inline Base monoid_base() { return Base::atomic({"e", "g", "h"}); }

//! Saturating addition on {0,1,2} written e, g, h.
inline SubsetOp saturating_monoid() {
  return SubsetOp::from_monoid(monoid_base(), {0, 1, 2, 1, 2, 2, 2, 2, 2}, 0);
}

inline Subset monoid_unit() { return Subset::singleton(monoid_base(), 0); }

//! delta(x,x) = {x}, empty otherwise.
inline SubsetOp discrete(const Base& base) {
  return SubsetOp::from_function(base, [&](std::size_t a, std::size_t b) {
    return a == b ? Subset::singleton(base, a) : Subset(base);
  });
}

//! A presentation together with its operation and optional unit.
struct Case {
  std::string name;
  AxiomSet user;
  SubsetOp op;
  std::optional<Subset> unit;
};

//! Every bundled presentation that carries an operation.
inline std::vector<Case> op_cases() {
  std::vector<Case> out;
  out.push_back({"chain", no_axioms(chain_base()), chain_min(), std::nullopt});
  out.push_back({"pqt", no_axioms(pqt_base()), pqt_preorder(), std::nullopt});
  out.push_back({"monoid", no_axioms(monoid_base()), saturating_monoid(), monoid_unit()});
  out.push_back({"discrete", abc(), discrete(abc().base()), std::nullopt});
  {
    const Base base = monoid_base();
    out.push_back({"monoid-ax", make_axiom_set(base, {{1, Subset::of(base, {0, 2})}}),
                   saturating_monoid(), monoid_unit()});
  }
  {
    const Base base = pqt_base();
    out.push_back({"pqt-ax", make_axiom_set(base, {{2, Subset::of(base, {0, 1})}}),
                   pqt_preorder(), std::nullopt});
  }
  return out;
}

//! Uniform random subset of `base`.
inline Subset random_subset(const Base& base, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Subset s(base);
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (coin(rng)) s.insert(i);
  }
  return s;
}

inline Base letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Base::atomic(std::move(names));
}

//! Up to `max_axioms` random axioms over a base of size n.
inline AxiomSet random_axioms(const Base& base, std::mt19937_64& rng, std::size_t max_axioms) {
  std::uniform_int_distribution<std::size_t> count(0, max_axioms);
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  std::vector<std::pair<std::size_t, Subset>> entries;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) entries.emplace_back(pick(rng), random_subset(base, rng, 0.35));
  return make_axiom_set(base, entries);
}

//! A random element table with values of density `density`.
inline SubsetOp random_table(const Base& base, std::mt19937_64& rng, double density = 0.3) {
  std::vector<Subset> entries;
  for (std::size_t i = 0; i < base.size() * base.size(); ++i) {
    entries.push_back(random_subset(base, rng, density));
  }
  return SubsetOp::from_table(base, std::move(entries));
}

}  // namespace fixtures
