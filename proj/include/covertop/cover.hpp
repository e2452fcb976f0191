#pragma once

#include <cstddef>
#include <functional>
#include <memory>

#include "covertop/axiom_set.hpp"
#include "covertop/base.hpp"
#include "covertop/subset.hpp"

namespace covertop {

inline constexpr std::size_t default_cache_capacity = 4096;

//! A cover relation on a base, represented by its saturation (a closure
//! operator). a covers-by U iff a is in saturate(U).
//!
//! Saturations are memoized in a bounded LRU cache shared by all copies; the
//! cache is safe to use from several threads.
class Cover {
 public:
  using Closure = std::function<Subset(const Subset&)>;

  Cover(Base base, Closure closure, std::size_t cache_capacity = default_cache_capacity);

  const Base& base() const noexcept;
  Subset saturate(const Subset& u) const;
  Subset saturate(std::size_t element) const;
  //! a <| U
  bool covers(std::size_t a, const Subset& u) const;
  //! U <| V, i.e. every element of U is covered by V.
  bool covers(const Subset& u, const Subset& v) const;
  //! U and V have the same saturation.
  bool eq_mod(const Subset& u, const Subset& v) const;
  bool is_saturated(const Subset& u) const;

  std::size_t cache_size() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

//! The least cover in which every axiom a <| C(a, i) holds: saturate(U) is the
//! least P containing U such that C(b, i) subset of P implies b in P.
class GeneratedCover {
 public:
  explicit GeneratedCover(AxiomSet axioms,
                          std::size_t cache_capacity = default_cache_capacity);

  const AxiomSet& axioms() const noexcept { return *axioms_; }
  const Base& base() const noexcept { return cover_.base(); }
  const Cover& cover() const noexcept { return cover_; }
  operator const Cover&() const noexcept { return cover_; }  // NOLINT

  Subset saturate(const Subset& u) const { return cover_.saturate(u); }
  Subset saturate(std::size_t element) const { return cover_.saturate(element); }
  bool covers(std::size_t a, const Subset& u) const { return cover_.covers(a, u); }
  bool covers(const Subset& u, const Subset& v) const { return cover_.covers(u, v); }
  bool eq_mod(const Subset& u, const Subset& v) const { return cover_.eq_mod(u, v); }

 private:
  std::shared_ptr<const AxiomSet> axioms_;
  Cover cover_;
};

Subset saturate(const Cover& cover, const Subset& u);
bool covers(const Cover& cover, std::size_t a, const Subset& u);
bool covers_subset(const Cover& cover, const Subset& u, const Subset& v);
bool eq_mod_A(const Cover& cover, const Subset& u, const Subset& v);

//! Worklist saturation without caching; exposed for benchmarks and oracles.
Subset saturate_uncached(const AxiomSet& axioms, const Subset& u);

}  // namespace covertop
