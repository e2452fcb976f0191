#include "covertop/maps.hpp"

#include <algorithm>

#include "covertop/errors.hpp"
#include "covertop/limits.hpp"

namespace covertop {

namespace {

void require_bases(const Relation& r, const Cover& source, const Cover& target) {
  if (!(r.source() == source.base()) || !(r.target() == target.base())) {
    throw BaseMismatch("relation bases do not match the covers");
  }
}

LawReport basic_by_axioms(const Relation& r, const Cover& source, const AxiomSet& axioms) {
  const Base& t = axioms.base();
  for (std::size_t b = 0; b < t.size(); ++b) {
    const Subset& pre = r.preimage(b);
    for (const auto& ax : axioms.of(b)) {
      if (!source.covers(pre, r.rminus(ax.cover))) {
        return LawReport::fail("basic_cover_map",
                               Witness{}.element("b", t.name(b)).element("axiom", ax.id.label));
      }
    }
  }
  return LawReport::pass("basic_cover_map");
}

// Over the subsets V of T: r^-(sat V) within sat(r^-V).
LawReport basic_over_target(const Relation& r, const Cover& source, const Cover& target) {
  const Base& t = target.base();
  for (const auto& v : all_subsets(t)) {
    const Subset sat_v = target.saturate(v);
    const Subset image = source.saturate(r.rminus(v));
    for (std::size_t b : sat_v.elements()) {
      if (!r.preimage(b).is_subset_of(image)) {
        return LawReport::fail("basic_cover_map",
                               Witness{}.element("b", t.name(b)).subset("V", v));
      }
    }
  }
  return LawReport::pass("basic_cover_map");
}

// Over the saturated W of S: {b | r^-b within W} is saturated in T.
LawReport basic_over_source(const Relation& r, const Cover& source, const Cover& target) {
  const Base& t = target.base();
  for (const auto& w : all_subsets(source.base())) {
    if (!source.is_saturated(w)) continue;
    Subset v(t);
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (r.preimage(b).is_subset_of(w)) v.insert(b);
    }
    const Subset missing = target.saturate(v) - v;
    if (!missing.empty()) {
      return LawReport::fail("basic_cover_map",
                             Witness{}.element("b", t.name(missing.elements().front())).subset("V", v));
    }
  }
  return LawReport::pass("basic_cover_map");
}

LawReport basic_exhaustive(const Relation& r, const Cover& source, const Cover& target) {
  const std::size_t s = source.base().size(), t = target.base().size();
  caps::require(std::min(s, t), caps::exhaustive_map, "exhaustive map check");
  return t <= s ? basic_over_target(r, source, target) : basic_over_source(r, source, target);
}

LawReport preserves_op(const Relation& r, const OpCover& source, const OpCover& target) {
  const Base& t = target.cover.base();
  for (std::size_t b1 = 0; b1 < t.size(); ++b1) {
    for (std::size_t b2 = 0; b2 < t.size(); ++b2) {
      if (!target.op.defined(b1, b2)) continue;
      const Subset lhs = r.rminus(target.op.at(b1, b2));
      const Subset rhs = source.op.lift(r.preimage(b1), r.preimage(b2));
      if (!source.cover.eq_mod(lhs, rhs)) {
        return LawReport::fail("convergent_map",
                               Witness{}.element("b1", t.name(b1)).element("b2", t.name(b2)));
      }
    }
  }
  return LawReport::pass("convergent_map");
}

LawReport preserves_unit(const Relation& r, const Cover& source,
                         const std::optional<Subset>& source_unit,
                         const std::optional<Subset>& target_unit) {
  if (!source_unit || !target_unit) throw InputError("unital map check needs units on both sides");
  if (!source.eq_mod(r.rminus(*target_unit), *source_unit)) {
    return LawReport::fail("unital_map", Witness{}.subset("I", *target_unit));
  }
  return LawReport::pass("unital_map");
}

LawReport is_total(const Relation& r, const Cover& source) {
  const Subset top = Subset::full(source.base());
  if (!source.eq_mod(r.rminus(Subset::full(r.target())), top)) {
    return LawReport::fail("formal_map", Witness{});
  }
  return LawReport::pass("formal_map");
}

LawReport convergent_impl(const Relation& r, const OpCover& source, const OpCover& target,
                          const AxiomSet* axioms) {
  require_bases(r, source.cover, target.cover);
  LawReport basic = axioms != nullptr ? basic_by_axioms(r, source.cover, *axioms)
                                      : basic_exhaustive(r, source.cover, target.cover);
  if (!basic.passed) return basic;
  return preserves_op(r, source, target);
}

}  // namespace

LawReport is_basic_cover_map(const Relation& r, const Cover& source, const GeneratedCover& target,
                             MapMethod method) {
  require_bases(r, source, target);
  if (method == MapMethod::axioms) return basic_by_axioms(r, source, target.axioms());
  caps::require(target.base().size(), caps::exhaustive_map, "exhaustive map check");
  return basic_over_target(r, source, target);
}

LawReport is_basic_cover_map(const Relation& r, const Cover& source, const Cover& target) {
  require_bases(r, source, target);
  return basic_exhaustive(r, source, target);
}

LawReport is_convergent_map(const Relation& r, const OpCover& source, const OpCover& target) {
  return convergent_impl(r, source, target, nullptr);
}

LawReport is_convergent_map(const Relation& r, const OpCover& source,
                            const ConvergentCover& target) {
  return convergent_impl(r, source, target.view(), &target.cover.axioms());
}

LawReport is_unital_map(const Relation& r, const OpCover& source, const OpCover& target) {
  LawReport conv = is_convergent_map(r, source, target);
  if (!conv.passed) return conv;
  return preserves_unit(r, source.cover, source.unit, target.unit);
}

LawReport is_unital_map(const Relation& r, const OpCover& source, const ConvergentCover& target) {
  LawReport conv = is_convergent_map(r, source, target);
  if (!conv.passed) return conv;
  return preserves_unit(r, source.cover, source.unit, target.effective_unit());
}

LawReport is_formal_map(const Relation& r, const OpCover& source, const OpCover& target) {
  LawReport conv = is_convergent_map(r, source, target);
  if (!conv.passed) return conv;
  return is_total(r, source.cover);
}

LawReport is_formal_map(const Relation& r, const OpCover& source, const ConvergentCover& target) {
  LawReport conv = is_convergent_map(r, source, target);
  if (!conv.passed) return conv;
  return is_total(r, source.cover);
}

LawReport check_generated_target_conditions(const Relation& r, const OpCover& source,
                                            const ConvergentCover& target) {
  require_bases(r, source.cover, target.cover);
  LawReport gen = basic_by_axioms(r, source.cover, target.generators);
  if (!gen.passed) {
    gen.law = "generator_axioms";
    return gen;
  }
  LawReport op = preserves_op(r, source, target.view());
  if (!op.passed) return op;
  return preserves_unit(r, source.cover, source.unit, target.effective_unit());
}

LawReport maps_equal(const Relation& r1, const Relation& r2, const Cover& source) {
  if (!(r1.source() == r2.source()) || !(r1.target() == r2.target()) ||
      !(r1.source() == source.base())) {
    throw BaseMismatch("comparing relations with different bases");
  }
  const Base& t = r1.target();
  for (std::size_t b = 0; b < t.size(); ++b) {
    if (!source.eq_mod(r1.preimage(b), r2.preimage(b))) {
      return LawReport::fail("maps_equal", Witness{}.element("b", t.name(b)));
    }
  }
  return LawReport::pass("maps_equal");
}

}  // namespace covertop
