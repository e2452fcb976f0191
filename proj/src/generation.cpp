#include "covertop/generation.hpp"

#include <string>

#include "covertop/errors.hpp"

namespace covertop {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::basic: return "basic";
    case Mode::convergent: return "convergent";
    case Mode::formal: return "formal";
  }
  return "?";
}

std::optional<Subset> ConvergentCover::effective_unit() const {
  if (unit) return unit;
  if (mode == Mode::formal) return Subset::full(cover.base());
  return std::nullopt;
}

namespace {

void require_same_base(const AxiomSet& axioms, const SubsetOp& op) {
  if (!(axioms.base() == op.base())) {
    throw BaseMismatch("axioms and operation are over different bases");
  }
}

std::string label(const Base& base, const char* tag, std::initializer_list<std::size_t> elems) {
  std::string out = tag;
  out += '(';
  bool first = true;
  for (std::size_t e : elems) {
    if (!first) out += ',';
    first = false;
    out += base.name(e);
  }
  out += ')';
  return out;
}

}  // namespace

AxiomSet extend_semigroup_axioms(const AxiomSet& user, const SubsetOp& op) {
  require_same_base(user, op);
  const Base& base = user.base();
  const std::size_t n = base.size();
  AxiomSet out = user;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!op.defined(b, c) || !op.defined(c, b)) continue;
      const Subset& flipped = op.at(c, b);
      op.at(b, c).for_each([&](std::size_t a) {
        out.add(a, make_id(AxiomTag::commutativity, {b, c}, label(base, "comm", {b, c})),
                flipped);
      });
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!op.defined(b, c)) continue;
      const Subset& bc = op.at(b, c);
      for (std::size_t d = 0; d < n; ++d) {
        const Subset lhs = op.lift(bc, Subset::singleton(base, d));
        if (lhs.empty() || !op.defined(c, d)) continue;
        const auto rhs = op.lift_checked(Subset::singleton(base, b), op.at(c, d));
        if (rhs.overflow) continue;
        lhs.for_each([&](std::size_t a) {
          out.add(a,
                  make_id(AxiomTag::associativity, {b, c, d}, label(base, "assoc", {b, c, d})),
                  rhs.value);
        });
      }
    }
  }
  return out;
}

AxiomSet add_unit_axioms(const AxiomSet& axioms, const SubsetOp& op, const Subset& unit) {
  require_same_base(axioms, op);
  const Base& base = axioms.base();
  if (!(unit.base() == base)) throw BaseMismatch("unit over a different base");
  AxiomSet out = axioms;
  for (std::size_t a = 0; a < base.size(); ++a) {
    const auto aI = op.lift_checked(Subset::singleton(base, a), unit);
    if (aI.overflow) continue;
    out.add(a, make_id(AxiomTag::unit, {a}, label(base, "unit", {a})), aI.value);
    aI.value.for_each([&](std::size_t x) {
      out.add(x, make_id(AxiomTag::unit_inverse, {a}, label(base, "unit-inv", {a})),
              Subset::singleton(base, a));
    });
  }
  return out;
}

AxiomSet localize(const AxiomSet& axioms, const SubsetOp& op) {
  require_same_base(axioms, op);
  const Base& base = axioms.base();
  const std::size_t n = base.size();
  AxiomSet out = axioms;
  for (std::size_t b = 0; b < n; ++b) {
    const auto& family = axioms.of(b);
    for (std::size_t c = 0; c < n; ++c) {
      if (!op.defined(b, c) || op.at(b, c).empty()) continue;
      const Subset right = Subset::singleton(base, c);
      for (std::size_t j = 0; j < family.size(); ++j) {
        const auto cover = op.lift_checked(family[j].cover, right);
        if (cover.overflow) continue;
        const std::string name =
            "locax(" + base.name(b) + "," + family[j].id.label + "," + base.name(c) + ")";
        op.at(b, c).for_each([&](std::size_t a) {
          out.add(a, make_id(AxiomTag::localization, {b, j, c}, name), cover.value);
        });
      }
    }
  }
  return out;
}

AxiomSet add_frame_axioms(const AxiomSet& axioms, const SubsetOp& op) {
  require_same_base(axioms, op);
  const Base& base = axioms.base();
  const std::size_t n = base.size();
  AxiomSet out = axioms;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!op.defined(b, c)) continue;
      const Subset right = Subset::singleton(base, c);
      op.at(b, c).for_each([&](std::size_t a) {
        out.add(a, make_id(AxiomTag::weakening, {b, c}, label(base, "weak", {b, c})), right);
      });
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!op.defined(a, a)) continue;
    out.add(a, make_id(AxiomTag::contraction, {}, "contr"), op.at(a, a));
  }
  return out;
}

AxiomSet as_user(const AxiomSet& axioms) {
  const Base& base = axioms.base();
  AxiomSet out(base);
  for (std::size_t a = 0; a < base.size(); ++a) {
    const auto& family = axioms.of(a);
    const auto labels = distinct_labels(family);
    for (std::size_t k = 0; k < family.size(); ++k) {
      out.add(a, make_id(AxiomTag::user, {k + 1}, labels[k]), family[k].cover);
    }
  }
  return out;
}

AxiomSet tensor_axioms(const AxiomSet& left, const AxiomSet& right) {
  const Base& s = left.base();
  const Base& t = right.base();
  const Base product = Base::product(s, t);
  AxiomSet out(product);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      const std::size_t ab = product.pair(a, b);
      const auto& cs = left.of(a);
      for (std::size_t j = 0; j < cs.size(); ++j) {
        Subset cover(product);
        cs[j].cover.for_each([&](std::size_t u) { cover.insert(product.pair(u, b)); });
        out.add(ab, make_id(AxiomTag::tensor_left, {j}, "left:" + cs[j].id.label), cover);
      }
      const auto& ds = right.of(b);
      for (std::size_t j = 0; j < ds.size(); ++j) {
        Subset cover(product);
        ds[j].cover.for_each([&](std::size_t v) { cover.insert(product.pair(a, v)); });
        out.add(ab, make_id(AxiomTag::tensor_right, {j}, "right:" + ds[j].id.label), cover);
      }
    }
  }
  return out;
}

GeneratedCover generate_basic(AxiomSet axioms) { return GeneratedCover(std::move(axioms)); }

ConvergentCover generate_convergent(const AxiomSet& user, const SubsetOp& op,
                                    std::optional<Subset> unit) {
  AxiomSet jd = extend_semigroup_axioms(user, op);
  if (unit) jd = add_unit_axioms(jd, op, *unit);
  AxiomSet full = localize(jd, op);
  return ConvergentCover{Mode::convergent, user, op, std::move(unit),
                         GeneratedCover(std::move(full))};
}

ConvergentCover generate_formal(const AxiomSet& user, const SubsetOp& op,
                                std::optional<Subset> unit) {
  AxiomSet jd = extend_semigroup_axioms(user, op);
  if (unit) jd = add_unit_axioms(jd, op, *unit);
  AxiomSet full = add_frame_axioms(localize(jd, op), op);
  return ConvergentCover{Mode::formal, user, op, std::move(unit),
                         GeneratedCover(std::move(full))};
}

ConvergentCover generate(Mode mode, const AxiomSet& user, const SubsetOp& op,
                         std::optional<Subset> unit) {
  switch (mode) {
    case Mode::basic:
      require_same_base(user, op);
      return ConvergentCover{Mode::basic, user, op, std::move(unit), GeneratedCover(user)};
    case Mode::convergent: return generate_convergent(user, op, std::move(unit));
    case Mode::formal: return generate_formal(user, op, std::move(unit));
  }
  throw InvariantError("unknown mode");
}

}  // namespace covertop
