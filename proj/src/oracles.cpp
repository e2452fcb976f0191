#include "covertop/oracles.hpp"

#include <cstdint>

#include "covertop/errors.hpp"
#include "covertop/limits.hpp"

namespace covertop {

Subset oracle_saturate(const AxiomSet& axioms, const Subset& u) {
  if (!(u.base() == axioms.base())) throw BaseMismatch("saturating a subset of a different base");
  Subset p = u;
  bool changed = true;
  while (changed) {
    changed = false;
    Subset next = p;
    for (std::size_t a = 0; a < axioms.base().size(); ++a) {
      if (p.contains(a)) continue;
      for (const auto& ax : axioms.of(a)) {
        if (ax.cover.is_subset_of(p)) {
          next.insert(a);
          break;
        }
      }
    }
    if (!(next == p)) {
      p = std::move(next);
      changed = true;
    }
  }
  return p;
}

ClosureTable semantic_closure_oracle(const AxiomSet& user, const SubsetOp& op,
                                     const std::optional<Subset>& unit, Mode mode) {
  const Base& base = user.base();
  if (!(op.base() == base)) throw BaseMismatch("axioms and operation are over different bases");
  caps::require(base.size(), caps::semantic_oracle, "semantic closure oracle");
  const std::size_t n = base.size();
  const std::size_t count = std::size_t{1} << n;
  using Mask = std::uint32_t;

  std::vector<Mask> delta(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) delta[a * n + b] = static_cast<Mask>(op.at(a, b).mask());
  }
  std::vector<Mask> lift(count * count, 0);
  for (Mask u = 0; u < count; ++u) {
    for (Mask v = 0; v < count; ++v) {
      Mask out = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (!(u >> a & 1U)) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (v >> b & 1U) out |= delta[a * n + b];
        }
      }
      lift[u * count + v] = out;
    }
  }
  auto L = [&](Mask u, Mask v) { return lift[u * count + v]; };

  // t[V] is the set of elements currently known to be covered by V.
  std::vector<Mask> t(count);
  for (Mask v = 0; v < count; ++v) t[v] = v;
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& ax : user.of(a)) t[ax.cover.mask()] |= Mask{1} << a;
  }
  bool changed = true;
  // Records "x <| y" for subsets x, y.
  auto add = [&](Mask x, Mask y) {
    if ((x & ~t[y]) != 0) {
      t[y] |= x;
      changed = true;
    }
  };
  const Mask unit_mask = unit ? static_cast<Mask>(unit->mask()) : 0;

  while (changed) {
    changed = false;
    for (Mask v = 0; v < count; ++v) {
      for (Mask u = 0; u < count; ++u) {
        if ((u & ~t[v]) == 0) add(t[u], v);
      }
    }
    if (mode == Mode::basic) continue;
    for (Mask u = 0; u < count; ++u) {
      for (Mask v = 0; v < count; ++v) {
        add(L(u, v), L(v, u));
        if ((u & ~t[v]) == 0) {
          for (Mask w = 0; w < count; ++w) add(L(u, w), L(v, w));
        }
        for (Mask w = 0; w < count; ++w) add(L(L(u, v), w), L(u, L(v, w)));
        if (mode == Mode::formal) {
          add(L(u, v), u);
          add(L(u, v), v);
        }
      }
      if (mode == Mode::formal) add(u, L(u, u));
    }
    if (unit) {
      for (std::size_t a = 0; a < n; ++a) {
        const Mask single = Mask{1} << a;
        add(single, L(single, unit_mask));
        add(L(single, unit_mask), single);
      }
    }
  }

  ClosureTable out{base, {}};
  out.table.reserve(count);
  for (Mask u = 0; u < count; ++u) out.table.push_back(Subset::from_mask(base, t[u]));
  return out;
}

}  // namespace covertop
