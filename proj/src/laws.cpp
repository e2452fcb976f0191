#include "covertop/laws.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "covertop/errors.hpp"
#include "covertop/lattice.hpp"
#include "covertop/limits.hpp"

namespace covertop {

namespace {

// Element-level sweeps are bounded by caps::element_laws on atomic bases.
// Compound bases are built from already-bounded inputs and get more room.
constexpr std::size_t compound_element_laws = 64;

void require_elements(const Base& base, std::string_view what) {
  caps::require(base.size(),
                base.kind() == BaseKind::atomic ? caps::element_laws : compound_element_laws,
                what);
}

void require_same(const Cover& cover, const SubsetOp& op) {
  if (!(cover.base() == op.base())) throw BaseMismatch("cover and operation bases differ");
}

// All k-tuples of elements ordered by the set of entries (canonical subset
// order), then lexicographically.
std::vector<std::vector<std::size_t>> ordered_tuples(const Base& base, std::size_t k) {
  const std::size_t n = base.size();
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> current(k, 0);
  if (n == 0) return tuples;
  while (true) {
    tuples.push_back(current);
    std::size_t i = k;
    while (i > 0 && ++current[i - 1] == n) current[--i] = 0;
    if (i == 0) break;
  }
  std::vector<Subset> keys;
  keys.reserve(tuples.size());
  for (const auto& t : tuples) keys.push_back(Subset::of(base, t));
  std::vector<std::size_t> order(tuples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  std::vector<std::vector<std::size_t>> out;
  out.reserve(tuples.size());
  for (std::size_t i : order) out.push_back(std::move(tuples[i]));
  return out;
}

std::vector<Subset> subsets_for(const Base& base, std::size_t cap, std::string_view what) {
  caps::require(base.size(), cap, what);
  return all_subsets(base);
}

Subset single(const Base& base, std::size_t a) { return Subset::singleton(base, a); }

}  // namespace

Subset down_arrow(const Cover& cover, const Subset& u, const Subset& v) {
  Subset du(cover.base());
  u.for_each([&](std::size_t x) { du |= cover.saturate(x); });
  Subset dv(cover.base());
  v.for_each([&](std::size_t x) { dv |= cover.saturate(x); });
  return du & dv;
}

SubsetOp down_op(const Cover& cover) {
  const Base& base = cover.base();
  std::vector<Subset> sats;
  for (std::size_t a = 0; a < base.size(); ++a) sats.push_back(cover.saturate(a));
  return SubsetOp::from_function(base,
                                 [&](std::size_t a, std::size_t b) { return sats[a] & sats[b]; });
}

Subset down_arrow_leq(const SubsetOp& preorder, const Subset& u, const Subset& v) {
  const Base& base = preorder.base();
  Subset du(base);
  Subset dv(base);
  for (std::size_t x = 0; x < base.size(); ++x) {
    u.for_each([&](std::size_t y) {
      if (preorder.leq(x, y)) du.insert(x);
    });
    v.for_each([&](std::size_t y) {
      if (preorder.leq(x, y)) dv.insert(x);
    });
  }
  return du & dv;
}

Subset implication(const Cover& cover, const SubsetOp& op, const Subset& u, const Subset& v) {
  require_same(cover, op);
  const Base& base = cover.base();
  const Subset target = cover.saturate(v);
  Subset out(base);
  for (std::size_t a = 0; a < base.size(); ++a) {
    if (op.lift(single(base, a), u).is_subset_of(target)) out.insert(a);
  }
  return out;
}

LawReport check_localization(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const Base& base = cover.base();
  require_elements(base, "localization");
  for (const auto& u : subsets_for(base, caps::lattice, "localization")) {
    const Subset sat_u = cover.saturate(u);
    for (std::size_t b = 0; b < base.size(); ++b) {
      const Subset target = cover.saturate(op.lift(u, b));
      for (std::size_t a : sat_u.elements()) {
        if (!op.at(a, b).is_subset_of(target)) {
          return LawReport::fail(
              "localization",
              Witness{}.element("a", base.name(a)).element("b", base.name(b)).subset("U", u));
        }
      }
    }
  }
  return LawReport::pass("localization");
}

LawReport check_stability(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const Base& base = cover.base();
  require_elements(base, "stability");
  for (const auto& u : subsets_for(base, caps::lattice, "stability")) {
    const Subset sat_u = cover.saturate(u);
    for (std::size_t b = 0; b < base.size(); ++b) {
      const Subset right = cover.saturate(op.lift(u, b));
      const Subset left = cover.saturate(op.lift(b, u));
      for (std::size_t a : sat_u.elements()) {
        if (!op.at(a, b).is_subset_of(right) || !op.at(b, a).is_subset_of(left)) {
          return LawReport::fail(
              "stability",
              Witness{}.element("a", base.name(a)).element("b", base.name(b)).subset("U", u));
        }
      }
    }
  }
  return LawReport::pass("stability");
}

LawReport check_associativity(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const Base& base = cover.base();
  require_elements(base, "associativity");
  for (const auto& t : ordered_tuples(base, 3)) {
    const Subset lhs = op.lift(op.at(t[0], t[1]), t[2]);
    const Subset rhs = op.lift(t[0], op.at(t[1], t[2]));
    if (!cover.covers(lhs, rhs)) {
      return LawReport::fail("associativity", Witness{}
                                                  .element("a", base.name(t[0]))
                                                  .element("b", base.name(t[1]))
                                                  .element("c", base.name(t[2])));
    }
  }
  return LawReport::pass("associativity");
}

LawReport check_commutativity(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const Base& base = cover.base();
  require_elements(base, "commutativity");
  for (const auto& t : ordered_tuples(base, 2)) {
    if (!cover.covers(op.at(t[0], t[1]), op.at(t[1], t[0]))) {
      return LawReport::fail(
          "commutativity",
          Witness{}.element("a", base.name(t[0])).element("b", base.name(t[1])));
    }
  }
  return LawReport::pass("commutativity");
}

LawReport check_weakening(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const Base& base = cover.base();
  require_elements(base, "weakening");
  for (const auto& t : ordered_tuples(base, 2)) {
    const Subset& bc = op.at(t[0], t[1]);
    if (!cover.covers(bc, single(base, t[0])) || !cover.covers(bc, single(base, t[1]))) {
      return LawReport::fail(
          "weakening", Witness{}.element("b", base.name(t[0])).element("c", base.name(t[1])));
    }
  }
  return LawReport::pass("weakening");
}

LawReport check_contraction(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const Base& base = cover.base();
  require_elements(base, "contraction");
  for (std::size_t a = 0; a < base.size(); ++a) {
    if (!cover.covers(a, op.at(a, a))) {
      return LawReport::fail("contraction", Witness{}.element("a", base.name(a)));
    }
  }
  return LawReport::pass("contraction");
}

LawReport check_unit(const Cover& cover, const SubsetOp& op, const Subset& unit) {
  require_same(cover, op);
  const Base& base = cover.base();
  require_elements(base, "unit");
  for (std::size_t a = 0; a < base.size(); ++a) {
    const Subset sa = single(base, a);
    if (!cover.eq_mod(sa, op.lift(sa, unit)) || !cover.eq_mod(sa, op.lift(unit, sa))) {
      return LawReport::fail("unit", Witness{}.element("a", base.name(a)).subset("I", unit));
    }
  }
  return LawReport::pass("unit");
}

LawReport check_top_unit(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const Base& base = cover.base();
  require_elements(base, "top_unit");
  const Subset top = Subset::full(base);
  for (std::size_t a = 0; a < base.size(); ++a) {
    if (!cover.eq_mod(single(base, a), op.lift(a, top))) {
      return LawReport::fail("top_unit", Witness{}.element("a", base.name(a)));
    }
  }
  return LawReport::pass("top_unit");
}

namespace {

using PairLaw = std::function<bool(const Subset&, const Subset&)>;

LawReport sweep_pairs(const Cover& cover, const SubsetOp& op, const std::string& law,
                      const PairLaw& holds) {
  require_same(cover, op);
  const auto subsets = subsets_for(cover.base(), caps::subset_pair_laws, law);
  for (const auto& u : subsets) {
    for (const auto& v : subsets) {
      if (!holds(u, v)) return LawReport::fail(law, Witness{}.subset("U", u).subset("V", v));
    }
  }
  return LawReport::pass(law);
}

}  // namespace

LawReport check_stability_subsets(const Cover& cover, const SubsetOp& op) {
  return sweep_pairs(cover, op, "stability_subsets", [&](const Subset& u, const Subset& v) {
    return cover.covers(op.lift(cover.saturate(u), cover.saturate(v)), op.lift(u, v));
  });
}

LawReport check_associativity_subsets(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const auto subsets = subsets_for(cover.base(), caps::subset_triple_laws, "associativity");
  for (const auto& u : subsets) {
    for (const auto& v : subsets) {
      const Subset uv = op.lift(u, v);
      for (const auto& w : subsets) {
        if (!cover.covers(op.lift(uv, w), op.lift(u, op.lift(v, w)))) {
          return LawReport::fail("associativity_subsets",
                                 Witness{}.subset("U", u).subset("V", v).subset("W", w));
        }
      }
    }
  }
  return LawReport::pass("associativity_subsets");
}

LawReport check_commutativity_subsets(const Cover& cover, const SubsetOp& op) {
  return sweep_pairs(cover, op, "commutativity_subsets", [&](const Subset& u, const Subset& v) {
    return cover.covers(op.lift(u, v), op.lift(v, u));
  });
}

LawReport check_weakening_subsets(const Cover& cover, const SubsetOp& op) {
  return sweep_pairs(cover, op, "weakening_subsets", [&](const Subset& u, const Subset& v) {
    const Subset uv = op.lift(u, v);
    return cover.covers(uv, u) && cover.covers(uv, v);
  });
}

LawReport check_contraction_subsets(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  for (const auto& u : subsets_for(cover.base(), caps::subset_pair_laws, "contraction")) {
    if (!cover.covers(u, op.lift(u, u))) {
      return LawReport::fail("contraction_subsets", Witness{}.subset("U", u));
    }
  }
  return LawReport::pass("contraction_subsets");
}

LawReport check_well_defined(const Cover& cover, const SubsetOp& op) {
  return sweep_pairs(cover, op, "well_defined", [&](const Subset& u, const Subset& v) {
    return cover.saturate(op.lift(cover.saturate(u), cover.saturate(v))) ==
           cover.saturate(op.lift(u, v));
  });
}

LawReport check_frame_equality(const Cover& cover, const SubsetOp& op) {
  return sweep_pairs(cover, op, "frame_equality", [&](const Subset& u, const Subset& v) {
    return cover.saturate(op.lift(u, v)) == (cover.saturate(u) & cover.saturate(v));
  });
}

LawReport check_down_coincides(const Cover& cover, const SubsetOp& op) {
  return sweep_pairs(cover, op, "down_coincides", [&](const Subset& u, const Subset& v) {
    return cover.eq_mod(op.lift(u, v), down_arrow(cover, u, v));
  });
}

LawReport check_distributivity(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  caps::require(cover.base().size(), caps::subset_triple_laws, "distributivity");
  const SatLattice lattice = SatLattice::of(cover);
  const auto& points = lattice.points();
  auto circ = [&](const Subset& p, const Subset& q) { return cover.saturate(op.lift(p, q)); };
  auto join = [&](const Subset& p, const Subset& q) { return cover.saturate(p | q); };
  const Subset& bottom = points[lattice.bottom()];
  for (const auto& r : points) {
    if (!(circ(bottom, r) == bottom) || !(circ(r, bottom) == bottom)) {
      return LawReport::fail("distributivity", Witness{}.subset("R", r));
    }
  }
  for (const auto& p : points) {
    for (const auto& q : points) {
      const Subset pq = join(p, q);
      for (const auto& r : points) {
        if (!(circ(pq, r) == join(circ(p, r), circ(q, r))) ||
            !(circ(r, pq) == join(circ(r, p), circ(r, q)))) {
          return LawReport::fail("distributivity",
                                 Witness{}.subset("P", p).subset("Q", q).subset("R", r));
        }
      }
    }
  }
  return LawReport::pass("distributivity");
}

LawReport check_adjunction(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const auto subsets = subsets_for(cover.base(), caps::adjunction, "adjunction");
  for (const auto& w : subsets) {
    for (const auto& u : subsets) {
      const Subset wu = op.lift(w, u);
      for (const auto& v : subsets) {
        if (cover.covers(wu, v) != cover.covers(w, implication(cover, op, u, v))) {
          return LawReport::fail("adjunction",
                                 Witness{}.subset("W", w).subset("U", u).subset("V", v));
        }
      }
    }
  }
  return LawReport::pass("adjunction");
}

bool MeetConditions::below_chain_agrees() const {
  return sat_below_meet == below_both && below_both == below_cover &&
         below_cover == element_below_both && element_below_both == element_below_cover;
}

bool MeetConditions::meet_chain_agrees() const {
  return meet_below_sat == idempotent && idempotent == meet_cover &&
         meet_cover == element_idempotent && element_idempotent == element_meet_cover;
}

MeetConditions evaluate_meet_conditions(const Cover& cover, const SubsetOp& op) {
  require_same(cover, op);
  const Base& base = cover.base();
  const auto subsets = subsets_for(base, caps::adjunction, "meet conditions");
  const std::size_t n = base.size();
  MeetConditions m;
  m.sat_below_meet = m.below_both = m.below_cover = true;
  m.element_below_both = m.element_below_cover = true;
  m.meet_below_sat = m.idempotent = m.meet_cover = true;
  m.element_idempotent = m.element_meet_cover = true;

  for (const auto& u : subsets) {
    const Subset su = cover.saturate(u);
    m.idempotent = m.idempotent && cover.covers(u, op.lift(u, u));
    for (const auto& v : subsets) {
      const Subset sv = cover.saturate(v);
      const Subset uv = op.lift(u, v);
      const Subset suv = cover.saturate(uv);
      m.sat_below_meet = m.sat_below_meet && suv.is_subset_of(su & sv);
      m.meet_below_sat = m.meet_below_sat && (su & sv).is_subset_of(suv);
      m.below_both = m.below_both && cover.covers(uv, u) && cover.covers(uv, v);
      for (const auto& w : subsets) {
        if (cover.covers(u, w) && !cover.covers(uv, w)) m.below_cover = false;
        if (cover.covers(w, u) && cover.covers(w, v) && !cover.covers(w, uv)) {
          m.meet_cover = false;
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (cover.covers(a, u) && cover.covers(a, v) && !cover.covers(a, uv)) {
          m.element_meet_cover = false;
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    m.element_idempotent = m.element_idempotent && cover.covers(a, op.at(a, a));
    for (std::size_t b = 0; b < n; ++b) {
      const Subset& ab = op.at(a, b);
      m.element_below_both = m.element_below_both && cover.covers(ab, single(base, a)) &&
                             cover.covers(ab, single(base, b));
      for (const auto& w : subsets) {
        if (cover.covers(a, w) && !cover.covers(ab, w)) m.element_below_cover = false;
      }
    }
  }
  return m;
}

std::vector<LawReport> law_suite(const OpCover& c, std::size_t threads) {
  std::vector<std::pair<std::string, std::function<LawReport()>>> checks = {
      {"stability", [&] { return check_stability(c.cover, c.op); }},
      {"localization", [&] { return check_localization(c.cover, c.op); }},
      {"associativity", [&] { return check_associativity(c.cover, c.op); }},
      {"commutativity", [&] { return check_commutativity(c.cover, c.op); }},
      {"distributivity", [&] { return check_distributivity(c.cover, c.op); }},
      {"well_defined", [&] { return check_well_defined(c.cover, c.op); }},
  };
  if (c.unit) checks.emplace_back("unit", [&] { return check_unit(c.cover, c.op, *c.unit); });
  checks.emplace_back("weakening", [&] { return check_weakening(c.cover, c.op); });
  checks.emplace_back("contraction", [&] { return check_contraction(c.cover, c.op); });
  checks.emplace_back("frame_equality", [&] { return check_frame_equality(c.cover, c.op); });
  checks.emplace_back("adjunction", [&] { return check_adjunction(c.cover, c.op); });

  std::vector<LawReport> out(checks.size());
  auto run_one = [&](std::size_t k) {
    try {
      out[k] = checks[k].second();
    } catch (const SizeCapError& e) {
      out[k] = LawReport{checks[k].first, false, std::nullopt, true, e.what()};
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, checks.size());
  if (workers == 1) {
    for (std::size_t k = 0; k < checks.size(); ++k) run_one(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < checks.size(); k = next++) run_one(k);
    });
  }
  pool.clear();
  return out;
}

}  // namespace covertop
