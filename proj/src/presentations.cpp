#include "covertop/presentations.hpp"

#include "covertop/errors.hpp"
#include "covertop/limits.hpp"
#include "covertop/maps.hpp"

namespace covertop {

const char* style_name(Style style) {
  switch (style) {
    case Style::circ: return "circ";
    case Style::lhd: return "lhd";
    case Style::leq: return "leq";
    case Style::bullet: return "bullet";
  }
  return "?";
}

LawReport is_lhd_formal(const Cover& cover) {
  const Base& base = cover.base();
  caps::require(base.size(), caps::subset_pair_laws, "lhd-formal check");
  const auto subsets = all_subsets(base);
  for (const auto& u : subsets) {
    const Subset su = cover.saturate(u);
    for (const auto& v : subsets) {
      const Subset both = su & cover.saturate(v);
      const Subset target = cover.saturate(down_arrow(cover, u, v));
      for (std::size_t a : both.elements()) {
        if (!target.contains(a)) {
          return LawReport::fail("lhd_formal",
                                 Witness{}.element("a", base.name(a)).subset("U", u).subset("V", v));
        }
      }
    }
  }
  return LawReport::pass("lhd_formal");
}

Presentation as_lhd(const Cover& cover) {
  return Presentation{Style::lhd,
                      OpCover{cover, down_op(cover), Subset::full(cover.base())},
                      {is_lhd_formal(cover)}};
}

Presentation as_leq_formal(const AxiomSet& user, const SubsetOp& preorder) {
  if (preorder.kind() != OpKind::preorder) throw InputError("a preorder operation is required");
  const ConvergentCover generated = generate_formal(user, preorder);
  const Base& base = user.base();
  LawReport leq_left = LawReport::pass("leq_left");
  for (std::size_t a = 0; a < base.size() && leq_left.passed; ++a) {
    for (std::size_t b = 0; b < base.size(); ++b) {
      if (preorder.leq(a, b) && !generated.cover.covers(a, Subset::singleton(base, b))) {
        leq_left = LawReport::fail("leq_left",
                                   Witness{}.element("a", base.name(a)).element("b", base.name(b)));
        break;
      }
    }
  }
  Presentation out{Style::leq, generated.view(), {leq_left}};
  if (base.size() <= caps::effective(caps::subset_pair_laws)) {
    out.checks.push_back(is_lhd_formal(generated.cover));
  }
  return out;
}

Presentation as_bullet_formal(const AxiomSet& user, const SubsetOp& monoid) {
  if (monoid.kind() != OpKind::monoid) throw InputError("a monoid operation is required");
  return Presentation{Style::bullet, generate_formal(user, monoid).view(), {}};
}

SubsetOp m_preorder(const SubsetOp& monoid) {
  if (monoid.kind() != OpKind::monoid) throw InputError("a monoid operation is required");
  const Base& base = monoid.base();
  const std::size_t n = base.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool below = a == b;
      for (std::size_t l = 0; l < n && !below; ++l) {
        below = monoid.product(l, b) == a || monoid.product(b, l) == a;
        for (std::size_t r = 0; r < n && !below; ++r) {
          below = monoid.product(monoid.product(l, b), r) == a;
        }
      }
      if (below) pairs.emplace_back(a, b);
    }
  }
  return SubsetOp::from_preorder(base, pairs);
}

bool is_finitary(const Cover& /*cover*/) { return true; }

LawReport is_unary(const Cover& cover) {
  const Base& base = cover.base();
  caps::require(base.size(), caps::element_laws, "unary check");
  std::vector<Subset> singles;
  for (std::size_t a = 0; a < base.size(); ++a) singles.push_back(cover.saturate(a));
  for (const auto& u : all_subsets(base)) {
    Subset reachable(base);
    u.for_each([&](std::size_t x) { reachable |= singles[x]; });
    const Subset missing = cover.saturate(u) - reachable;
    if (!missing.empty()) {
      return LawReport::fail(
          "unary", Witness{}.element("a", base.name(missing.elements().front())).subset("U", u));
    }
  }
  return LawReport::pass("unary");
}

DotConstruction dot_construction(const Cover& s) {
  const Base& sb = s.base();
  caps::require(sb.size(), caps::dot_source, "dot construction");
  const Base pw = Base::powerset(sb);
  std::vector<Subset> sats;
  for (std::size_t a = 0; a < sb.size(); ++a) sats.push_back(s.saturate(a));

  std::vector<Subset> r_pre;
  r_pre.reserve(pw.size());
  for (std::size_t l = 0; l < pw.size(); ++l) {
    Subset meet = Subset::full(sb);
    for (std::size_t a = 0; a < sb.size(); ++a) {
      if (l >> a & 1U) meet &= sats[a];
    }
    r_pre.push_back(std::move(meet));
  }
  Relation r = Relation::from_preimages(sb, pw, r_pre);

  Relation r_prime(pw, sb);
  for (std::size_t l = 0; l < pw.size(); ++l) {
    for (std::size_t b = 0; b < sb.size(); ++b) {
      if (r_pre[l].is_subset_of(sats[b])) r_prime.relate(l, b);
    }
  }

  Cover cover(pw, [r, s, pw, r_pre](const Subset& k) {
    const Subset target = s.saturate(r.rminus(k));
    Subset out(pw);
    for (std::size_t l = 0; l < pw.size(); ++l) {
      if (r_pre[l].is_subset_of(target)) out.insert(l);
    }
    return out;
  });

  SubsetOp op = SubsetOp::from_function(
      pw, [&](std::size_t l, std::size_t k) { return Subset::singleton(pw, l | k); });
  return DotConstruction{pw, std::move(cover), std::move(op), std::move(r), std::move(r_prime)};
}

namespace {

LawReport named(LawReport report, std::string law) {
  report.law = std::move(law);
  return report;
}

}  // namespace

std::vector<LawReport> check_dot_isomorphism(const DotConstruction& dot, const Cover& s) {
  std::vector<LawReport> out;
  out.push_back(named(is_basic_cover_map(dot.r, s, dot.cover), "r_basic"));
  out.push_back(named(is_basic_cover_map(dot.r_prime, dot.cover, s), "r_prime_basic"));
  out.push_back(
      named(maps_equal(compose(dot.r, dot.r_prime), identity(s.base()), s), "r_then_r_prime"));
  out.push_back(named(maps_equal(compose(dot.r_prime, dot.r), identity(dot.base), dot.cover),
                      "r_prime_then_r"));
  return out;
}

LawReport identity_iso(const Cover& a, const Cover& b) {
  if (!(a.base() == b.base())) throw BaseMismatch("identity_iso needs covers on one base");
  const Relation id = identity(a.base());
  for (LawReport report : {is_basic_cover_map(id, a, b), is_basic_cover_map(id, b, a)}) {
    if (!report.passed) {
      report.law = "identity_iso";
      return report;
    }
  }
  return LawReport::pass("identity_iso");
}

LawReport formal_law_suite(const Cover& cover, const SubsetOp& op) {
  for (auto check : {check_stability, check_associativity, check_commutativity, check_weakening,
                     check_contraction, check_frame_equality}) {
    LawReport report = check(cover, op);
    if (!report.passed) return report;
  }
  return LawReport::pass("formal_law_suite");
}

}  // namespace covertop
