#include "covertop/tensor.hpp"

#include "covertop/errors.hpp"
#include "covertop/maps.hpp"

namespace covertop {

GeneratedCover unit_cover() { return GeneratedCover(AxiomSet(Base::atomic({"*"}))); }

GeneratedCover tensor_cover(const GeneratedCover& s, const GeneratedCover& t) {
  return GeneratedCover(tensor_axioms(s.axioms(), t.axioms()));
}

Relation tensor_map(const Relation& r1, const Relation& r2) {
  const Base source = Base::product(r1.source(), r2.source());
  const Base target = Base::product(r1.target(), r2.target());
  Relation out(source, target);
  for (auto [a1, b1] : r1.pairs()) {
    for (auto [a2, b2] : r2.pairs()) out.relate(source.pair(a1, a2), target.pair(b1, b2));
  }
  return out;
}

Relation gamma(const Base& s1, const Base& s2) {
  const Base source = Base::product(s1, s2);
  const Base target = Base::product(s2, s1);
  Relation out(source, target);
  for (std::size_t a1 = 0; a1 < s1.size(); ++a1) {
    for (std::size_t a2 = 0; a2 < s2.size(); ++a2) {
      out.relate(source.pair(a1, a2), target.pair(a2, a1));
    }
  }
  return out;
}

Relation alpha(const Base& s1, const Base& s2, const Base& s3) {
  const Base s23 = Base::product(s2, s3);
  const Base s12 = Base::product(s1, s2);
  const Base source = Base::product(s1, s23);
  const Base target = Base::product(s12, s3);
  Relation out(source, target);
  for (std::size_t a1 = 0; a1 < s1.size(); ++a1) {
    for (std::size_t a2 = 0; a2 < s2.size(); ++a2) {
      for (std::size_t a3 = 0; a3 < s3.size(); ++a3) {
        out.relate(source.pair(a1, s23.pair(a2, a3)), target.pair(s12.pair(a1, a2), a3));
      }
    }
  }
  return out;
}

Relation lambda(const Base& s) {
  const Base e = unit_cover().base();
  const Base source = Base::product(e, s);
  Relation out(source, s);
  for (std::size_t a = 0; a < s.size(); ++a) out.relate(source.pair(0, a), a);
  return out;
}

Relation rho(const Base& s) {
  const Base e = unit_cover().base();
  const Base source = Base::product(s, e);
  Relation out(source, s);
  for (std::size_t a = 0; a < s.size(); ++a) out.relate(source.pair(a, 0), a);
  return out;
}

namespace {

LawReport named(LawReport report, std::string law) {
  report.law = std::move(law);
  return report;
}

}  // namespace

std::vector<LawReport> check_coherence(const GeneratedCover& s1, const GeneratedCover& s2,
                                       const GeneratedCover& s3, const GeneratedCover& s4) {
  const GeneratedCover e = unit_cover();
  const Base& b1 = s1.base();
  const Base& b2 = s2.base();
  const Base& b3 = s3.base();
  const Base& b4 = s4.base();
  const Base eb = e.base();
  const Base b12 = Base::product(b1, b2);
  const Base b23 = Base::product(b2, b3);
  const Base b34 = Base::product(b3, b4);
  const Relation id1 = identity(b1);
  const Relation id2 = identity(b2);
  const Relation id4 = identity(b4);

  std::vector<LawReport> out;

  {
    const GeneratedCover source = tensor_cover(s1, tensor_cover(s2, tensor_cover(s3, s4)));
    const Relation lhs = compose(alpha(b1, b2, b34), alpha(b12, b3, b4));
    const Relation rhs = compose(compose(tensor_map(id1, alpha(b2, b3, b4)), alpha(b1, b23, b4)),
                                 tensor_map(alpha(b1, b2, b3), id4));
    out.push_back(named(maps_equal(lhs, rhs, source), "pentagon"));
  }
  {
    const GeneratedCover source = tensor_cover(s1, tensor_cover(e, s2));
    const Relation lhs = compose(alpha(b1, eb, b2), tensor_map(rho(b1), id2));
    const Relation rhs = tensor_map(id1, lambda(b2));
    out.push_back(named(maps_equal(lhs, rhs, source), "triangle"));
  }
  {
    const GeneratedCover source = tensor_cover(e, e);
    out.push_back(named(maps_equal(lambda(eb), rho(eb), source), "unit_coherence"));
  }
  {
    const GeneratedCover source = tensor_cover(s2, s1);
    out.push_back(
        named(maps_equal(gamma(b2, b1), gamma(b1, b2).transpose(), source), "symmetry"));
  }
  {
    const GeneratedCover source = tensor_cover(s1, e);
    out.push_back(named(maps_equal(rho(b1), compose(gamma(b1, eb), lambda(b1)), source),
                        "unit_symmetry"));
  }
  {
    const GeneratedCover source = tensor_cover(s1, tensor_cover(s2, s3));
    const Relation lhs =
        compose(compose(alpha(b1, b2, b3), gamma(b12, b3)), alpha(b3, b1, b2));
    const Relation rhs = compose(compose(tensor_map(id1, gamma(b2, b3)), alpha(b1, b3, b2)),
                                 tensor_map(gamma(b1, b3), id2));
    out.push_back(named(maps_equal(lhs, rhs, source), "hexagon"));
  }
  return out;
}

std::vector<LawReport> check_structural_maps(const GeneratedCover& s1, const GeneratedCover& s2,
                                             const GeneratedCover& s3) {
  const GeneratedCover e = unit_cover();
  const GeneratedCover t12 = tensor_cover(s1, s2);
  const GeneratedCover t21 = tensor_cover(s2, s1);
  const GeneratedCover left = tensor_cover(s1, tensor_cover(s2, s3));
  const GeneratedCover right = tensor_cover(t12, s3);
  const GeneratedCover es = tensor_cover(e, s1);
  const GeneratedCover se = tensor_cover(s1, e);

  const Relation g = gamma(s1.base(), s2.base());
  const Relation a = alpha(s1.base(), s2.base(), s3.base());
  const Relation l = lambda(s1.base());
  const Relation r = rho(s1.base());

  std::vector<LawReport> out;
  out.push_back(named(is_basic_cover_map(g, t12, t21), "gamma"));
  out.push_back(named(is_basic_cover_map(g.transpose(), t21, t12), "gamma_inverse"));
  out.push_back(named(is_basic_cover_map(a, left, right), "alpha"));
  out.push_back(named(is_basic_cover_map(a.transpose(), right, left), "alpha_inverse"));
  out.push_back(named(is_basic_cover_map(l, es, s1), "lambda"));
  out.push_back(named(is_basic_cover_map(l.transpose(), s1, es), "lambda_inverse"));
  out.push_back(named(is_basic_cover_map(r, se, s1), "rho"));
  out.push_back(named(is_basic_cover_map(r.transpose(), s1, se), "rho_inverse"));
  return out;
}

LawReport check_product_saturation(const GeneratedCover& s, const GeneratedCover& t) {
  const GeneratedCover st = tensor_cover(s, t);
  const Base& pb = st.base();
  auto product = [&](const Subset& u, const Subset& v) {
    Subset out(pb);
    u.for_each([&](std::size_t a) { v.for_each([&](std::size_t b) { out.insert(pb.pair(a, b)); }); });
    return out;
  };
  const auto us = all_subsets(s.base());
  const auto vs = all_subsets(t.base());
  for (const auto& u : us) {
    const Subset su = s.saturate(u);
    for (const auto& v : vs) {
      if (!st.eq_mod(product(su, t.saturate(v)), product(u, v))) {
        return LawReport::fail("product_saturation", Witness{}.subset("U", u).subset("V", v));
      }
    }
  }
  return LawReport::pass("product_saturation");
}

Relation mu_from_circ(const Cover& cover, const SubsetOp& op) {
  const Base& s = cover.base();
  if (!(op.base() == s)) throw BaseMismatch("cover and operation bases differ");
  const Base ss = Base::product(s, s);
  Relation mu(s, ss);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      op.at(a, b).for_each([&](std::size_t c) { mu.relate(c, ss.pair(a, b)); });
    }
  }
  return mu;
}

SubsetOp circ_from_mu(const Relation& mu) {
  const Base& s = mu.source();
  const Base& ss = mu.target();
  if (ss.kind() != BaseKind::product || !(ss.left() == s) || !(ss.right() == s)) {
    throw InputError("mu must relate S to S x S");
  }
  return SubsetOp::from_function(
      s, [&](std::size_t a, std::size_t b) { return mu.preimage(ss.pair(a, b)); });
}

Relation eta_from_unit(const Base& s, const std::optional<Subset>& unit) {
  const Base e = unit_cover().base();
  Relation eta(s, e);
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (!unit || unit->contains(a)) eta.relate(a, 0);
  }
  return eta;
}

std::vector<LawReport> check_cosemigroup(const GeneratedCover& s, const Relation& mu) {
  const Base& b = s.base();
  const Relation id = identity(b);
  std::vector<LawReport> out;
  out.push_back(named(is_basic_cover_map(mu, s, tensor_cover(s, s)), "comultiplication_map"));
  const Relation lhs = compose(compose(mu, tensor_map(id, mu)), alpha(b, b, b));
  const Relation rhs = compose(mu, tensor_map(mu, id));
  out.push_back(named(maps_equal(lhs, rhs, s), "coassociativity"));
  out.push_back(named(maps_equal(compose(mu, gamma(b, b)), mu, s), "cocommutativity"));
  return out;
}

std::vector<LawReport> check_comonoid(const GeneratedCover& s, const Relation& mu,
                                      const Relation& eta) {
  const Base& b = s.base();
  const Relation id = identity(b);
  std::vector<LawReport> out = check_cosemigroup(s, mu);
  out.push_back(named(is_basic_cover_map(eta, s, unit_cover()), "counit_map"));
  out.push_back(named(maps_equal(compose(mu, tensor_map(eta, id)), lambda(b).transpose(), s),
                      "left_counit"));
  out.push_back(named(maps_equal(compose(mu, tensor_map(id, eta)), rho(b).transpose(), s),
                      "right_counit"));
  return out;
}

}  // namespace covertop
