#include <doctest.h>

#include <random>

#include "covertop/errors.hpp"
#include "covertop/laws.hpp"
#include "covertop/presentations.hpp"
#include "fixtures.hpp"

using namespace covertop;

namespace {

bool all_pass(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    if (!r) return false;
  }
  return true;
}

GeneratedCover random_basic(std::size_t n, std::mt19937_64& rng) {
  return GeneratedCover(fixtures::random_axioms(fixtures::letters(n), rng, 4));
}

}  // namespace

TEST_SUITE("presentations") {

TEST_CASE("lhd-formal covers") {
  const GeneratedCover abc(fixtures::abc());
  const LawReport r = is_lhd_formal(abc);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->elements.front().second == "a");

  const GeneratedCover free3{AxiomSet(Base::atomic({"x", "y", "w"}))};
  CHECK(is_lhd_formal(free3));
  const Presentation p = as_lhd(free3);
  CHECK(p.style == Style::lhd);
  CHECK(formal_law_suite(p.cover.cover, p.cover.op));
  CHECK_FALSE(formal_law_suite(as_lhd(abc).cover.cover, as_lhd(abc).cover.op).passed);
}

TEST_CASE("formal covers are lhd-formal and their operation agrees with down") {
  for (const auto& c : fixtures::op_cases()) {
    CAPTURE(c.name);
    const ConvergentCover f = generate_formal(c.user, c.op, c.unit);
    CHECK(is_lhd_formal(f.cover));
    const Base& b = f.cover.base();
    for (const auto& u : all_subsets(b)) {
      for (const auto& v : all_subsets(b)) {
        CHECK(f.cover.eq_mod(c.op.lift(u, v), down_arrow(f.cover, u, v)));
      }
    }
    CHECK(identity_iso(f.cover, as_lhd(f.cover).cover.cover));
  }
}

TEST_CASE("property: as_lhd is formal exactly for lhd-formal covers") {
  std::mt19937_64 rng(79);
  int formal = 0;
  for (int i = 0; i < 60; ++i) {
    const GeneratedCover s = random_basic(1 + i % 4, rng);
    const Presentation p = as_lhd(s);
    const bool lhd = is_lhd_formal(s).passed;
    CHECK(lhd == formal_law_suite(p.cover.cover, p.cover.op).passed);
    formal += lhd;
  }
  CHECK(formal > 5);
}

TEST_CASE("leq-formal covers") {
  const Presentation p = as_leq_formal(AxiomSet(fixtures::pqt_base()), fixtures::pqt_preorder());
  CHECK(p.style == Style::leq);
  CHECK(all_pass(p.checks));
  CHECK(formal_law_suite(p.cover.cover, p.cover.op));
  // p <= t gives p <| {t}.
  const Base& b = p.cover.cover.base();
  CHECK(p.cover.cover.covers(0, Subset::named(b, {"t"})));
  CHECK_FALSE(p.cover.cover.covers(2, Subset::named(b, {"p", "q"})));
}

TEST_CASE("the monoid preorder") {
  const SubsetOp m = m_preorder(fixtures::saturating_monoid());
  CHECK(m.kind() == OpKind::preorder);
  // e = 0, g = 1, h = 2
  CHECK(m.leq(1, 0));
  CHECK(m.leq(2, 0));
  CHECK(m.leq(2, 1));
  CHECK_FALSE(m.leq(0, 1));
  CHECK_FALSE(m.leq(1, 2));
  CHECK_FALSE(m.leq(0, 2));
}

TEST_CASE("bullet and monoid-preorder presentations give the same cover") {
  const SubsetOp monoid = fixtures::saturating_monoid();
  const Presentation bullet = as_bullet_formal(AxiomSet(fixtures::monoid_base()), monoid);
  CHECK(bullet.style == Style::bullet);
  CHECK(formal_law_suite(bullet.cover.cover, bullet.cover.op));
  const ConvergentCover generated = generate_formal(AxiomSet(fixtures::monoid_base()), monoid);
  const SubsetOp leq = m_preorder(monoid);
  const Presentation via_leq = as_leq_formal(as_user(generated.cover.axioms()), leq);
  CHECK(all_pass(via_leq.checks));
  CHECK(identity_iso(bullet.cover.cover, via_leq.cover.cover));
  // a down<=m b is equivalent to a*b.
  const Base& b = monoid.base();
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      CHECK(bullet.cover.cover.eq_mod(monoid.at(x, y),
                                      down_arrow_leq(leq, Subset::singleton(b, x), Subset::singleton(b, y))));
    }
  }
}

TEST_CASE("monoid preorder with user axioms") {
  const SubsetOp monoid = fixtures::saturating_monoid();
  const Base b = fixtures::monoid_base();
  const AxiomSet user = make_axiom_set(b, {{1, Subset::of(b, {2})}});
  const Presentation bullet = as_bullet_formal(user, monoid);
  const ConvergentCover generated = generate_formal(user, monoid);
  const Presentation via_leq = as_leq_formal(as_user(generated.cover.axioms()), m_preorder(monoid));
  CHECK(identity_iso(bullet.cover.cover, via_leq.cover.cover));
  CHECK(formal_law_suite(via_leq.cover.cover, via_leq.cover.op));
}

TEST_CASE("unary and finitary") {
  const GeneratedCover abc(fixtures::abc());
  const LawReport r = is_unary(abc);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->elements.front().second == "a");
  CHECK(r.witness->subsets.front().second == Subset::named(abc.base(), {"b", "c"}));
  CHECK(is_finitary(abc));

  const SubsetOp mn = fixtures::chain_min();
  CHECK(is_unary(generate_formal(AxiomSet(mn.base()), mn).cover));
}

TEST_CASE("dot construction") {
  const SubsetOp mn = fixtures::chain_min();
  const ConvergentCover chain = generate_formal(AxiomSet(mn.base()), mn);
  const DotConstruction dot = dot_construction(chain.cover);
  CHECK(dot.base.size() == 4);
  CHECK(all_pass(check_dot_isomorphism(dot, chain.cover)));
  CHECK(formal_law_suite(dot.cover, dot.op));
  // The empty subset is related to every element of S.
  CHECK(dot.r.preimage(0) == Subset::full(chain.cover.base()));
}

TEST_CASE("property: Dot(S) is isomorphic to S, and bullet-formal iff S is lhd-formal") {
  std::mt19937_64 rng(83);
  int formal = 0;
  for (int i = 0; i < 40; ++i) {
    const GeneratedCover s = random_basic(1 + i % 3, rng);
    const DotConstruction dot = dot_construction(s);
    CHECK(all_pass(check_dot_isomorphism(dot, s)));
    const bool lhd = is_lhd_formal(s).passed;
    CHECK(lhd == formal_law_suite(dot.cover, dot.op).passed);
    CHECK(lhd == is_lhd_formal(dot.cover).passed);
    formal += lhd;
  }
  CHECK(formal > 3);
}

TEST_CASE("identity_iso") {
  const GeneratedCover abc(fixtures::abc());
  const GeneratedCover none{AxiomSet(abc.base())};
  CHECK(identity_iso(abc, abc));
  const LawReport r = identity_iso(abc, none);
  CHECK_FALSE(r.passed);
  CHECK(r.law == "identity_iso");
  CHECK_THROWS_AS(identity_iso(abc, GeneratedCover(AxiomSet(fixtures::chain_base()))), BaseMismatch);
}

}  // TEST_SUITE
