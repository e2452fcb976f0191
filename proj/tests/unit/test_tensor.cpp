#include <doctest.h>

#include <random>

#include "covertop/lattice.hpp"
#include "covertop/maps.hpp"
#include "covertop/tensor.hpp"
#include "fixtures.hpp"

using namespace covertop;

namespace {

GeneratedCover chain_formal() {
  const SubsetOp mn = fixtures::chain_min();
  return generate_formal(AxiomSet(mn.base()), mn).cover;
}

bool all_pass(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    if (!r) return false;
  }
  return true;
}

const LawReport& find(const std::vector<LawReport>& reports, std::string_view law) {
  for (const auto& r : reports) {
    if (r.law == law) return r;
  }
  FAIL("missing law " << law);
  return reports.front();
}

Relation random_relation(const Base& s, const Base& t, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.4);
  Relation r(s, t);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (coin(rng)) r.relate(a, b);
    }
  }
  return r;
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("product axioms") {
  const GeneratedCover s(fixtures::abc());
  const GeneratedCover t(AxiomSet(Base::atomic({"x", "y", "w"})));
  const GeneratedCover p = tensor_cover(s, t);
  CHECK(p.base().size() == 9);
  CHECK(p.axioms().size() == s.axioms().size() * 3 + 3 * t.axioms().size());
  CHECK(sat_lattice(p).size() == 343);
}

TEST_CASE("chain tensor chain") {
  const GeneratedCover c = chain_formal();
  const GeneratedCover p = tensor_cover(c, c);
  CHECK(sat_lattice(p).size() == 6);
  const Base& b = p.base();
  CHECK(p.saturate(Subset::singleton(b, b.pair(1, 1))) == Subset::full(b));
  CHECK(check_product_saturation(c, c));
}

TEST_CASE("tensor unit") {
  const GeneratedCover e = unit_cover();
  CHECK(e.base().size() == 1);
  CHECK(e.base().name(0) == "*");
  CHECK(e.axioms().size() == 0);
  const GeneratedCover c = chain_formal();
  CHECK(all_pass(check_structural_maps(c, e, c)));
}

TEST_CASE("coherence on the chain") {
  const GeneratedCover c = chain_formal();
  const auto reports = check_coherence(c, c, c, c);
  CHECK(reports.size() == 6);
  CHECK(all_pass(reports));
}

TEST_CASE("property: structure and coherence on small covers") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 12; ++i) {
    std::vector<GeneratedCover> s;
    for (int k = 0; k < 4; ++k) {
      const Base b = fixtures::letters(1 + (i + k) % 2);
      s.emplace_back(fixtures::random_axioms(b, rng, 2));
    }
    CHECK(all_pass(check_coherence(s[0], s[1], s[2], s[3])));
    CHECK(all_pass(check_structural_maps(s[0], s[1], s[2])));
    CHECK(check_product_saturation(s[0], s[1]));
  }
}

TEST_CASE("property: product saturation") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 40; ++i) {
    const GeneratedCover s(fixtures::random_axioms(fixtures::letters(1 + i % 3), rng, 3));
    const GeneratedCover t(fixtures::random_axioms(fixtures::letters(1 + i % 4), rng, 3));
    CHECK(check_product_saturation(s, t));
  }
}

TEST_CASE("property: tensor of maps is a map") {
  std::mt19937_64 rng(71);
  int validated = 0;
  for (int i = 0; i < 2000 && validated < 25; ++i) {
    const Base b1 = fixtures::letters(2), b2 = fixtures::letters(1 + i % 3);
    const GeneratedCover s1(fixtures::random_axioms(b1, rng, 2)), t1(fixtures::random_axioms(b1, rng, 2));
    const GeneratedCover s2(fixtures::random_axioms(b2, rng, 2)), t2(fixtures::random_axioms(b2, rng, 2));
    const Relation r1 = random_relation(b1, b1, rng), r2 = random_relation(b2, b2, rng);
    if (!is_basic_cover_map(r1, s1, t1) || !is_basic_cover_map(r2, s2, t2)) continue;
    ++validated;
    CHECK(is_basic_cover_map(tensor_map(r1, r2), tensor_cover(s1, s2), tensor_cover(t1, t2)));
  }
  CHECK(validated >= 10);
}

TEST_CASE("functoriality") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 50; ++i) {
    const Base a = fixtures::letters(2), b = fixtures::letters(3), c = fixtures::letters(2);
    const Relation r1 = random_relation(a, b, rng), s1 = random_relation(b, c, rng);
    const Relation r2 = random_relation(c, a, rng), s2 = random_relation(a, b, rng);
    CHECK(tensor_map(compose(r1, s1), compose(r2, s2)) ==
          compose(tensor_map(r1, r2), tensor_map(s1, s2)));
    CHECK(tensor_map(identity(a), identity(b)) == identity(Base::product(a, b)));
  }
}

TEST_CASE("comultiplication round trip") {
  for (const auto& c : fixtures::op_cases()) {
    CAPTURE(c.name);
    const ConvergentCover g = generate_convergent(c.user, c.op, c.unit);
    const Relation mu = mu_from_circ(g.cover, c.op);
    const SubsetOp back = circ_from_mu(mu);
    const Base& b = g.cover.base();
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) CHECK(back.at(x, y) == c.op.at(x, y));
    }
  }
}

TEST_CASE("convergent covers give cosemigroups") {
  for (const auto& c : fixtures::op_cases()) {
    CAPTURE(c.name);
    const ConvergentCover g = generate_convergent(c.user, c.op, c.unit);
    CHECK(all_pass(check_cosemigroup(g.cover, mu_from_circ(g.cover, c.op))));
    if (c.unit) {
      const Relation eta = eta_from_unit(g.cover.base(), c.unit);
      CHECK(all_pass(check_comonoid(g.cover, mu_from_circ(g.cover, c.op), eta)));
    }
    const ConvergentCover f = generate_formal(c.user, c.op, c.unit);
    const Relation eta = eta_from_unit(f.cover.base(), f.effective_unit());
    CHECK(all_pass(check_comonoid(f.cover, mu_from_circ(f.cover, c.op), eta)));
  }
}

TEST_CASE("a non-associative table fails coassociativity") {
  const Base b = Base::atomic({"a", "b"});
  // delta(a,a) = {b}, delta(b,a) = {a}: (aa)a = {a}, a(aa) is empty.
  const SubsetOp op = SubsetOp::from_table(
      b, {Subset::of(b, {1}), Subset(b), Subset::of(b, {0}), Subset(b)});
  const GeneratedCover s{AxiomSet(b)};
  const auto reports = check_cosemigroup(s, mu_from_circ(s, op));
  CHECK(find(reports, "comultiplication_map"));
  CHECK_FALSE(find(reports, "coassociativity").passed);
  CHECK_FALSE(find(reports, "cocommutativity").passed);
}

}  // TEST_SUITE
