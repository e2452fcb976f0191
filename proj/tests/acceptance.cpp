// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covertop/derivation.hpp"
#include "covertop/free.hpp"
#include "covertop/laws.hpp"
#include "covertop/maps.hpp"
#include "covertop/oracles.hpp"
#include "covertop/presentations.hpp"
#include "covertop/tensor.hpp"
#include "fixtures.hpp"

using namespace covertop;

namespace {

// Collects the first few problems found while checking one criterion.
class Findings {
 public:
  void fail(const std::string& what) {
    if (problems_.size() < 5) problems_.push_back(what);
    ++count_;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void expect(const LawReport& r, const std::string& where) {
    if (!r) fail(where + ": " + r.law + (r.skipped ? " skipped" : " failed"));
  }
  void expect_all(const std::vector<LawReport>& reports, const std::string& where) {
    for (const auto& r : reports) expect(r, where);
  }
  void time_limit(double seconds, double limit) {
    if (seconds > limit) {
      std::ostringstream s;
      s << "took " << seconds << " s, limit " << limit << " s";
      fail(s.str());
    }
  }

  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string out;
    for (const auto& p : problems_) out += "; " + p;
    if (count_ > problems_.size()) out += "; ... " + std::to_string(count_) + " problems in total";
    return out;
  }

 private:
  std::vector<std::string> problems_;
  std::size_t count_ = 0;
};

// Every presentation the criteria call a fixture.
struct Fixture {
  std::string name;
  AxiomSet user;
  std::optional<SubsetOp> op;
  std::optional<Subset> unit;
};

std::vector<Fixture> fixtures_all() {
  std::vector<Fixture> out;
  out.push_back({"abc", fixtures::abc(), std::nullopt, std::nullopt});
  out.push_back({"free3", AxiomSet(Base::atomic({"x", "y", "w"})), std::nullopt, std::nullopt});
  for (auto& c : fixtures::op_cases()) out.push_back({c.name, c.user, c.op, c.unit});
  return out;
}

std::vector<GeneratedCover> generated_covers() {
  std::vector<GeneratedCover> out;
  for (const auto& f : fixtures_all()) {
    out.emplace_back(f.user);
    if (!f.op) continue;
    out.push_back(generate_convergent(f.user, *f.op, f.unit).cover);
    out.push_back(generate_formal(f.user, *f.op, f.unit).cover);
  }
  return out;
}

Relation random_relation(const Base& s, const Base& t, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  Relation r(s, t);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (coin(rng)) r.relate(a, b);
    }
  }
  return r;
}

std::size_t list_of(const Base& lists, std::initializer_list<std::size_t> atoms) {
  const std::vector<std::size_t> items(atoms);
  return *lists.list_index(items);
}

void saturation_oracle(Findings& f) {
  for (const auto& fx : fixtures_all()) {
    const GeneratedCover c(fx.user);
    for (const auto& u : all_subsets(c.base())) {
      f.expect(c.saturate(u) == oracle_saturate(fx.user, u), fx.name);
    }
  }
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int i = 0; i < 1000; ++i) {
    const AxiomSet random = fixtures::random_axioms(fixtures::letters(size(rng)), rng, 12);
    const GeneratedCover c(random);
    for (const auto& u : all_subsets(random.base())) {
      f.expect(c.saturate(u) == oracle_saturate(random, u), "random presentation " + std::to_string(i));
    }
  }
}

void closure_laws(Findings& f) {
  for (const auto& c : generated_covers()) {
    const auto all = all_subsets(c.base());
    for (const auto& u : all) {
      const Subset su = c.saturate(u);
      f.expect(u.is_subset_of(su), "expansive");
      f.expect(c.saturate(su) == su, "idempotent");
      for (const auto& v : all) {
        const Subset sv = c.saturate(v);
        if (u.is_subset_of(v)) f.expect(su.is_subset_of(sv), "monotone");
        f.expect(c.saturate(su | sv) == c.saturate(u | v), "join equality");
        f.expect(c.saturate(su & sv) == (su & sv), "meet of saturated sets");
      }
    }
  }
}

void leastness(Findings& f) {
  for (const auto& fx : fixtures_all()) {
    if (!fx.op) continue;
    for (const Mode mode : {Mode::convergent, Mode::formal}) {
      const ClosureTable t = semantic_closure_oracle(fx.user, *fx.op, fx.unit, mode);
      const ConvergentCover g = generate(mode, fx.user, *fx.op, fx.unit);
      for (const auto& u : all_subsets(fx.user.base())) {
        f.expect(t.saturate(u) == g.cover.saturate(u), fx.name + " " + mode_name(mode));
      }
    }
  }
}

void convergent_suite(Findings& f) {
  std::vector<ConvergentCover> covers;
  for (const auto& fx : fixtures_all()) {
    if (fx.op) covers.push_back(generate_convergent(fx.user, *fx.op, fx.unit));
  }
  std::mt19937_64 rng(1004);
  for (int i = 0; i < 30; ++i) {
    const Base b = fixtures::letters(2 + i % 3);
    covers.push_back(generate_convergent(fixtures::random_axioms(b, rng, 3), fixtures::random_table(b, rng)));
  }
  for (const auto& c : covers) {
    const Cover& cv = c.cover;
    for (auto check : {check_stability, check_associativity, check_commutativity, check_distributivity,
                       check_well_defined, check_adjunction}) {
      f.expect(check(cv, c.op), "convergent cover on " + std::to_string(cv.base().size()) + " elements");
    }
  }
}

void formal_suite(Findings& f) {
  std::vector<ConvergentCover> covers;
  for (const auto& fx : fixtures_all()) {
    if (fx.op) covers.push_back(generate_formal(fx.user, *fx.op, fx.unit));
  }
  std::mt19937_64 rng(1005);
  for (int i = 0; i < 30; ++i) {
    const Base b = fixtures::letters(2 + i % 3);
    covers.push_back(generate_formal(fixtures::random_axioms(b, rng, 3), fixtures::random_table(b, rng)));
  }
  for (const auto& c : covers) {
    const Cover& cv = c.cover;
    f.expect(check_frame_equality(cv, c.op), "formal");
    f.expect(check_down_coincides(cv, c.op), "formal");
    f.expect(check_top_unit(cv, c.op), "formal");
    const MeetConditions m = evaluate_meet_conditions(cv, c.op);
    f.expect(m.below_chain_agrees() && m.meet_chain_agrees() && m.sat_below_meet && m.meet_below_sat,
             "meet conditions");
  }

  const SubsetOp monoid = fixtures::saturating_monoid();
  const AxiomSet none(monoid.base());
  const ConvergentCover conv = generate_convergent(none, monoid, fixtures::monoid_unit());
  const LawReport weak = check_weakening(conv.cover, monoid);
  f.expect(!weak.passed && weak.witness &&
               weak.witness->elements == std::vector<std::pair<std::string, std::string>>{{"b", "g"}, {"c", "g"}},
           "monoid weakening witness");
  const FreeResult l = free_L(conv);
  f.expect(check_weakening(l.cover.cover, monoid), "monoid after L");
}

void tensor_criterion(Findings& f) {
  std::mt19937_64 rng(1006);
  for (int i = 0; i < 30; ++i) {
    const GeneratedCover s(fixtures::random_axioms(fixtures::letters(1 + i % 3), rng, 3));
    const GeneratedCover t(fixtures::random_axioms(fixtures::letters(1 + (i / 3) % 3), rng, 3));
    f.expect(check_product_saturation(s, t), "product saturation");
    const GeneratedCover p = tensor_cover(s, t);
    const Base& pb = p.base();
    const auto su = all_subsets(s.base());
    const auto tv = all_subsets(t.base());
    for (std::size_t a = 0; a < s.base().size(); ++a) {
      for (const auto& u : su) {
        if (!s.covers(a, u)) continue;
        for (std::size_t b = 0; b < t.base().size(); ++b) {
          for (const auto& v : tv) {
            if (!t.covers(b, v)) continue;
            Subset rect(pb);
            u.for_each([&](std::size_t x) { v.for_each([&](std::size_t y) { rect.insert(pb.pair(x, y)); }); });
            f.expect(p.covers(pb.pair(a, b), rect), "product rule");
          }
        }
      }
    }
  }
  const SubsetOp mn = fixtures::chain_min();
  const GeneratedCover chain = generate_formal(AxiomSet(mn.base()), mn).cover;
  f.expect_all(check_coherence(chain, chain, chain, chain), "chain");
  for (int i = 0; i < 8; ++i) {
    std::vector<GeneratedCover> s;
    for (int k = 0; k < 4; ++k) s.emplace_back(fixtures::random_axioms(fixtures::letters(2), rng, 2));
    f.expect_all(check_coherence(s[0], s[1], s[2], s[3]), "random 2-element covers");
  }
}

void cosemigroup_criterion(Findings& f) {
  for (const auto& fx : fixtures_all()) {
    if (!fx.op) continue;
    const ConvergentCover c = generate_convergent(fx.user, *fx.op, fx.unit);
    const Relation mu = mu_from_circ(c.cover, c.op);
    const SubsetOp back = circ_from_mu(mu);
    const Base& b = c.cover.base();
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        f.expect(c.cover.eq_mod(back.at(x, y), c.op.at(x, y)), fx.name + " circ round trip");
      }
    }
    f.expect(maps_equal(mu_from_circ(c.cover, back), mu, c.cover), fx.name + " mu round trip");
    f.expect_all(check_cosemigroup(c.cover, mu), fx.name);
  }
}

void presentations_criterion(Findings& f) {
  std::vector<GeneratedCover> small;
  for (const auto& c : generated_covers()) {
    if (c.base().size() <= 4) small.push_back(c);
  }
  std::mt19937_64 rng(1008);
  for (int i = 0; i < 10; ++i) small.emplace_back(fixtures::random_axioms(fixtures::letters(4), rng, 4));
  for (const auto& s : small) {
    f.expect_all(check_dot_isomorphism(dot_construction(s), s), "Dot");
  }

  const SubsetOp monoid = fixtures::saturating_monoid();
  const Presentation bullet = as_bullet_formal(AxiomSet(monoid.base()), monoid);
  const Presentation leq = as_leq_formal(as_user(generate_formal(AxiomSet(monoid.base()), monoid).cover.axioms()),
                                         m_preorder(monoid));
  f.expect(identity_iso(bullet.cover.cover, leq.cover.cover), "bullet vs monoid preorder");

  std::vector<std::pair<AxiomSet, SubsetOp>> preorders;
  preorders.emplace_back(AxiomSet(fixtures::pqt_base()), fixtures::pqt_preorder());
  preorders.emplace_back(fixtures::abc(), SubsetOp::from_preorder(fixtures::abc().base(), {{0, 1}}));
  preorders.emplace_back(AxiomSet(monoid.base()), m_preorder(monoid));
  for (int i = 0; i < 20; ++i) {
    const Base b = fixtures::letters(2 + i % 3);
    // A random total preorder by rank keeps transitivity.
    std::uniform_int_distribution<int> rank(0, 2);
    std::vector<int> r;
    for (std::size_t k = 0; k < b.size(); ++k) r.push_back(rank(rng));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        if (r[x] <= r[y]) pairs.emplace_back(x, y);
      }
    }
    preorders.emplace_back(fixtures::random_axioms(b, rng, 3), SubsetOp::from_preorder(b, pairs));
  }
  for (const auto& [user, pre] : preorders) {
    const Presentation p = as_leq_formal(user, pre);
    for (const auto& r : p.checks) {
      if (r.law == "leq_left") f.expect(r, "leq-left");
    }
  }
}

void free_criterion(Findings& f) {
  const SubsetOp monoid = fixtures::saturating_monoid();
  const CircBasicCover c = make_circ_basic_cover(AxiomSet(monoid.base()), monoid, fixtures::monoid_unit());
  const FreeResult q = free_Q(c);
  const FreeResult l = free_L(q.cover);
  f.expect_all(q.validation, "j");
  f.expect_all(l.validation, "k");

  const GeneratedCover abc(fixtures::abc());
  const FreeResult o = free_O(abc, 2);
  const FreeResult qo = free_Q(o.cover);
  const FreeResult lo = free_L(qo.cover);
  f.expect_all(o.validation, "i");
  f.expect_all(qo.validation, "j on O");
  f.expect_all(lo.validation, "k on O");
  for (const auto* chain : {&o, &q}) {
    const Cover& in = chain == &o ? static_cast<const Cover&>(o.cover.cover) : c.cover.cover();
    const Cover& mid = chain == &o ? qo.cover.cover.cover() : q.cover.cover.cover();
    const Cover& top = chain == &o ? lo.cover.cover.cover() : l.cover.cover.cover();
    for (const auto& u : all_subsets(in.base())) {
      f.expect(in.saturate(u).is_subset_of(mid.saturate(u)) && mid.saturate(u).is_subset_of(top.saturate(u)),
               "monotonicity");
    }
  }

  const ConvergentCover source = generate_convergent(AxiomSet(monoid.base()), monoid, fixtures::monoid_unit());
  const GeneratedCover plain{AxiomSet(monoid.base())};
  const FreeResult om = free_O(plain, 3);
  const Factorization fac = factor_through(FreeStage::O, identity(monoid.base()), source.view(), om);
  for (const auto& r : fac.validation) {
    if (r.law == "triangle") f.expect(r, "O triangle");
  }
  const Base& lb = om.cover.cover.base();
  for (std::size_t a = 0; a < monoid.base().size(); ++a) {
    f.expect(source.cover.eq_mod(fac.map.preimage(list_of(lb, {a})), Subset::singleton(monoid.base(), a)),
             "O triangle on generators");
  }

  const Base& ob = o.cover.cover.base();
  const std::size_t head = list_of(ob, {0, 0});
  const Subset goal = Subset::of(ob, {list_of(ob, {1, 0}), list_of(ob, {2, 0})});
  f.expect(!bounded_derive(o.cover.cover.axioms(), head, goal, 6), "derivation absent before Q");
  const auto tree = bounded_derive(qo.cover.cover.axioms(), head, goal, 3);
  f.expect(tree.has_value() && validate_derivation(qo.cover.cover.axioms(), *tree, goal), "derivation after Q");
}

void map_check_criterion(Findings& f) {
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 500; ++i) {
    const Base s = fixtures::letters(1 + i % 4);
    const Base t = fixtures::letters(1 + i % 8);
    const GeneratedCover src(fixtures::random_axioms(s, rng, 4));
    const GeneratedCover tgt(fixtures::random_axioms(t, rng, 6));
    const Relation r = random_relation(s, t, rng, 0.4);
    f.expect(is_basic_cover_map(r, src, tgt, MapMethod::axioms).passed ==
                 is_basic_cover_map(r, src, tgt, MapMethod::exhaustive).passed,
             "relation " + std::to_string(i));
  }
}

struct Criterion {
  const char* title;
  double limit_seconds;  // 0 for no limit
  std::function<void(Findings&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"saturation agrees with the round-based oracle", 5, saturation_oracle},
      {"closure laws, joins and meets", 0, closure_laws},
      {"generated covers are the least ones", 10, leastness},
      {"convergent law suite", 0, convergent_suite},
      {"formal law suite", 0, formal_suite},
      {"tensor product", 10, tensor_criterion},
      {"co-semigroup equivalence", 0, cosemigroup_criterion},
      {"presentations", 0, presentations_criterion},
      {"free pipeline", 0, free_criterion},
      {"axiom-based map check agrees with the exhaustive one", 10, map_check_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Findings f;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(f);
    } catch (const std::exception& e) {
      f.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0) f.time_limit(seconds, criteria[i].limit_seconds);
    failed += !f.ok();
    std::printf("criterion %zu: %s %s (%.2f s)%s\n", i + 1, f.ok() ? "PASS" : "FAIL", criteria[i].title,
                seconds, f.summary().c_str());
  }
  return failed == 0 ? 0 : 1;
}
