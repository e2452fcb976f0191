#include "covertop/free.hpp"

#include "covertop/errors.hpp"
#include "covertop/maps.hpp"

namespace covertop {

namespace {

LawReport named(LawReport report, std::string law) {
  report.law = std::move(law);
  return report;
}

}  // namespace

CircBasicCover make_circ_basic_cover(AxiomSet axioms, SubsetOp op, Subset unit) {
  return generate(Mode::basic, axioms, op, std::move(unit));
}

std::vector<LawReport> validate_circ_basic_cover(const CircBasicCover& c) {
  if (!c.unit) throw InputError("a circ-basic cover needs a unit");
  std::vector<LawReport> out;
  out.push_back(check_associativity(c.cover, c.op));
  out.push_back(check_commutativity(c.cover, c.op));
  out.push_back(check_unit(c.cover, c.op, *c.unit));
  return out;
}

FreeResult free_O(const GeneratedCover& s, std::size_t max_len) {
  const Base& sb = s.base();
  const Base lb = Base::lists(sb, max_len);
  const std::size_t n = lb.size();

  std::vector<std::optional<Subset>> table;
  table.reserve(n * n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto joined = lb.concat(l, k);
      table.push_back(joined ? std::optional<Subset>(Subset::singleton(lb, *joined))
                             : std::nullopt);
    }
  }
  SubsetOp op = SubsetOp::from_partial_table(lb, std::move(table));

  auto atom_list = [&](std::size_t a) {
    const std::size_t item[] = {a};
    return *lb.list_index(item);
  };

  AxiomSet axioms(lb);
  if (max_len >= 1) {
    for (std::size_t a = 0; a < sb.size(); ++a) {
      const auto& family = s.axioms().of(a);
      for (std::size_t j = 0; j < family.size(); ++j) {
        Subset cover(lb);
        family[j].cover.for_each([&](std::size_t u) { cover.insert(atom_list(u)); });
        axioms.add(atom_list(a),
                   make_id(AxiomTag::list_generator, {j}, "gen(" + family[j].id.label + ")"),
                   std::move(cover));
      }
    }
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto lk = lb.concat(l, k);
      if (!lk) continue;
      const auto kl = lb.concat(k, l);
      axioms.add(*lk,
                 make_id(AxiomTag::list_commutativity, {l, k},
                         "list-comm(" + lb.name(l) + "," + lb.name(k) + ")"),
                 Subset::singleton(lb, *kl));
    }
  }

  const Subset unit = Subset::singleton(lb, 0);
  CircBasicCover o = make_circ_basic_cover(std::move(axioms), std::move(op), unit);

  Relation i(lb, sb);
  if (max_len >= 1) {
    for (std::size_t a = 0; a < sb.size(); ++a) i.relate(atom_list(a), a);
  }

  std::vector<LawReport> validation;
  validation.push_back(named(is_basic_cover_map(i, o.cover, s), "unit_map"));
  for (auto& report : validate_circ_basic_cover(o)) validation.push_back(std::move(report));
  return FreeResult{std::move(o), std::move(i), std::move(validation)};
}

FreeResult free_Q(const CircBasicCover& c) {
  if (!c.unit) throw InputError("Q needs a cover with a unit");
  ConvergentCover q = generate_convergent(c.generators, c.op, c.unit);
  Relation j = identity(c.cover.base());
  std::vector<LawReport> validation;
  validation.push_back(named(is_unital_map(j, q.view(), c), "unit_map"));
  return FreeResult{std::move(q), std::move(j), std::move(validation)};
}

FreeResult free_L(const ConvergentCover& q) {
  ConvergentCover l = generate_formal(q.generators, q.op, q.unit);
  Relation k = identity(q.cover.base());
  std::vector<LawReport> validation;
  if (q.effective_unit()) {
    validation.push_back(named(is_unital_map(k, l.view(), q), "unit_map"));
  } else {
    validation.push_back(named(is_convergent_map(k, l.view(), q), "unit_map"));
  }
  const Subset top = Subset::full(l.cover.base());
  const auto unit = l.effective_unit();
  validation.push_back(l.cover.saturate(*unit) == top
                           ? LawReport::pass("unit_is_top")
                           : LawReport::fail("unit_is_top", Witness{}.subset("I", *unit)));
  return FreeResult{std::move(l), std::move(k), std::move(validation)};
}

Factorization factor_through(FreeStage stage, const Relation& r, const OpCover& source,
                             const FreeResult& free) {
  if (!(r.source() == source.cover.base())) throw BaseMismatch("r must start at the source");
  if (!(r.target() == free.unit_map.target())) throw BaseMismatch("r must end at the input");

  Relation induced = r;
  if (stage == FreeStage::O) {
    if (!source.unit) throw InputError("factoring through O needs a source with a unit");
    const Base& lb = free.cover.cover.base();
    std::vector<Subset> pre;
    pre.reserve(lb.size());
    for (std::size_t l = 0; l < lb.size(); ++l) {
      const auto items = lb.list(l);
      if (items.empty()) {
        pre.push_back(*source.unit);
        continue;
      }
      Subset acc = r.preimage(items[0]);
      for (std::size_t i = 1; i < items.size(); ++i) acc = source.op.lift(acc, r.preimage(items[i]));
      pre.push_back(std::move(acc));
    }
    induced = Relation::from_preimages(source.cover.base(), lb, std::move(pre));
  }

  std::vector<LawReport> validation;
  validation.push_back(
      named(maps_equal(compose(induced, free.unit_map), r, source.cover), "triangle"));
  if (stage == FreeStage::L) {
    validation.push_back(named(is_formal_map(induced, source, free.cover), "formal_map"));
  }
  validation.push_back(named(is_unital_map(induced, source, free.cover), "unital_map"));
  return Factorization{std::move(induced), std::move(validation)};
}

}  // namespace covertop
