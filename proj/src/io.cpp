#include "covertop/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "covertop/errors.hpp"

namespace covertop::io {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t element(const Base& base, const Json& j) {
  return base.index_of(as_string(j, "element name"));
}

Mode parse_mode(const std::string& s) {
  if (s == "basic") return Mode::basic;
  if (s == "convergent") return Mode::convergent;
  if (s == "formal") return Mode::formal;
  throw InputError("unknown mode '" + s + "'");
}

}  // namespace

Json base_to_json(const Base& base) {
  switch (base.kind()) {
    case BaseKind::atomic: return Json(base.names());
    case BaseKind::product:
      return Json{{"kind", "product"},
                  {"left", base_to_json(base.left())},
                  {"right", base_to_json(base.right())}};
    case BaseKind::lists:
      return Json{{"kind", "lists"}, {"atoms", base_to_json(base.atoms())},
                  {"max_len", base.max_len()}};
    case BaseKind::powerset:
      return Json{{"kind", "powerset"}, {"atoms", base_to_json(base.atoms())}};
  }
  throw InvariantError("unknown base kind");
}

Base base_from_json(const Json& j) {
  if (j.is_array()) {
    std::vector<std::string> names;
    for (const auto& item : j) names.push_back(as_string(item, "base element"));
    return Base::atomic(std::move(names));
  }
  const std::string kind = as_string(require_field(j, "kind"), "base kind");
  if (kind == "product") {
    return Base::product(base_from_json(require_field(j, "left")),
                         base_from_json(require_field(j, "right")));
  }
  if (kind == "lists") {
    const Json& len = require_field(j, "max_len");
    if (!len.is_number_unsigned()) throw InputError("max_len must be a non-negative integer");
    return Base::lists(base_from_json(require_field(j, "atoms")), len.get<std::size_t>());
  }
  if (kind == "powerset") return Base::powerset(base_from_json(require_field(j, "atoms")));
  throw InputError("unknown base kind '" + kind + "'");
}

Json subset_to_json(const Subset& s) { return Json(s.names()); }

Subset subset_from_json(const Base& base, const Json& j) {
  if (!j.is_array()) throw InputError("a subset must be a list of element names");
  Subset s(base);
  for (const auto& item : j) s.insert(element(base, item));
  return s;
}

Json op_to_json(const SubsetOp& op) {
  const Base& base = op.base();
  const std::size_t n = base.size();
  switch (op.kind()) {
    case OpKind::preorder: {
      Json pairs = Json::array();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b && op.leq(a, b)) pairs.push_back(Json{base.name(a), base.name(b)});
        }
      }
      return Json{{"kind", "preorder"}, {"payload", pairs}};
    }
    case OpKind::monoid: {
      Json table = Json::array();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          table.push_back(Json{base.name(a), base.name(b), base.name(op.product(a, b))});
        }
      }
      const auto unit = op.monoid_unit();
      return Json{{"kind", "monoid"},
                  {"payload", Json{{"table", table},
                                   {"unit", unit ? Json(base.name(*unit)) : Json(nullptr)}}}};
    }
    case OpKind::table: {
      Json entries = Json::array();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!op.defined(a, b)) continue;
          entries.push_back(Json{{"args", Json{base.name(a), base.name(b)}},
                                 {"value", subset_to_json(op.at(a, b))}});
        }
      }
      Json out{{"kind", "table"}, {"payload", entries}};
      if (op.is_partial()) out["bounded"] = true;
      return out;
    }
  }
  throw InvariantError("unknown operation kind");
}

SubsetOp op_from_json(const Base& base, const Json& j) {
  const std::string kind = as_string(require_field(j, "kind"), "operation kind");
  const Json& payload = require_field(j, "payload");
  const std::size_t n = base.size();
  if (kind == "table") {
    const bool bounded = j.contains("bounded") && j.at("bounded").is_boolean() &&
                         j.at("bounded").get<bool>();
    if (!payload.is_array()) throw InputError("table payload must be a list");
    std::vector<std::optional<Subset>> entries(n * n);
    for (const auto& e : payload) {
      const Json& args = require_field(e, "args");
      if (!args.is_array() || args.size() != 2) throw InputError("args must be a pair");
      const std::size_t a = element(base, args[0]);
      const std::size_t b = element(base, args[1]);
      if (entries[a * n + b]) {
        throw InputError("duplicate table entry (" + base.name(a) + "," + base.name(b) + ")");
      }
      entries[a * n + b] = subset_from_json(base, require_field(e, "value"));
    }
    if (!bounded) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!entries[a * n + b]) {
            throw InputError("partial operation table: no entry for (" + base.name(a) + "," +
                             base.name(b) + ")");
          }
        }
      }
    }
    return SubsetOp::from_partial_table(base, std::move(entries));
  }
  if (kind == "preorder") {
    if (!payload.is_array()) throw InputError("preorder payload must be a list of pairs");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& p : payload) {
      if (!p.is_array() || p.size() != 2) throw InputError("preorder entries must be pairs");
      pairs.emplace_back(element(base, p[0]), element(base, p[1]));
    }
    return SubsetOp::from_preorder(base, pairs);
  }
  if (kind == "monoid") {
    const Json& table = require_field(payload, "table");
    if (!table.is_array()) throw InputError("monoid table must be a list");
    std::vector<std::optional<std::size_t>> product(n * n);
    for (const auto& t : table) {
      if (!t.is_array() || t.size() != 3) throw InputError("monoid entries must be triples");
      const std::size_t a = element(base, t[0]);
      const std::size_t b = element(base, t[1]);
      if (product[a * n + b]) throw InputError("duplicate monoid entry");
      product[a * n + b] = element(base, t[2]);
    }
    std::vector<std::size_t> full;
    full.reserve(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
      if (!product[k]) {
        throw InputError("partial monoid table: no entry for (" + base.name(k / n) + "," +
                         base.name(k % n) + ")");
      }
      full.push_back(*product[k]);
    }
    std::optional<std::size_t> unit;
    if (payload.contains("unit") && !payload.at("unit").is_null()) {
      unit = element(base, payload.at("unit"));
    }
    return SubsetOp::from_monoid(base, std::move(full), unit);
  }
  throw InputError("unknown operation kind '" + kind + "'");
}

Json to_json(const PresentationFile& p) {
  Json axioms = Json::array();
  for (std::size_t a = 0; a < p.base.size(); ++a) {
    const auto& family = p.axioms.of(a);
    const auto labels = distinct_labels(family);
    for (std::size_t k = 0; k < family.size(); ++k) {
      axioms.push_back(Json{{"elem", p.base.name(a)},
                            {"cover", subset_to_json(family[k].cover)},
                            {"id", labels[k]}});
    }
  }
  return Json{{"base", base_to_json(p.base)},
              {"axioms", axioms},
              {"operation", p.op ? op_to_json(*p.op) : Json(nullptr)},
              {"unit", p.unit ? subset_to_json(*p.unit) : Json(nullptr)},
              {"mode", mode_name(p.mode)}};
}

PresentationFile presentation_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("a presentation must be a JSON object");
  const Base base = base_from_json(require_field(j, "base"));
  AxiomSet axioms(base);
  std::vector<std::size_t> ordinal(base.size(), 0);
  std::vector<std::set<std::string>> labels(base.size());
  if (j.contains("axioms")) {
    const Json& list = j.at("axioms");
    if (!list.is_array()) throw InputError("axioms must be a list");
    for (const auto& entry : list) {
      const std::size_t a = element(base, require_field(entry, "elem"));
      Subset cover = subset_from_json(base, require_field(entry, "cover"));
      const std::size_t k = ++ordinal[a];
      std::string label = entry.contains("id") ? as_string(entry.at("id"), "axiom id")
                                               : "ax" + std::to_string(k);
      if (!labels[a].insert(label).second) {
        throw InputError("duplicate axiom id '" + label + "' for " + base.name(a));
      }
      axioms.add(a, make_id(AxiomTag::user, {k}, std::move(label)), std::move(cover));
    }
  }
  std::optional<SubsetOp> op;
  if (j.contains("operation") && !j.at("operation").is_null()) {
    op = op_from_json(base, j.at("operation"));
  }
  std::optional<Subset> unit;
  if (j.contains("unit") && !j.at("unit").is_null()) unit = subset_from_json(base, j.at("unit"));
  const Mode mode =
      j.contains("mode") ? parse_mode(as_string(j.at("mode"), "mode")) : Mode::basic;
  if (mode != Mode::basic && !op) {
    throw InputError(std::string("mode ") + mode_name(mode) + " needs an operation");
  }
  return PresentationFile{base, std::move(axioms), std::move(op), std::move(unit), mode};
}

PresentationFile load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
  return presentation_from_json(j);
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

bool same_presentation(const PresentationFile& a, const PresentationFile& b) {
  return a.base == b.base && to_json(a) == to_json(b);
}

PresentationFile from_cover(const ConvergentCover& c) {
  return PresentationFile{c.generators.base(), c.generators, c.op, c.unit, c.mode};
}

GeneratedCover build_basic(const PresentationFile& p) { return GeneratedCover(p.axioms); }

ConvergentCover build(const PresentationFile& p) {
  if (!p.op) throw InputError("this command needs a presentation with an operation");
  return generate(p.mode, p.axioms, *p.op, p.unit);
}

Json relation_to_json(const Relation& r, const std::string& source_name,
                      const std::string& target_name) {
  Json pairs = Json::array();
  for (auto [a, b] : r.pairs()) pairs.push_back(Json{r.source().name(a), r.target().name(b)});
  return Json{{"source", source_name}, {"target", target_name}, {"pairs", pairs}};
}

Relation relation_from_json(const Base& source, const Base& target, const Json& j) {
  const Json& pairs = require_field(j, "pairs");
  if (!pairs.is_array()) throw InputError("relation pairs must be a list");
  Relation r(source, target);
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw InputError("relation entries must be pairs");
    r.relate(element(source, p[0]), element(target, p[1]));
  }
  return r;
}

Json report_to_json(const LawReport& r) {
  Json out{{"law", r.law}, {"passed", r.passed}};
  if (r.witness) {
    Json elements = Json::object();
    for (const auto& [role, name] : r.witness->elements) elements[role] = name;
    Json subsets = Json::object();
    for (const auto& [role, s] : r.witness->subsets) subsets[role] = subset_to_json(s);
    out["witness"] = Json{{"elements", elements}, {"subsets", subsets}};
  } else {
    out["witness"] = nullptr;
  }
  if (r.skipped) {
    out["skipped"] = true;
    out["note"] = r.note;
  }
  return out;
}

Json reports_to_json(const std::vector<LawReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

Json derivation_to_json(const DerivationTree& t, const Base& base) {
  Json out{{"goal", base.name(t.element)},
           {"rule", t.rule == DerivationTree::Rule::reflexivity ? "reflexivity" : "infinity"}};
  if (t.axiom) out["axiom_id"] = t.axiom->label;
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(derivation_to_json(c, base));
  out["children"] = children;
  return out;
}

}  // namespace covertop::io
