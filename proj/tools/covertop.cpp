// covertop: command-line front end for generated covers.

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "covertop/derivation.hpp"
#include "covertop/errors.hpp"
#include "covertop/free.hpp"
#include "covertop/io.hpp"
#include "covertop/lattice.hpp"
#include "covertop/laws.hpp"
#include "covertop/maps.hpp"
#include "covertop/presentations.hpp"
#include "covertop/tensor.hpp"

namespace {

using namespace covertop;
using io::Json;

enum Exit { ok = 0, input_error = 2, cap_error = 3, internal_error = 4 };

//! A presentation together with the cover it generates.
struct Loaded {
  io::PresentationFile file;
  std::optional<ConvergentCover> generated;  // when the file has an operation
  std::optional<GeneratedCover> plain;       // otherwise

  const GeneratedCover& cover() const { return generated ? generated->cover : *plain; }
};

Loaded load(const std::string& path) {
  Loaded out{io::load_presentation(path), std::nullopt, std::nullopt};
  if (out.file.op) {
    out.generated = io::build(out.file);
  } else {
    out.plain = io::build_basic(out.file);
  }
  return out;
}

const ConvergentCover& with_op(const Loaded& l, const std::string& what) {
  if (!l.generated) throw InputError(what + " needs a presentation with an operation");
  return *l.generated;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

//! Splits on commas outside brackets, so "(a,b),(b,c)" has two items.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      items.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  items.push_back(trim(current));
  std::erase(items, std::string{});
  return items;
}

//! Element names as written on the command line. On list bases "a.b" names
//! the list [a,b] and "[]" the empty list.
std::size_t resolve(const Base& base, const std::string& token) {
  if (base.kind() == BaseKind::lists && !token.starts_with("[")) {
    std::string joined = "[";
    for (char ch : token) joined += ch == '.' ? ',' : ch;
    return base.index_of(joined + "]");
  }
  return base.index_of(token);
}

Subset parse_subset(const Base& base, const std::string& text) {
  Subset s(base);
  for (const auto& item : split_top_level(text)) s.insert(resolve(base, item));
  return s;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

LawReport guarded(const std::string& law, const std::function<LawReport()>& run) {
  try {
    return run();
  } catch (const SizeCapError& e) {
    return LawReport{law, false, std::nullopt, true, e.what()};
  }
}

std::string join_names(const Subset& s) {
  std::string out;
  for (const auto& name : s.names()) {
    if (!out.empty()) out += ' ';
    out += name;
  }
  return out;
}

// saturate ------------------------------------------------------------------

int cmd_saturate(const std::string& input, const std::string& subset) {
  const Loaded l = load(input);
  const Subset u = parse_subset(l.file.base, subset);
  std::cout << join_names(l.cover().saturate(u)) << '\n';
  return ok;
}

// lattice -------------------------------------------------------------------

int cmd_lattice(const std::string& input, const std::string& dot) {
  const Loaded l = load(input);
  const SatLattice lattice = sat_lattice(l.cover());
  std::cout << lattice.size() << " points\n";
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw InputError("cannot write '" + dot + "'");
    out << lattice.to_dot();
  }
  return ok;
}

// laws ----------------------------------------------------------------------

int cmd_laws(const std::string& input, std::size_t threads) {
  const Loaded l = load(input);
  std::vector<LawReport> reports;
  if (l.generated) {
    reports = law_suite(l.generated->view(), threads);
  } else {
    reports.push_back(guarded("lhd_formal", [&] { return is_lhd_formal(l.cover()); }));
    reports.push_back(guarded("unary", [&] { return is_unary(l.cover()); }));
  }
  print(io::reports_to_json(reports));
  return ok;
}

// checkmap ------------------------------------------------------------------

int cmd_checkmap(const std::string& source, const std::string& target,
                 const std::string& relation, const std::string& level) {
  const Loaded s = load(source);
  const Loaded t = load(target);
  std::ifstream in(relation);
  if (!in) throw InputError("cannot open '" + relation + "'");
  Json rj;
  try {
    rj = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + relation + "' is not valid JSON: " + e.what());
  }
  const Relation r = io::relation_from_json(s.file.base, t.file.base, rj);

  LawReport report;
  if (level == "basic") {
    report = is_basic_cover_map(r, s.cover(), t.cover());
  } else {
    const OpCover src = with_op(s, "checkmap --level " + level).view();
    const ConvergentCover& tgt = with_op(t, "checkmap --level " + level);
    if (level == "convergent") {
      report = is_convergent_map(r, src, tgt);
    } else if (level == "unital") {
      report = is_unital_map(r, src, tgt);
    } else {
      report = is_formal_map(r, src, tgt);
    }
  }
  Json out = io::report_to_json(report);
  out["level"] = level;
  print(out);
  return ok;
}

// tensor --------------------------------------------------------------------

int cmd_tensor(const std::string& left, const std::string& right, const std::string& out_path) {
  const Loaded s = load(left);
  const Loaded t = load(right);
  const GeneratedCover product = tensor_cover(s.cover(), t.cover());
  const io::PresentationFile file{product.base(), product.axioms(), std::nullopt, std::nullopt,
                                  Mode::basic};
  const Json written = io::to_json(file);
  if (!out_path.empty()) io::save_json(out_path, written);
  const LawReport rectangles = guarded(
      "product_saturation", [&] { return check_product_saturation(s.cover(), t.cover()); });
  print(Json{{"size", product.base().size()},
             {"axioms", product.axioms().size()},
             {"checks", io::reports_to_json({rectangles})}});
  return ok;
}

// convert -------------------------------------------------------------------

SubsetOp cover_preorder(const Cover& cover) {
  const Base& base = cover.base();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = 0; b < base.size(); ++b) {
      if (cover.covers(a, Subset::singleton(base, b))) pairs.emplace_back(a, b);
    }
  }
  return SubsetOp::from_preorder(base, pairs);
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& out_path) {
  const Loaded l = load(input);
  const Cover& cover = l.cover();
  if (to == "dot") {
    const DotConstruction dot = dot_construction(cover);
    std::vector<LawReport> checks = check_dot_isomorphism(dot, cover);
    checks.push_back(guarded("source_lhd_formal", [&] {
      LawReport r = is_lhd_formal(cover);
      r.law = "source_lhd_formal";
      return r;
    }));
    checks.push_back(guarded("dot_bullet_formal", [&] {
      LawReport r = formal_law_suite(dot.cover, dot.op);
      r.law = "dot_bullet_formal";
      return r;
    }));
    print(Json{{"style", "dot"}, {"size", dot.base.size()}, {"checks", io::reports_to_json(checks)}});
    return ok;
  }

  // The converted presentation keeps every axiom of the input cover, so it
  // presents the same cover exactly when the input already has the style.
  const AxiomSet axioms = as_user(l.cover().axioms());
  const bool monoid = l.file.op && l.file.op->kind() == OpKind::monoid;
  Presentation p = [&] {
    if (to == "lhd") return as_lhd(cover);
    if (to == "leq") return as_leq_formal(axioms, monoid ? m_preorder(*l.file.op) : cover_preorder(cover));
    if (!monoid) throw InputError("--to bullet needs a presentation with a monoid operation");
    return as_bullet_formal(axioms, *l.file.op);
  }();
  if (p.style != Style::lhd) {
    p.checks.push_back(guarded("identity_iso", [&] { return identity_iso(cover, p.cover.cover); }));
  }
  const Mode mode = p.style == Style::lhd ? Mode::basic : Mode::formal;
  const io::PresentationFile file{l.file.base, axioms, p.cover.op,
                                  p.style == Style::lhd ? p.cover.unit : std::nullopt, mode};
  const Json written = io::to_json(file);
  if (!out_path.empty()) io::save_json(out_path, written);
  print(Json{{"style", style_name(p.style)},
             {"checks", io::reports_to_json(p.checks)},
             {"presentation", written}});
  return ok;
}

// free ----------------------------------------------------------------------

FreeResult apply_stage(const std::string& stage, const Loaded& l, std::size_t max_len) {
  if (stage == "O") return free_O(l.cover(), max_len);
  const ConvergentCover& c = with_op(l, "free --apply " + stage);
  if (stage == "Q") return free_Q(c);
  return free_L(c);
}

int cmd_free(const std::string& stage, const std::string& input, std::size_t max_len,
             const std::string& out_path) {
  const Loaded l = load(input);
  const FreeResult result = apply_stage(stage, l, max_len);
  const Json written = io::to_json(io::from_cover(result.cover));
  if (!out_path.empty()) io::save_json(out_path, written);
  print(Json{{"stage", stage},
             {"unit_map", io::relation_to_json(result.unit_map, stage, "input")},
             {"validation", io::reports_to_json(result.validation)},
             {"presentation", written}});
  return ok;
}

// derive --------------------------------------------------------------------

int cmd_derive(const std::string& input, const std::string& goal, std::size_t depth,
               const std::string& via, std::size_t max_len, bool text) {
  const Loaded l = load(input);
  std::optional<FreeResult> o, q, f;
  const GeneratedCover* cover = &l.cover();
  if (!via.empty()) {
    o = free_O(l.cover(), max_len);
    cover = &o->cover.cover;
    if (via != "O") {
      q = free_Q(o->cover);
      cover = &q->cover.cover;
    }
    if (via == "L") {
      f = free_L(q->cover);
      cover = &f->cover.cover;
    }
  }
  const Base& base = cover->base();

  const auto sep = goal.find("::");
  if (sep == std::string::npos) throw InputError("goal must look like 'l :: K'");
  const std::size_t element = resolve(base, trim(goal.substr(0, sep)));
  const Subset target = parse_subset(base, goal.substr(sep + 2));

  const auto tree = bounded_derive(cover->axioms(), element, target, depth);
  if (text) {
    std::cout << (tree ? render(*tree, base) : std::string("no derivation within depth ") +
                                                   std::to_string(depth) + "\n");
    return ok;
  }
  print(Json{{"element", base.name(element)},
             {"cover", io::subset_to_json(target)},
             {"depth", depth},
             {"found", tree.has_value()},
             {"tree", tree ? io::derivation_to_json(*tree, base) : Json(nullptr)}});
  return ok;
}

// implication ---------------------------------------------------------------

int cmd_implication(const std::string& input, const std::string& left, const std::string& right) {
  const Loaded l = load(input);
  const ConvergentCover& c = with_op(l, "implication");
  const Subset u = parse_subset(l.file.base, left);
  const Subset v = parse_subset(l.file.base, right);
  print(Json{{"left", io::subset_to_json(u)},
             {"right", io::subset_to_json(v)},
             {"implication", io::subset_to_json(implication(c.cover, c.op, u, v))}});
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generated covers, quantales and locales over finite bases"};
  app.require_subcommand(1);

  std::string input, subset, dot, source, target, relation, level = "basic";
  std::string left, right, out, to, stage, goal, via;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t max_len = 3, depth = default_derivation_depth;
  bool text = false;

  auto* saturate = app.add_subcommand("saturate", "Print the saturation of a subset");
  saturate->add_option("--input", input, "Presentation file")->required();
  saturate->add_option("--subset", subset, "Comma-separated elements")->required();

  auto* lattice = app.add_subcommand("lattice", "Count the saturated subsets");
  lattice->add_option("--input", input, "Presentation file")->required();
  lattice->add_option("--dot", dot, "Write the Hasse diagram in DOT format");

  auto* laws = app.add_subcommand("laws", "Run the law checks as JSON reports");
  laws->add_option("--input", input, "Presentation file")->required();
  laws->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* checkmap = app.add_subcommand("checkmap", "Validate a relation as a cover map");
  checkmap->add_option("--source", source, "Source presentation")->required();
  checkmap->add_option("--target", target, "Target presentation")->required();
  checkmap->add_option("--relation", relation, "Relation file")->required();
  checkmap->add_option("--level", level, "Map level")
      ->check(CLI::IsMember({"basic", "convergent", "unital", "formal"}));

  auto* tensor = app.add_subcommand("tensor", "Tensor product of two covers");
  tensor->add_option("--left", left, "Left presentation")->required();
  tensor->add_option("--right", right, "Right presentation")->required();
  tensor->add_option("--out", out, "Write the product presentation");

  auto* convert = app.add_subcommand("convert", "Change presentation style");
  convert->add_option("--input", input, "Presentation file")->required();
  convert->add_option("--to", to, "Target style")
      ->required()
      ->check(CLI::IsMember({"lhd", "leq", "bullet", "dot"}));
  convert->add_option("--out", out, "Write the converted presentation");

  auto* free = app.add_subcommand("free", "Apply one free construction");
  free->add_option("--apply", stage, "Construction")
      ->required()
      ->check(CLI::IsMember({"O", "Q", "L"}));
  free->add_option("--input", input, "Presentation file")->required();
  free->add_option("--max-len", max_len, "List length bound for O")->check(CLI::Range(1, 16));
  free->add_option("--out", out, "Write the resulting presentation");

  auto* derive = app.add_subcommand("derive", "Search for a bounded derivation");
  derive->add_option("--input", input, "Presentation file")->required();
  derive->add_option("--goal", goal, "Goal 'l :: K', lists written a.b")->required();
  derive->add_option("--depth", depth, "Depth bound");
  derive->add_option("--via", via, "Derive in O, Q(O) or L(Q(O)) of the input")
      ->check(CLI::IsMember({"O", "Q", "L"}));
  derive->add_option("--max-len", max_len, "List length bound for --via")
      ->check(CLI::Range(1, 16));
  derive->add_flag("--text", text, "Print an indented trace instead of JSON");

  auto* impl = app.add_subcommand("implication", "Compute U -> V");
  impl->add_option("--input", input, "Presentation file")->required();
  impl->add_option("--left", left, "U")->required();
  impl->add_option("--right", right, "V")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : input_error;
  }

  try {
    if (*saturate) return cmd_saturate(input, subset);
    if (*lattice) return cmd_lattice(input, dot);
    if (*laws) return cmd_laws(input, threads);
    if (*checkmap) return cmd_checkmap(source, target, relation, level);
    if (*tensor) return cmd_tensor(left, right, out);
    if (*convert) return cmd_convert(input, to, out);
    if (*free) return cmd_free(stage, input, max_len, out);
    if (*derive) return cmd_derive(input, goal, depth, via, max_len, text);
    if (*impl) return cmd_implication(input, left, right);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return cap_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal_error;
  }
  return internal_error;
}
