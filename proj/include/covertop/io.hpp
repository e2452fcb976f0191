#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "covertop/axiom_set.hpp"
#include "covertop/derivation.hpp"
#include "covertop/generation.hpp"
#include "covertop/laws.hpp"
#include "covertop/relation.hpp"

namespace covertop::io {

using Json = nlohmann::ordered_json;

//! A presentation as stored on disk:
//!
//!   {"base": [...], "axioms": [{"elem": "a", "cover": ["b","c"], "id": "ax1"}],
//!    "operation": null | {"kind": "table"|"preorder"|"monoid", "payload": ...},
//!    "unit": null | [...], "mode": "basic"|"convergent"|"formal"}
//!
//! "base" is a list of names, or an object describing a product, list or
//! powerset base. "id" is optional.
struct PresentationFile {
  Base base;
  AxiomSet axioms;
  std::optional<SubsetOp> op;
  std::optional<Subset> unit;
  Mode mode = Mode::basic;
};

Json base_to_json(const Base& base);
Base base_from_json(const Json& j);

Json subset_to_json(const Subset& s);
Subset subset_from_json(const Base& base, const Json& j);

Json op_to_json(const SubsetOp& op);
SubsetOp op_from_json(const Base& base, const Json& j);

Json to_json(const PresentationFile& p);
PresentationFile presentation_from_json(const Json& j);
PresentationFile load_presentation(const std::string& path);
void save_json(const std::string& path, const Json& j);

//! Same base, axioms (ids and covers), operation table, unit and mode.
bool same_presentation(const PresentationFile& a, const PresentationFile& b);

PresentationFile from_cover(const ConvergentCover& c);
//! The cover generated from the user axioms alone.
GeneratedCover build_basic(const PresentationFile& p);
//! The cover generated according to the mode; needs an operation.
ConvergentCover build(const PresentationFile& p);

//! {"source": ..., "target": ..., "pairs": [["a","x"], ...]}
Json relation_to_json(const Relation& r, const std::string& source_name,
                      const std::string& target_name);
Relation relation_from_json(const Base& source, const Base& target, const Json& j);

Json report_to_json(const LawReport& r);
Json reports_to_json(const std::vector<LawReport>& reports);

//! {"goal": element, "rule": "reflexivity"|"infinity", "axiom_id"?: label, "children": [...]}
Json derivation_to_json(const DerivationTree& t, const Base& base);

}  // namespace covertop::io
