#pragma once

#include <filesystem>

#include <json.hpp>

#include "mdcalc/descent.hpp"
#include "mdcalc/operator.hpp"
#include "mdcalc/star.hpp"

namespace mdcalc::io {

using Json = nlohmann::ordered_json;

/// {vars, top, floor | "exact", components: {degree: canonical text}}.
Json to_json(const Operator& p);
/// Inverse of to_json; component text is parsed with the expression
/// language and must be homogeneous of the stated degree. SchemaError
/// otherwise.
Operator operator_from_json(const Json& j);

/// {ok, first_defect_degree?, defect_symbol?, reason?}.
Json to_json(const StarUnitarity& cert);

Json to_json(const xm::FiniteGroup& g);
Json to_json(const xm::Shape& s);
Json to_json(const xm::CrossedModuleReport& r);
/// g per open label, h per "i,j" edge key, as element labels.
Json to_json(const xm::Cover& cover, const xm::CrossedModule& cm, const xm::DescentDatum& d);
Json to_json(const xm::H1Classification& r, const xm::Cover& cover, const xm::CrossedModule& cm,
             bool representatives);

/// Group: a name ("Z/4", "S3", ...), {"name": ...} or {"elements": [...],
/// "table": [[label or index, ...], ...]}.
xm::FiniteGroup group_from_json(const Json& j);

/// {g1, g0, d, action}: d maps G^-1 labels to G^0 labels, as an object or as
/// a list in element order; action is "trivial", "conjugation" or
/// {g: {h: ^g h}}. Schema problems are collected into one SchemaError;
/// group or crossed-module axiom failures raise AxiomViolation unless
/// check_axioms is false.
xm::CrossedModule crossed_module_from_json(const Json& j, bool check_axioms = true);
/// {opens, doubles, triples}; triples may be omitted.
xm::Cover cover_from_json(const Json& j);

Json read_json(const std::filesystem::path& path);
xm::CrossedModule load_crossed_module(const std::filesystem::path& path, bool check_axioms = true);
xm::Cover load_cover(const std::filesystem::path& path);

}  // namespace mdcalc::io
