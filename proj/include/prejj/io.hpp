#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prejj/classification.hpp"
#include "prejj/double_construction.hpp"
#include "prejj/matched_pairs.hpp"
#include "prejj/representations.hpp"

namespace prejj::io {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Malformed input; the message carries a line/column or a JSON pointer.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Parses JSON text; `source` names the input in error messages.
Json parse_json(const std::string &text, const std::string &source = "<input>");
Json read_json_file(const std::string &path);
/// Two-space indented with a trailing newline.
std::string dump(const Json &j);

Json to_json(const Field &f);
Field field_from_json(const Json &j, const std::string &path = "/field");

Json to_json(const Scalar &s);
Json to_json(const Vector &v);
Json to_json(const LinearMap &m);

/// {dim, field, basis, products: [{i, j, coeffs}]}, zero products omitted,
/// sorted by (i, j); indices are 0-based.
Json to_json(const Algebra &a);
/// `field` overrides the file's own field; coefficients are read into it.
Algebra algebra_from_json(const Json &j, const std::optional<Field> &field = std::nullopt,
                          const std::string &path = "");

Json to_json(const PreJJBimodule &bm);
PreJJBimodule bimodule_from_json(const Json &j, const std::optional<Field> &field = std::nullopt);
Json to_json(const JJRep &rep);
JJRep rep_from_json(const Json &j, const std::optional<Field> &field = std::nullopt);
Json to_json(const PreJJMatchedPair &mp);
PreJJMatchedPair prejj_matched_pair_from_json(const Json &j, const std::optional<Field> &field = std::nullopt);
Json to_json(const JJMatchedPair &mp);
JJMatchedPair jj_matched_pair_from_json(const Json &j, const std::optional<Field> &field = std::nullopt);

Json to_json(const CheckReport &r);

/// Table fixture: {"entries": [{"left": ["e1","e1*"], "right": [...],
/// "expected": [coeffs]}]}. Terms may be labels or 0-based indices.
std::vector<TableEntry> table_from_json(const Json &j, const Algebra &ambient);
Json to_json(const Algebra &ambient, const ConformanceEntry &e);

Json to_json(const DoubleConstruction &d);
Json to_json(const ConstantTuple &t);
/// Deterministic: no timing or worker count.
Json to_json(const OrbitCensus &c);

/// Multiplication table lines "e_i * e_j = ..." sorted by (i, j), nonzero
/// products only; "all products vanish" for the zero algebra.
std::string render_table(const Algebra &a);

} // namespace prejj::io
