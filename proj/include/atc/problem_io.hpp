#pragma once

#include "atc/atiyah.hpp"
#include "atc/chern.hpp"
#include "json.hpp"

namespace atc {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// In-memory model of a problem file: the charted scheme and its named
/// complexes, fully shape-checked (schema, name resolution, cover unit-ideal
/// check, transition completeness). Semantic validation of the lift
/// relations is a separate step (validate_complex).
struct Problem {
  SchemePtr scheme;
  std::map<std::string, BundleComplex> complexes;
};

Problem parse_problem(const std::string& path);
Problem parse_problem_json(const Json& j);

Json problem_to_json(const Problem& p);

/// Wire forms of the representatives; fractions are {num, pow} against the
/// chart-set product denominator.
Json to_json(const ChartedScheme& X, const TruncatedAtiyahRep& rep);
Json to_json(const ChartedScheme& X, const ClassicalAtiyahRep& rep);
Json to_json(const ChartedScheme& X, const TruncChernRep& rep);
Json to_json(const ChartedScheme& X, const ClassChernRep& rep);

TruncatedAtiyahRep truncated_atiyah_from_json(const BundleComplex& E, const Json& j);
TruncChernRep trunc_chern_from_json(const SchemePtr& X, const Json& j);

}  // namespace atc
