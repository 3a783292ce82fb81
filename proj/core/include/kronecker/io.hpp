#pragma once

// JSON artifacts. Integers and rationals are written as decimal strings ("p/q" for rationals)
// so no precision is lost; every artifact carries a schema version and the code version.

#include "kronecker/hilbert.hpp"
#include "kronecker/matching_field.hpp"
#include "kronecker/mirror.hpp"
#include "kronecker/toric.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace kronecker {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
std::string code_version();

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"schema_version", "code_version", "kind", "data"}.
Json make_artifact(const std::string& kind, Json data);
/// Checks schema version and kind; returns the data member.
const Json& artifact_data(const Json& artifact, const std::string& kind);

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);

Json to_json(const QuiverSpec& s);
QuiverSpec quiver_from_json(const Json& j);

Json to_json(const Cone& c);
Cone cone_from_json(const Json& j);

Json to_json(const HilbertBasis& hb);
HilbertBasis hilbert_from_json(const Json& j);

Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

Json to_json(const FanRays& f);
FanRays fan_from_json(const Json& j);

Json to_json(const ToricReport& t);

Json to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

Json period_to_json(const std::vector<Integer>& period);
std::vector<Integer> period_from_json(const Json& j);

Json to_json(const NewtonInvariants& inv);

Json to_json(const Grading& g);
Grading grading_from_json(const Json& j);

Json to_json(const SemiInvariant& f);

/// Array of rows, each an array of [first, second] labels.
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json to_json(const PipelineReport& r);

/// Rows separated by '|', cells as two digits "ik" or "i,k" separated by spaces.
std::string format_tableau(const Tableau& t);
Tableau parse_tableau(std::string_view text);

}  // namespace kronecker
