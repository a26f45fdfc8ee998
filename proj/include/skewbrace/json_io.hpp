#pragma once

#include <json.hpp>

#include "skewbrace/constructions.hpp"
#include "skewbrace/enumeration.hpp"
#include "skewbrace/solution.hpp"
#include "skewbrace/verify.hpp"

namespace skewbrace {

using Json = nlohmann::json;

// Loaders validate what they read and throw BadInput for malformed JSON.

Json table_to_json(const Table& t);
Table table_from_json(const Json& j);

// {"order": n, "table": [[...]]}
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// {"order": n, "add": [[...]], "circle": [[...]]}
Json brace_to_json(const SkewBrace& a);
SkewBrace brace_from_json(const Json& j);

// {"size": n, "lambda": [[...]], "rho": [[...]]}
Json solution_to_json(const Solution& s);
Solution solution_from_json(const Json& j);

// {"B": group, "C": group, "phi": [[...]], "psi": [[...]], "gamma": [[...]]?}
// where row c of each hom table is the image of c as a permutation of B.
Json spec_to_json(const ConstructionSpec& s);
ConstructionSpec spec_from_json(const Json& j);

Json properties_to_json(const PropertyVector& v);
Json enumeration_to_json(const EnumerationResult& e);
Json witness_to_json(const SupersolubleWitness& w);
Json report_to_json(const VerificationReport& r);

// Reads a JSON document from a file; throws BadInput.
Json read_json_file(const std::string& path);

}  // namespace skewbrace
