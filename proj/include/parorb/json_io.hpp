#pragma once

#include <json.hpp>

#include "parorb/link_pattern.hpp"
#include "parorb/matrix.hpp"
#include "parorb/nilp2.hpp"
#include "parorb/nilp3.hpp"

namespace parorb {

using Json = nlohmann::json;

// {"kind":"olp","n":4,"arrows":[[1,3],[4,2]]}
Json to_json(const OrientedLinkPattern& p);
OrientedLinkPattern olp_from_json(const Json& j);

// {"kind":"eolp","blocks":[3,1],"counts":[[1,1],[0,0]]}, plus derived "dots"
Json to_json(const EnhancedOLP& e);
EnhancedOLP eolp_from_json(const Json& j);

// Rows of "p/q" strings. Integers are accepted on input.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"kind":"decomp3","parts":{"U_{0,1}":2}}
Json to_json(const Decomposition3& d);
Decomposition3 decomposition3_from_json(const Json& j);

Json to_json(const HomProfile& h);

/// Parses text; throws Error(ParseError) on malformed JSON.
Json parse_json(const std::string& text);

}  // namespace parorb
