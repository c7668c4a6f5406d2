#pragma once

// JSON forms of the library's values.
//
//   polynomial  [{"coeff": "-3", "x": [[1,2]], "y": [[4,1]]}, ...]  canonical term order
//   composition [3,2]
//   expansion   [{"gamma": [..], "coeff": polynomial}, ...]          ordered by gamma
//   tableau     {"c": 7, "a": 4, "edges": [1,3]}
//   skyline     {"gamma": [..], "iota": [..], "jota": [..], "rows": [tableau, ...]}
//   record      {"alpha": [..], "beta": [..], "gamma": [..], "coeff": polynomial}

#include <json.hpp>

#include "dqsym/compositions.hpp"
#include "dqsym/lrcalc.hpp"
#include "dqsym/polyring.hpp"
#include "dqsym/qsym.hpp"
#include "dqsym/tableaux.hpp"

namespace dqsym {

using Json = nlohmann::json;

Json to_json(const Polynomial& p);
Json to_json(const Composition& c);
Json to_json(const Expansion& e);
Json to_json(const SkewEdgeTableau& s);
Json to_json(const SkylineTableau& t);
Json to_json(const CoefficientRecord& r);

/// The parsers throw std::invalid_argument on malformed input.
Polynomial polynomial_from_json(const Json& j);
Composition composition_from_json(const Json& j);
Expansion expansion_from_json(const Json& j);
SkewEdgeTableau tableau_from_json(const Json& j);

}  // namespace dqsym
