#pragma once

#include "ladder/cohomology.hpp"
#include "ladder/extension.hpp"
#include "ladder/gl.hpp"
#include "ladder/lie.hpp"
#include "ladder/matrix.hpp"
#include "ladder/module.hpp"
#include "ladder/words.hpp"

#include <json.hpp>

namespace ladder {

using Json = nlohmann::ordered_json;

/// Version tag carried by every report envelope.
inline constexpr int kSchemaVersion = 1;

// Elements. Coefficients are exact "p/q" strings. The *_from_json readers
// throw std::invalid_argument on schema violations.
Json to_json(const LieElement& e);
Json to_json(const GlElement& g);
Json to_json(const CElement& c);
Json to_json(const LadderPoly& p);
Json to_json(const TensorPoly& t);
Json to_json(const ExtElement& v);
Json to_json(const WordLieElement& e, const Alphabet& alphabet);
/// Array of {"word", "c", "alpha_order"}.
Json to_json(const WordCombination& c, const Alphabet& alphabet);
Json to_json(const DseExpansion& x, const Alphabet& alphabet);
Json to_json(const Alphabet& alphabet);
Json to_json(const BettiTable& t);
Json to_json(const FiniteLieAlgebra& algebra);
Json to_json(const Infeasibility& cert);

LieElement lie_from_json(const Json& j);
GlElement gl_from_json(const Json& j);
CElement c_from_json(const Json& j);
LadderPoly poly_from_json(const Json& j);
Alphabet alphabet_from_json(const Json& j);
WordLieElement word_lie_from_json(const Json& j, const Alphabet& alphabet);
/// {"labels": [...], "brackets": [{"left": i, "right": j, "terms": [{"index": k, "c": "p/q"}]}]}
FiniteLieAlgebra algebra_from_json(const Json& j);

}  // namespace ladder
