#pragma once

// JSON wire format. Every from_json here throws std::invalid_argument on
// malformed input; every to_json output parses back to an equal value.

#include <string>

#include "json.hpp"
#include "pvo/symfunc.hpp"
#include "pvo/verifier.hpp"
#include "pvo/vertex.hpp"

namespace pvo {

using Json = nlohmann::json;

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// [{"partition":[..],"num":"..","den":".."}, ...] in reverse-lex order.
Json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

/// {"sectors":[{"charge":c,"value":<SymFunc>}, ...]} by increasing charge.
Json state_to_json(const ChargedState& s);
ChargedState state_from_json(const Json& j);

/// {"vars":[..],"coeffs":[{"exp":[..],"value":<SymFunc>}, ...]}
Json laurent_to_json(const LaurentMap& m);
LaurentMap laurent_from_json(const Json& j);

Json charged_laurent_to_json(const ChargedLaurent& m);
ChargedLaurent charged_laurent_from_json(const Json& j);

/// {"suite","config","cases_run","failures":[{"inputs","lhs","rhs"}],"elapsed_ms"}
Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

/// Compact single-line dump; stable across runs.
std::string dump(const Json& j);

}  // namespace pvo
