#pragma once

#include <json.hpp>

#include "symcalc/errors.hpp"
#include "symcalc/laws.hpp"
#include "symcalc/sw_symbol.hpp"
#include "symcalc/tw_symbol.hpp"
#include "symcalc/w_symbol.hpp"

namespace symcalc::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or unsupported JSON input.
class SchemaError : public Error {
 public:
  using Error::Error;
};

Json to_json(const WSymbol& p);
Json to_json(const SWSymbol& p);
Json to_json(const TWSymbol& f);
Json to_json(const PrecisionWindow& w);
Json to_json(const LawResult& law);
Json to_json(const SuiteReport& report);

WSymbol w_from_json(const Json& j);
SWSymbol sw_from_json(const Json& j);
TWSymbol tw_from_json(const Json& j);
PrecisionWindow window_from_json(const Json& j);

}  // namespace symcalc::cli
