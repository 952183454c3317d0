#pragma once

#include <json.hpp>

#include "noc/bounds.hpp"
#include "noc/code.hpp"
#include "noc/search.hpp"

namespace noc {

// Machine-readable output uses insertion-ordered JSON so that repeated runs
// are byte-identical (elapsed_ms excepted). Exact values keep their exactness:
// big integers are emitted as decimal strings, rationals as "num/den".
using Json = nlohmann::ordered_json;

Json to_json(const SearchResult& result);
Json to_json(const Witness& witness, int q);
Json to_json(const BoundReport& report);
Json to_json(const LengthReport& report);

// Report for a verification run: overall status, prefix-code flag, and the
// witness when the code is overlapping.
Json verify_report_json(const Code& S, const std::optional<Witness>& witness);

} // namespace noc
