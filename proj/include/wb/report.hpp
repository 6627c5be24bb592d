#pragma once
#include <json.hpp>

#include <string>

#include "wb/cohomology.hpp"

namespace wb {

// Reports are built as ordered JSON and rendered to text from that JSON only,
// so the two outputs cannot drift apart; byte-identical across runs with
// equal inputs.
using Json = nlohmann::ordered_json;

Json rank_table_json(const RankTable& t);
Json identity_report_json(const IdentityCheckReport& rep);

std::string render_report(const Json& report);

}  // namespace wb
