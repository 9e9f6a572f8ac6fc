#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "stabclass/check.hpp"
#include "stabclass/classify.hpp"
#include "stabclass/modcmp.hpp"

namespace stabclass {

using Json = nlohmann::ordered_json;

Json profile_json(const FixedPointProfile& profile);
Json check_json(const CheckReport& report);
/// One entry per Q: {"q", "inj_sizes", "rep_sizes", "cen_sizes", "profiles", "iso", ...}.
Json per_q_json(const Verdict& verdict);
Json verdict_json(const Verdict& verdict);

/// Top-level document with the stable key order
/// command, inputs, verdict, per_q, props, lemmas.
Json report_document(const std::vector<std::string>& command, Json inputs, Json verdict, Json per_q, Json props,
                     Json lemmas);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);

}  // namespace stabclass
