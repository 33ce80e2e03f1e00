#pragma once

#include <string>

#include <json.hpp>

#include "eulerian2/identities.hpp"

namespace eulerian2 {

/// {"identity", "passed", "informational", "cases", "range", "counterexample"}.
/// Exact values are strings ("p" or "p/q"); counterexample is null on a pass.
nlohmann::ordered_json to_json(const IdentityReport& report);

/// One human-readable line, e.g. "PASS stirling n_max=10 m_max=10 (121 cases)".
std::string to_plain(const IdentityReport& report);

std::string format_params(const Params& params);

}  // namespace eulerian2
