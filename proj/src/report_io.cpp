#include "eulerian2/report_io.hpp"

namespace eulerian2 {

std::string format_params(const Params& params)
{
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) {
            out += ' ';
        }
        out += key + "=" + std::to_string(value);
    }
    return out;
}

nlohmann::ordered_json to_json(const IdentityReport& report)
{
    nlohmann::ordered_json j;
    j["identity"] = identity_name(report.id);
    j["passed"] = report.passed();
    j["informational"] = is_informational(report.id);
    j["cases"] = report.cases;
    auto& range = j["range"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.range) {
        range[key] = value;
    }
    if (report.counterexample) {
        const auto& cx = *report.counterexample;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [key, value] : cx.params) {
            params[key] = value;
        }
        j["counterexample"] = {{"params", params}, {"lhs", to_string(cx.lhs)}, {"rhs", to_string(cx.rhs)}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

std::string to_plain(const IdentityReport& report)
{
    std::string status = report.passed() ? "PASS" : "FAIL";
    if (is_informational(report.id)) {
        status = "INFO";
    }
    std::string line = status + " " + std::string(identity_name(report.id)) + " " + format_params(report.range) +
                       " (" + std::to_string(report.cases) + " cases)";
    if (report.counterexample) {
        const auto& cx = *report.counterexample;
        line += ": counterexample " + format_params(cx.params) + " lhs=" + to_string(cx.lhs) +
                " rhs=" + to_string(cx.rhs);
    } else if (is_informational(report.id)) {
        line += ": holds on the sweep";
    }
    return line;
}

}  // namespace eulerian2
