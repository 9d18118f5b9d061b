#include "daha/report.hpp"

#include <sstream>

namespace daha {

std::string library_version() { return "0.1.0"; }

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["config"] = config;
    j["config"]["version"] = library_version();
    j["suites"] = nlohmann::json::array();
    for (const auto& s : suites) {
        nlohmann::json js;
        js["name"] = s.name;
        js["cases"] = static_cast<int>(s.cases.size());
        js["passes"] = s.passes();
        js["failures"] = nlohmann::json::array();
        for (const auto& c : s.cases)
            if (!c.pass) js["failures"].push_back({{"case", c.name}, {"witness", c.witness}});
        j["suites"].push_back(js);
    }
    j["timings"] = include_timings ? timings : nlohmann::json::object();
    return j;
}

std::string Report::emit_json() const {
    // nlohmann::json objects iterate in sorted key order, so dump() is
    // canonical for fixed content
    return to_json().dump(2) + "\n";
}

std::string Report::emit_csv() const {
    std::ostringstream os;
    os << "suite,case,pass,witness\n";
    auto esc = [](const std::string& s) {
        std::string r = "\"";
        for (char c : s) {
            if (c == '"') r += "\"\"";
            else r += c;
        }
        return r + "\"";
    };
    for (const auto& s : suites)
        for (const auto& c : s.cases)
            os << esc(s.name) << "," << esc(c.name) << "," << (c.pass ? 1 : 0) << ","
               << esc(c.witness) << "\n";
    return os.str();
}

} // namespace daha
