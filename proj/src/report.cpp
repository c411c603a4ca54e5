#include "skein/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace skein {

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string id, std::string anchor, bool pass, std::string witness) {
    checks.push_back({std::move(id), std::move(anchor), pass, std::move(witness)});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
        Check copy = c;
        if (!prefix.empty()) copy.id = prefix + "/" + copy.id;
        checks.push_back(std::move(copy));
    }
}

const Check* Report::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

std::string Report::to_json(bool include_duration) const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = suite;
    j["status"] = passed() ? "PASS" : "FAIL";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        e["status"] = c.pass ? "PASS" : "FAIL";
        if (!c.witness.empty()) e["witness"] = c.witness;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    if (include_duration) j["duration_ms"] = duration_ms;
    return j.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream out;
    std::size_t npass = 0;
    for (const auto& c : checks) {
        if (c.pass) ++npass;
        out << (c.pass ? "PASS " : "FAIL ") << c.id;
        if (!c.anchor.empty()) out << "  [" << c.anchor << "]";
        out << "\n";
        if (!c.pass && !c.witness.empty()) out << "     witness: " << c.witness << "\n";
    }
    out << suite << ": " << npass << "/" << checks.size() << " passed";
    out << " (" << static_cast<long>(duration_ms) << " ms)\n";
    return out.str();
}

}  // namespace skein
