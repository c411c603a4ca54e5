#pragma once

#include <string>
#include <vector>

namespace skein {

/// One verified statement.
struct Check {
    std::string id;
    std::string anchor;   // the mathematical statement being checked
    bool pass = false;
    std::string witness;  // nonzero normal form or other evidence on failure
};

/// Result of a verification suite.
struct Report {
    std::string suite;
    std::vector<Check> checks;
    double duration_ms = 0;

    bool passed() const;
    void add(std::string id, std::string anchor, bool pass, std::string witness = {});
    /// Appends all checks of `other`, prefixing ids with `prefix` when non-empty.
    void merge(const Report& other, const std::string& prefix = {});
    /// First failing check, or nullptr.
    const Check* first_failure() const;

    std::string to_json(bool include_duration = true) const;
    std::string to_text() const;
};

}  // namespace skein
