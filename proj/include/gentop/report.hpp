#pragma once

#include <optional>
#include <string>

namespace gentop {

struct PropertyReport {
    std::string id;
    long long attempted = 0;
    long long passed = 0;
    std::optional<std::string> counterexample; // JSON: instance plus witness
    std::optional<std::string> certificate;    // exhaustion bounds
    std::string notes;
    double wall_ms = 0;

    bool ok() const { return attempted == passed && !counterexample; }
};

} // namespace gentop
