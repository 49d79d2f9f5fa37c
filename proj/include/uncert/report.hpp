#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace uncert {

/// One asserted claim of a verification routine.
struct Claim {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ClaimReport {
    std::vector<Claim> claims;

    void add(std::string name, bool ok, std::string detail = {}) {
        claims.push_back({std::move(name), ok, std::move(detail)});
    }
    [[nodiscard]] bool ok() const {
        return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.ok; });
    }
    /// Names of the failed claims, comma separated.
    [[nodiscard]] std::string failures() const {
        std::string out;
        for (const auto& c : claims) {
            if (c.ok) continue;
            if (!out.empty()) out += ", ";
            out += c.name;
            if (!c.detail.empty()) out += " (" + c.detail + ")";
        }
        return out;
    }
};

}  // namespace uncert
