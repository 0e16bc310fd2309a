#pragma once

// Outcome of a verification sweep: either a pass or the first failing witness
// in sweep order, described well enough to reproduce by hand.

#include <string>
#include <vector>

namespace orbigold {

struct CheckReport {
    bool pass = true;
    std::string witness;

    static CheckReport failure(std::string what) { return {false, std::move(what)}; }
};

// First failure in index order wins; all-pass merges to pass.
inline CheckReport merge_reports(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (!r.pass) return r;
    return {};
}

}  // namespace orbigold
