// discrepancy.hpp - machine-checked record of printed values that disagree
// with direct computation or with the theorem they specialize.
#pragma once

#include <string>
#include <vector>

namespace planardist {

struct DiscrepancyEvidence {
    int n = 0;
    std::string printed;   // value of the printed formula
    std::string reference; // value it is compared against
    bool differs = false;
};

struct DiscrepancyItem {
    std::string id;         // e.g. "Q.pi", "COR5.5b"
    std::string summary;
    std::string printed_formula;
    std::string reference_formula;
    std::vector<DiscrepancyEvidence> evidence;
    // True when the recorded mismatch was recomputed and still holds.
    bool reproduced = false;
};

std::vector<DiscrepancyItem> discrepancy_report();

// Quarantined ids must never be registry entries, never be returned by
// applicable_bounds, and never appear among a report's verdict-bearing
// checks. Returns an empty string when that holds, otherwise the breach.
std::string quarantine_breach();

}  // namespace planardist
