#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gss {

// One reproduced claim: what was computed, what the source states, and how
// they relate.  "typo-noted" marks a documented defect in the stated value;
// "failed" means our own construction did not behave as required.
struct ReproClaim {
    std::string id;
    std::string anchor;
    std::string computed;
    std::string expected;
    std::string status; // match | bound-satisfied | typo-noted | failed
    std::string note;
};

struct ReproOptions {
    bool quick = false;   // skip the long randomized distance search
    std::uint64_t seed = 0;
    std::string section{}; // when nonempty, run only the section of that name
};

std::vector<ReproClaim> run_reproduction(const ReproOptions& opt);

bool reproduction_ok(const std::vector<ReproClaim>& claims); // no "failed"

} // namespace gss
