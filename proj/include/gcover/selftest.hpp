#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcover::selftest {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    long elapsed_ms = 0;
};

/// Runs the full acceptance suite in order. Every check is an exact
/// comparison; criteria with a stated runtime bound fail when the bound
/// is exceeded.
std::vector<CriterionResult> run_all();

/// Prints one pass/fail line per criterion; returns true when all pass.
bool run_all(std::ostream& os);

}  // namespace gcover::selftest
