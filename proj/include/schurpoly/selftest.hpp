#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurpoly::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double ms = 0.0;
    std::string detail;  // failure reason, empty on pass
};

// The acceptance suite: one result per criterion, in order.
std::vector<CriterionResult> run_all();

// Prints one pass/fail line per criterion; returns the number of failures.
int run_and_report(std::ostream& out);

}  // namespace schurpoly::selftest
