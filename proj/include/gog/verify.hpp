#pragma once

#include <string>
#include <vector>

namespace gog {

// One line of a self-check report.  Every check compares two independently
// computed values (closed formula against brute force, enumeration against
// a counting recurrence, and so on); detail carries the numbers so a FAIL
// is diagnosable from the report alone.
struct CheckResult {
    std::string suite;
    std::string check;
    bool pass = false;
    std::string detail;
};

// Suite names, in report order: mednykh, kurosh, rank-gradient,
// decomposition-chi, dihedral-count.
std::vector<std::string> verify_suite_names();

// Runs one named suite; throws domain_error on an unknown name.
std::vector<CheckResult> run_verify_suite(const std::string& name);

std::vector<CheckResult> run_all_verify_suites();

}  // namespace gog
