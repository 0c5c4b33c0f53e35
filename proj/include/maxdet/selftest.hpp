#ifndef MAXDET_SELFTEST_HPP
#define MAXDET_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace maxdet {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance suite, printing one pass/fail line per
// criterion to `out`.  Returns all results.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

}  // namespace maxdet

#endif
