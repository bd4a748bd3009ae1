#pragma once

// Named verification suites: closed-form agreement, theorem parameter ranges,
// oracle equivalence, and the structural property checks.  Shared by the CLI
// `verify` command and the acceptance test binary.

#include "zimt/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zimt::verify {

struct CheckResult {
    std::string name;
    long long instances = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
    void expect(bool ok, const std::string& context) {
        ++instances;
        if (!ok) failures.push_back(context);
    }
};

CheckResult check_table1(Int max = 12);
CheckResult check_s_formulas(Int max = 14);
CheckResult check_theorem1(Int max = 40);
CheckResult check_theorem_sp(Int max = 40);
CheckResult check_sandwich(int max_rank = 10, Int param_cap = 12);
CheckResult check_ideals(int max_rank = 8);
CheckResult check_rootspan(int max_rank = 4);
CheckResult check_weyl_oracle(int max_rank = 5, Int closed_form_max = 12);
CheckResult check_monotonicity(int max_rank = 6);
CheckResult check_weyl_monotone(int max_rank = 8);

const std::vector<std::string>& check_names();

// Runs one named check; nullopt when the name is unknown.  `max` scales the
// parameter grids, `max_rank` the rank-bounded property suites.
std::optional<CheckResult> run_named(const std::string& name, std::optional<Int> max,
                                     std::optional<int> max_rank);

}  // namespace zimt::verify
