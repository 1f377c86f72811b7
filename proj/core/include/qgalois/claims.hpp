#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qg {

// One verifiable statement. Negative controls carry expect_pass = false:
// their certificate must fail for the claim to count as ok.
struct CheckResult {
    std::string name;
    bool pass;
    std::string detail; // residual / counterexample when failing
};

struct Claim {
    std::string id;
    std::string description;
    bool expect_pass;
    std::function<std::vector<CheckResult>()> run;
};

struct ClaimOutcome {
    std::string id;
    std::string description;
    bool expect_pass;
    bool certificate_pass; // all checks passed
    bool ok;               // certificate_pass == expect_pass
    std::vector<CheckResult> checks;
};

const std::vector<Claim>& claim_registry();
const Claim& find_claim(const std::string& id); // throws UnknownClaim

ClaimOutcome run_claim(const std::string& id); // throws UnknownClaim
std::vector<ClaimOutcome> run_all_claims();

// deterministic report, stable across runs
std::string outcomes_to_json(const std::vector<ClaimOutcome>& outcomes);
std::string outcomes_to_text(const std::vector<ClaimOutcome>& outcomes);

} // namespace qg
