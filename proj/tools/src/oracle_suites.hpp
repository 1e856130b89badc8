#pragma once

// Named families of cross-route equalities run by "oracle-check".

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tca::cli::suites {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string diff;
};

using Case = std::function<CaseResult()>;

std::vector<std::string> suite_names();
std::optional<std::vector<Case>> suite_cases(const std::string& name);

/// Results come back in case order whatever the thread count.
std::vector<CaseResult> run_cases(const std::vector<Case>& cases, int threads);

}  // namespace tca::cli::suites
