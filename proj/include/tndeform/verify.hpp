#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tnd {

enum class CheckStatus { Pass, Fail, Inconclusive };

// One line of a verification run. `inconclusive` is reserved for checks where
// enclosure widths exceed the separation the check needs.
struct VerificationReport {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;    // the values the verdict rests on
    std::string tolerance;  // thresholds in force
};

// Optional overrides; a suite falls back to its pinned defaults.
struct VerifyBudgets {
    std::optional<int> level;          // n
    std::optional<int> order;          // series truncation order
    std::optional<int> depth;          // expansion depth
    std::optional<int> weight_cutoff;  // site enumeration cutoff
    std::optional<int> max_weight;     // composition weight bound
    std::optional<int> count;          // sample / pair count
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs one named suite ("all" runs every suite), deterministic output order.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const VerifyBudgets& budgets);

bool all_passed(const std::vector<VerificationReport>& reports);
const char* status_name(CheckStatus s);

}  // namespace tnd
