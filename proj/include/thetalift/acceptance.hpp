#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace thetalift::acceptance {

/// quick: E_n for n <= 2 and sl2 truncation depth 12.
/// full:  E_n for n <= 3 and filtration degree up to 12.
enum class Profile { Quick, Full };

Profile parse_profile(std::string_view text);
std::string to_string(Profile profile);

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double elapsed_seconds = 0;
    double budget_seconds = 0;
    std::vector<std::string> details;  // failures first, then a summary line
};

/// Runs every acceptance criterion in order. `on_result` is called as each
/// check completes.
std::vector<CheckResult> run_all(Profile profile,
                                 const std::function<void(const CheckResult&)>& on_result = {});

std::string format_line(const CheckResult& result);

}  // namespace thetalift::acceptance
