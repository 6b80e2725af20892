#pragma once

#include <string>
#include <vector>

namespace parared {

// Dispatches gen | solve | reduce | verify | normalize.
// Exit codes: 0 yes/success, 1 no, 2 budget-exceeded, 3 usage/parse error.
// PARARED_BUDGET overrides the default node budget.
int run_cli(const std::vector<std::string>& args);

}  // namespace parared
