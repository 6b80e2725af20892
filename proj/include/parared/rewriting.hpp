#pragma once

#include <string>
#include <vector>

#include "parared/budget.hpp"

namespace parared {

// String rewriting system over a token alphabet: rules lhs -> rhs applied
// inside words. Words are sequences of token indices.
struct ReplacementSystem {
    std::vector<std::string> alphabet;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rules;

    void validate() const;

    int token(const std::string& name) const;  // -1 when absent
    std::string render(const std::vector<int>& word) const;
    std::vector<int> parse_word(const std::string& text) const;
};

}  // namespace parared
