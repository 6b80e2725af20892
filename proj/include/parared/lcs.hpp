#pragma once

#include <string>
#include <vector>

#include "parared/budget.hpp"

namespace parared {

// Longest-common-subsequence instance. Symbols are whitespace-free tokens
// held in `alphabet`; strings store token indices.
struct LcsInstance {
    std::vector<std::string> alphabet;
    std::vector<std::vector<int>> strings;
    long long l = 0;

    void validate() const;
    // True when every string contains each symbol at most once.
    bool injective() const;
};

}  // namespace parared
