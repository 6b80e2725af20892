#pragma once

#include <string>
#include <vector>

#include "parared/budget.hpp"

namespace parared {

// Generator-set instance (U, ∘, x, C, k): is there G ⊆ C with |G| = k whose
// closure under ∘ contains x? Elements are 0..size-1 with printable names.
struct GeneratorInstance {
    std::vector<std::string> names;      // one per element
    std::vector<std::vector<int>> table; // table[a][b] = a∘b
    int target = 0;
    std::vector<int> candidates;
    int k = 0;
    bool associative = false;

    int size() const { return static_cast<int>(names.size()); }

    // Structural checks; when the associative flag is set the law is checked
    // exhaustively up to 32 elements and on sampled triples beyond that.
    void validate() const;
};

}  // namespace parared
