#pragma once

#include <string>
#include <vector>

#include "parared/budget.hpp"
#include "parared/words.hpp"

namespace parared {

// Position-wise reduction whose output instantiates one template per input
// length. The combined input word is x · advice · b where b is a string of
// choice bits grouped into `blocks` blocks of `block_width` bits. Each
// output position is a constant, a copy of an x/advice position, or a
// function of one choice bit.
struct CompatibleProjection {
    struct Position {
        enum Kind { Const, FromInput, FromBit } kind;
        char constant = 0;  // Const
        int index = 0;      // FromInput: offset into x·advice; FromBit: bit offset
        char when0 = '0', when1 = '1';  // FromBit output symbols
    };

    std::string alphabet;  // Sigma
    int kappa = 0;         // parameter value of the source instance
    int blocks = 1;        // f_x
    int block_width = 1;   // bits per block
    std::string input;     // x
    std::string advice;    // pi(kappa(x)), opaque
    std::vector<Position> positions;

    void validate() const;

    // Output word for explicit choice bits (b.size() == blocks*block_width).
    std::string apply(const std::string& bits) const;

    // The template: constants and copies evaluated, bit positions '?'.
    TemplateWord template_word() const;
};

}  // namespace parared
