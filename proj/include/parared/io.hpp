#pragma once

#include <string>

#include "parared/instance.hpp"

namespace parared {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseOptions {
    // Unary numbers (the t/s bounds of dtsc/ntsc) are capped when parsed to
    // machine integers.
    long long unary_cap = 1'000'000;
};

// Canonical textual format: header line "<kind> <parameter>", then sections.
// docs/formats.md describes every kind with an example.
ProblemInstance parse_instance(const std::string& text, const ParseOptions& opts = {});
std::string serialize_instance(const ProblemInstance& inst);

ProblemInstance load_instance_file(const std::string& path, const ParseOptions& opts = {});
void save_instance_file(const std::string& path, const ProblemInstance& inst);

}  // namespace parared
