#pragma once

#include <cstdint>
#include <stdexcept>

namespace parared {

// Tri-state result of a solver call. BudgetExceeded is a normal outcome,
// never silently folded into "no".
enum class Outcome { Yes, No, BudgetExceeded };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Yes: return "yes";
        case Outcome::No: return "no";
        case Outcome::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

inline Outcome outcome_of(bool b) { return b ? Outcome::Yes : Outcome::No; }

// Node budget shared by the exhaustive solvers. Each explored configuration
// (or enumerated choice) charges one unit.
struct Budget {
    std::uint64_t limit = 1'000'000;
    std::uint64_t used = 0;

    Budget() = default;
    explicit Budget(std::uint64_t l) : limit(l) {}

    // Returns false once the budget is exhausted.
    bool charge(std::uint64_t n = 1) {
        used += n;
        return used <= limit;
    }
    bool exhausted() const { return used > limit; }
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by rs_normalize when the step budget runs out before reaching an
// irreducible word.
struct NonterminationSuspected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when materializing a construction exceeds its node cap; the verify
// driver reports such cases as skipped.
struct ConstructionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace parared
