#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parared/budget.hpp"
#include "parared/generate.hpp"
#include "parared/instance.hpp"

namespace parared {

// Knobs for parameterized transforms; the registered verification suites
// pick their own values per case.
struct ReduceOptions {
    int block = 2;         // tm_space_compress
    long long steps = 0;   // time horizons; 0 = derive from the instance
    int layers = 0;        // dagca_to_tpg main layers; 0 = derive
    int cells = 0;         // tm_hardwire_input space bound; 0 = default
};

// One verification case: source answer, target answer and the parameter
// values; the driver adds timing, the g-check and skip classification.
struct CaseResult {
    Outcome source = Outcome::No;
    Outcome target = Outcome::No;
    long long kappa1 = 0;
    long long kappa2 = 0;
    std::string note;
};

struct ReductionDescriptor {
    std::string name;
    std::string source_kind;
    std::string target_kind;
    std::string bound_description;              // the parameter bound g, humanly
    std::function<long long(long long)> bound;  // g itself

    // file-to-file transform for the reduce CLI
    std::function<ProblemInstance(const ProblemInstance&, const ReduceOptions&)> transform;

    // seeded verification case; empty for transform-only entries whose
    // correctness is covered by unit tests (nca_to_sequential)
    std::function<CaseResult(Rng&, Budget&)> verify_case;

    bool verifiable() const { return static_cast<bool>(verify_case); }
};

const std::vector<ReductionDescriptor>& reduction_registry();
const ReductionDescriptor* find_reduction(const std::string& name);

struct VerificationReport {
    int case_id = 0;
    std::uint64_t seed = 0;
    Outcome source = Outcome::No;
    Outcome target = Outcome::No;
    long long kappa1 = 0, kappa2 = 0, g_kappa1 = 0;
    bool agreement = false;  // both decided, answers equal, kappa2 <= g(kappa1)
    bool skipped = false;    // a budget ran out somewhere
    double wall_ms = 0.0;
    std::string note;
};

struct VerifySummary {
    int cases = 0, agreed = 0, skipped = 0, disagreed = 0;
    bool all_ok() const { return disagreed == 0; }
};

// Runs `cases` seeded cases. Case i uses seed base_seed*1000003 + i, so
// identical seeds yield identical reports. Budget-exceeded cases are
// reported as skipped, never as failures.
std::vector<VerificationReport> verify_reduction(const ReductionDescriptor& desc, int cases,
                                                 std::uint64_t base_seed,
                                                 std::uint64_t budget_nodes = 1'000'000);

VerifySummary summarize(const std::vector<VerificationReport>& reports);

// Line-delimited records plus a readable summary table.
std::string reports_to_jsonl(const std::string& reduction,
                             const std::vector<VerificationReport>& reports);
std::string summary_table(const std::string& reduction,
                          const std::vector<VerificationReport>& reports);

// Deterministic word predicate used as the opaque base-language oracle of
// the projection suite (FNV-1a hash parity, salted).
bool fnv_word_oracle(const std::string& word, std::uint64_t salt);

}  // namespace parared
