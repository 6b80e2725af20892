#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "parared/budget.hpp"
#include "parared/cellular.hpp"
#include "parared/formula.hpp"
#include "parared/generators.hpp"
#include "parared/graph.hpp"
#include "parared/lcs.hpp"
#include "parared/machines.hpp"
#include "parared/pebble.hpp"
#include "parared/rewriting.hpp"
#include "parared/unions.hpp"

namespace parared {

// Brute-force reference deciders. Everything here is a pure function of its
// arguments; nondeterministic searches are explicit BFS over configuration
// space charged against the caller's Budget.

bool eval_bf(const BooleanFormula& f, const std::string& assignment);

enum class GraphPropertyKind {
    Reach,
    DagReach,
    LayeredReach,
    Cycle,
    UndirectedReach,
    Tree,
    Forest,
    UndirectedCycle,
};

const char* to_string(GraphPropertyKind k);
GraphPropertyKind graph_property_from_string(const std::string& s);
GraphPropertyKind graph_property_of_base(BaseKind base);

bool graph_property(GraphPropertyKind kind, const Graph& g);

enum class UnionVariant { Family, Subset, Weighted };

const char* to_string(UnionVariant v);

using WordOracle = std::function<bool(const std::string&)>;

// Membership oracle of a base language, built from the word codecs. Word
// bases have no canonical oracle and must be supplied by the caller.
WordOracle base_oracle(BaseKind kind);

Outcome solve_union(const FamilyUnionInstance& inst, const WordOracle& oracle, Budget& budget);
Outcome solve_union(const SubsetUnionInstance& inst, const WordOracle& oracle, Budget& budget);
Outcome solve_union(const WeightedUnionInstance& inst, const WordOracle& oracle, Budget& budget);

Outcome run_tm_bounded(const BoundedTMInstance& inst, Budget& budget);

Outcome run_mfa(const MultiHeadAutomaton& a, Budget& budget);

enum class RunMode { Det, Nondet };

Outcome run_ca(const CellularInstance& inst, RunMode mode, Budget& budget);

// Acceptance within max_steps global steps; the independent side of the
// layering round-trips.
Outcome run_ca_bounded(const CellularInstance& inst, RunMode mode, long long max_steps,
                       Budget& budget);

// Bounded two-tape runs (t steps, s work cells); the independent side of the
// input-hardwiring round-trips. The input head clamps at positions
// 1..max(|x|,1).
Outcome run_tm2_bounded(const TwoTapeTM& m, long long t, int s, Budget& budget);

// Sequential convention: cells 1..k fire one at a time within each major
// step; acceptance is checked after every minor step.
Outcome run_seqca(const SequentialCellularInstance& inst, RunMode mode, Budget& budget);

enum class TpgMode { Max, Nondet };

Outcome run_tpg(const ThresholdPebbleGame& game, TpgMode mode, Budget& budget);

Outcome lcs_decide(const LcsInstance& inst, Budget& budget);

// k-pointer-free decision for p-sequence instances; throws on non-injective
// input.
bool lcs_injective_decide(const LcsInstance& inst);

std::set<int> generator_closure(const std::vector<std::vector<int>>& table,
                                const std::vector<int>& generators);

Outcome agen_decide(const GeneratorInstance& inst, Budget& budget);

// Leftmost-first normalization: repeatedly applies the first applicable rule
// at the leftmost applicable position. Throws NonterminationSuspected when
// `step_budget` applications do not reach an irreducible word.
std::vector<int> rs_normalize(const ReplacementSystem& rs, std::vector<int> word,
                              long long step_budget);

// Same, with a caller-specified application order (for the confluence
// tests): `pick(n_applicable)` selects which applicable redex to use.
std::vector<int> rs_normalize_with_order(const ReplacementSystem& rs, std::vector<int> word,
                                         long long step_budget,
                                         const std::function<std::size_t(std::size_t)>& pick);

}  // namespace parared
