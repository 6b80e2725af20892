#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "parared/instance.hpp"

namespace parared {

// Deterministic RNG wrapper: all draws go through modulo reduction so that
// identical seeds give identical instances on every platform.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int below(int n) {  // uniform-ish in [0, n)
        if (n <= 0) throw PreconditionError("Rng::below: empty range");
        return static_cast<int>(engine() % static_cast<std::uint64_t>(n));
    }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
    bool chance(int percent) { return below(100) < percent; }
};

// Size knobs for gen_instance; kinds pick the fields they understand and
// fall back to documented desk-scale defaults.
struct GenProfile {
    std::optional<int> n;          // vertices / universe size
    std::optional<int> k;          // parameter of union/generator instances
    std::optional<int> states;
    std::optional<int> cells;
    std::optional<int> heads;
    std::optional<int> strings;
    std::optional<int> vars;
    std::optional<int> layers;
    std::optional<int> width;      // vertices per layer
    std::optional<int> length;     // input/word length
    std::optional<int> alphabet;   // symbol count
    std::optional<long long> steps;
    std::optional<int> deterministic;  // 0/1
};

// Deterministic pseudo-random instance of the given kind. Kinds:
//   graph dag-graph layered-graph bf dtsc ntsc tm2 mfa dag-mfa ca nca dag-ca
//   dag-nca tpg lcs lcs-injective gen rs projection
//   family-union-bf subset-union-bf weighted-union-bf
//   family-union-reach .. family-union-undirected-cycle (all graph kinds)
//   family-union-agen subset-union-agen
ProblemInstance gen_instance(const std::string& kind, const GenProfile& profile,
                             std::uint64_t seed);

// Individual generators used by the verification suites.
Graph gen_graph(Rng& rng, int n, bool directed, int edge_percent, bool with_st, bool dag);
Graph gen_layered_graph(Rng& rng, int layers, int width, int edge_percent);
BooleanFormula gen_formula(Rng& rng, int vars, int nodes);
SingleTapeTM gen_tm(Rng& rng, int states, int symbols, bool deterministic);
BoundedTMInstance gen_bounded_tm(Rng& rng, int states, int symbols, bool deterministic,
                                 long long t, int s);
TwoTapeTM gen_tm2(Rng& rng, int states, int symbols, bool deterministic, int input_len);
MultiHeadAutomaton gen_mfa(Rng& rng, int states, int heads, int input_len,
                           bool deterministic, bool dag);
CellularAutomaton gen_ca_automaton(Rng& rng, int states, bool deterministic, bool dag,
                                   int rule_percent);
CellularInstance gen_ca(Rng& rng, int states, int cells, bool deterministic, bool dag,
                        int rule_percent);
ThresholdPebbleGame gen_tpg(Rng& rng, int n, int edge_percent, bool dag, int cap);
LcsInstance gen_lcs(Rng& rng, int strings, int alphabet, int length, bool injective);
GeneratorInstance gen_generator(Rng& rng, int universe, int candidates, int k,
                                bool associative);
ReplacementSystem gen_rs(Rng& rng, int alphabet, int rules);
CompatibleProjection gen_projection(Rng& rng, int input_len, int blocks, int outputs);

FamilyUnionInstance gen_family_union_bf(Rng& rng, int vars, int k, int per_family);
SubsetUnionInstance gen_subset_union_bf(Rng& rng, int vars, int set_size, int k);
FamilyUnionInstance gen_family_union_graph(Rng& rng, BaseKind base, int n, int k,
                                           int per_family);
FamilyUnionInstance gen_family_union_agen(Rng& rng, int universe, int k, int per_family);
SubsetUnionInstance gen_subset_union_agen(Rng& rng, int universe, int set_size, int k);

}  // namespace parared
