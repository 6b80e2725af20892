#pragma once

#include <functional>

#include "parared/cellular.hpp"
#include "parared/graph.hpp"
#include "parared/lcs.hpp"
#include "parared/machines.hpp"
#include "parared/pebble.hpp"

namespace parared {

// --- time/space-bounded machines ------------------------------------------

// Folds the read-only input into the state set: one copy of the states per
// input-head position (max(|x|,1) copies; the head clamps at the ends).
SingleTapeTM tm_hardwire_input(const TwoTapeTM& m);

// Block compression: alphabet Gamma^block, in-block offset in the state.
// M'' accepts within (t, c) blocks iff m accepts within (t, c*block) cells.
SingleTapeTM tm_space_compress(const SingleTapeTM& m, int block);

// Hardwire + compress; emits (M'', t, ceil(s/block)).
BoundedTMInstance dtsc_from_parameterized_run(const TwoTapeTM& m, long long t, int s, int block);

// --- cellular automata ------------------------------------------------------

// Deterministic machine -> cellular automaton over (Q ∪ {⊥}) × Γ whose
// global steps mirror the machine's steps one for one.
CellularInstance tm_to_ca(const SingleTapeTM& m, int cells);

// Splits every >=3-way nondeterministic choice into a chain of binary
// choices through fresh states (extra stay-put steps).
SingleTapeTM tm_binary_branching(const SingleTapeTM& m);

// Nondeterministic variant: a head cell first tags its state with the chosen
// branch bit, then the affected cells step deterministically; two global
// steps per machine step.
CellularInstance tm_to_nca(const SingleTapeTM& m, int cells);

// t clock-stamped copies; transitions lead to the next copy. Accepts iff the
// input accepts within t global steps.
CellularInstance ca_to_dag_ca(const CellularInstance& inst, int t);

// The same layering for multi-head automata.
MultiHeadAutomaton mfa_to_dag_mfa(const MultiHeadAutomaton& a, int t);

// --- pebble games --------------------------------------------------------------

// Absorbing-sink normalization: some cell accepting eventually drives the
// whole configuration into the all-sink string, which becomes the unique
// accepting configuration (recorded in accepting_config).
CellularInstance ca_normalize_unique_accept_cyclic(const CellularInstance& inst);

// Clock-stamped normalization with a step-indexed sink chain: accepting runs
// (within t steps) reach the all-sink configuration exactly at the final
// step t + cells; stalled cells freeze-advance. The resulting instance is a
// dag automaton with accepting_config set.
CellularInstance ca_normalize_unique_accept_dag(const CellularInstance& inst, int t);

// Main layers of cells x states alternating with auxiliary triple layers;
// requires accepting_config (the unique accepting configuration). `layers`
// counts the main layers. Pebble cap = cell count.
ThresholdPebbleGame dagca_to_tpg(const CellularInstance& inst, int layers);

// Single main layer + single auxiliary layer wired back onto it.
ThresholdPebbleGame ca_to_tpg_cyclic(const CellularInstance& inst);

// --- longest common subsequence ---------------------------------------------------

// Four strings over the edge alphabet of a layered graph; edges of odd
// layers populate strings 1-2 (forward/reverse vertex order), even layers
// strings 3-4; l = layer count - 1. Edge names: letters a.. for up to 26
// edges, e1.. beyond.
LcsInstance layeredreach_to_lcs_injective(const Graph& g);

// --- sequential cellular automata ---------------------------------------------------

// (prev, current) pair states; cell i sees the left neighbour's previous
// state and the right neighbour's current one.
SequentialCellularInstance nca_to_sequential(const CellularInstance& inst);

struct PaddedSeqca {
    SequentialCellularInstance instance;
    int horizon = 0;  // major steps the padded automaton makes when accepting
    // major step a padded state belongs to (used to prune LCS tags)
    std::function<int(int)> step_of_state;
};

// Horizon normalization: t compute rounds with stall-pads, an
// acceptance-bit flush, and a final gated round; a branch completes exactly
// horizon*k minor steps iff the input accepts within t major steps. Only
// transitions observed on reachable configurations are emitted.
PaddedSeqca seqca_pad_to_horizon(const SequentialCellularInstance& inst, int t,
                                 std::uint64_t node_cap = 200000);

struct SeqTag {
    int left = -1;   // observed left state (-1 at the left border)
    int own = 0;
    int right = -1;  // observed right state (-1 at the right border)
    int next = 0;
    int step = 1;    // major step s
    int cell = 1;    // 1-based cell index
};

struct SeqcaLcs {
    LcsInstance lcs;
    // provenance per string per position: 0 = skeleton state tag, 1..7 =
    // insertion rule
    std::vector<std::vector<int>> rule_ids;
};

// 4k strings from conceptual state skeletons with the seven insertion rules;
// asks for a common subsequence of length t*k. `admissible` may prune tags
// that can never fire (e.g. clock-mismatched ones); null admits all.
SeqcaLcs seqca_to_lcs(const SequentialCellularInstance& inst, int t,
                      const std::function<bool(const SeqTag&)>& admissible = nullptr);

// nca_to_sequential + pad + seqca_to_lcs with the clock-based tag pruning.
SeqcaLcs nca_to_lcs_pipeline(const CellularInstance& inst, int t);

}  // namespace parared
