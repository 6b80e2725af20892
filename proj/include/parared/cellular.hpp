#pragma once

#include <map>
#include <vector>

#include "parared/budget.hpp"

namespace parared {

// One-dimensional cellular automaton. States are 0..state_count-1. Interior
// cells observe (left, own, right); the leftmost cell observes (own, right),
// the rightmost (left, own), and a lone cell only its own state. All four
// relations are kept sparse; the deterministic flag promises at most one
// successor per observed tuple, and a missing tuple means the cell (and
// hence the whole configuration) is stuck.
struct CellularAutomaton {
    struct Rule3 { int left, own, right, next; };
    struct Rule2 { int a, b, next; };  // (own,right) for left rules, (left,own) for right rules
    struct Rule1 { int own, next; };

    int state_count = 0;
    std::vector<int> accepting;
    bool deterministic = true;
    bool dag = false;
    std::vector<Rule3> interior;
    std::vector<Rule2> left;    // leftmost cell
    std::vector<Rule2> right;   // rightmost cell
    std::vector<Rule1> single;  // 1-cell automata

    void validate() const;
    bool is_accepting(int q) const;
};

struct CellularInstance {
    CellularAutomaton automaton;
    std::vector<int> initial;  // q_1 ... q_k, k >= 1
    // The single configuration the pebble-game reductions treat as
    // accepting; empty when not set.
    std::vector<int> accepting_config;

    int cells() const { return static_cast<int>(initial.size()); }
    void validate() const;
};

// Same data as CellularInstance, run under the sequential convention: within
// each major step, cells 1..k fire one at a time in index order, each seeing
// the already-updated left neighbour and the not-yet-updated right
// neighbour. The dag flag here promises that every rule strictly increases
// the stepping cell's state, bounding runs by k*|Q| minor steps.
struct SequentialCellularInstance {
    CellularAutomaton automaton;
    std::vector<int> initial;
    std::vector<int> accepting_config;

    int cells() const { return static_cast<int>(initial.size()); }
    void validate() const;
};

}  // namespace parared
