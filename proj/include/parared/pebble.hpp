#pragma once

#include <vector>

#include "parared/budget.hpp"
#include "parared/graph.hpp"

namespace parared {

// Threshold pebble game: a pebbling is a vertex set; a vertex can be pebbled
// after X when at least threshold(v) of its predecessors lie in X. The game
// replaces the whole pebbling each step. cap == 0 means no pebble bound.
struct ThresholdPebbleGame {
    Graph graph;  // directed
    std::vector<int> thresholds;
    std::vector<int> start;   // S
    std::vector<int> target;  // T
    bool dag = false;
    int cap = 0;

    void validate() const;
};

}  // namespace parared
