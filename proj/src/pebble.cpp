#include "parared/pebble.hpp"

namespace parared {

void ThresholdPebbleGame::validate() const {
    if (!graph.directed()) throw PreconditionError("tpg: graph must be directed");
    if (graph.has_holes()) throw PreconditionError("tpg: graph has template holes");
    if (static_cast<int>(thresholds.size()) != graph.n())
        throw PreconditionError("tpg: threshold arity mismatch");
    for (int t : thresholds)
        if (t < 0) throw PreconditionError("tpg: negative threshold");
    auto chk = [&](const std::vector<int>& vs) {
        for (int v : vs)
            if (v < 0 || v >= graph.n()) throw PreconditionError("tpg: pebbling vertex out of range");
    };
    chk(start);
    chk(target);
    if (cap < 0) throw PreconditionError("tpg: negative cap");
}

}  // namespace parared
