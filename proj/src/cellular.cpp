#include "parared/cellular.hpp"

#include <algorithm>
#include <set>

namespace parared {

void CellularAutomaton::validate() const {
    if (state_count <= 0) throw PreconditionError("ca: no states");
    auto chk = [&](int q) {
        if (q < 0 || q >= state_count) throw PreconditionError("ca: state out of range");
    };
    for (int q : accepting) chk(q);
    std::set<std::tuple<int, int, int>> i3;
    std::set<std::pair<int, int>> i2l, i2r;
    std::set<int> i1;
    for (const auto& r : interior) {
        chk(r.left); chk(r.own); chk(r.right); chk(r.next);
        if (dag && r.next <= std::max({r.left, r.own, r.right}))
            throw PreconditionError("ca: dag flag with non-increasing interior rule");
        if (deterministic && !i3.insert({r.left, r.own, r.right}).second)
            throw PreconditionError("ca: deterministic flag with duplicate interior key");
    }
    for (const auto& r : left) {
        chk(r.a); chk(r.b); chk(r.next);
        if (dag && r.next <= std::max(r.a, r.b))
            throw PreconditionError("ca: dag flag with non-increasing left rule");
        if (deterministic && !i2l.insert({r.a, r.b}).second)
            throw PreconditionError("ca: deterministic flag with duplicate left key");
    }
    for (const auto& r : right) {
        chk(r.a); chk(r.b); chk(r.next);
        if (dag && r.next <= std::max(r.a, r.b))
            throw PreconditionError("ca: dag flag with non-increasing right rule");
        if (deterministic && !i2r.insert({r.a, r.b}).second)
            throw PreconditionError("ca: deterministic flag with duplicate right key");
    }
    for (const auto& r : single) {
        chk(r.own); chk(r.next);
        if (dag && r.next <= r.own)
            throw PreconditionError("ca: dag flag with non-increasing single rule");
        if (deterministic && !i1.insert(r.own).second)
            throw PreconditionError("ca: deterministic flag with duplicate single key");
    }
}

bool CellularAutomaton::is_accepting(int q) const {
    return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

void CellularInstance::validate() const {
    automaton.validate();
    if (initial.empty()) throw PreconditionError("ca instance: empty initial string");
    for (int q : initial)
        if (q < 0 || q >= automaton.state_count)
            throw PreconditionError("ca instance: initial state out of range");
    if (!accepting_config.empty()) {
        if (accepting_config.size() != initial.size())
            throw PreconditionError("ca instance: accepting config length mismatch");
        for (int q : accepting_config)
            if (q < 0 || q >= automaton.state_count)
                throw PreconditionError("ca instance: accepting config state out of range");
    }
}

void SequentialCellularInstance::validate() const {
    // The base structural checks apply, except the dag numbering: for the
    // sequential convention only the stepping cell's own progress counts.
    CellularAutomaton plain = automaton;
    plain.dag = false;
    plain.validate();
    if (automaton.dag) {
        for (const auto& r : automaton.interior)
            if (r.next <= r.own)
                throw PreconditionError("seqca: dag flag with non-progress interior rule");
        for (const auto& r : automaton.left)
            if (r.next <= r.a)
                throw PreconditionError("seqca: dag flag with non-progress left rule");
        for (const auto& r : automaton.right)
            if (r.next <= r.b)
                throw PreconditionError("seqca: dag flag with non-progress right rule");
        for (const auto& r : automaton.single)
            if (r.next <= r.own)
                throw PreconditionError("seqca: dag flag with non-progress single rule");
    }
    if (initial.empty()) throw PreconditionError("seqca instance: empty initial string");
    for (int q : initial)
        if (q < 0 || q >= automaton.state_count)
            throw PreconditionError("seqca instance: initial state out of range");
    if (!accepting_config.empty() && accepting_config.size() != initial.size())
        throw PreconditionError("seqca instance: accepting config length mismatch");
}

}  // namespace parared
