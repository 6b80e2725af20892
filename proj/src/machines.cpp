#include "parared/machines.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parared {

static void check_state(int q, int count, const char* what) {
    if (q < 0 || q >= count) throw PreconditionError(std::string(what) + ": state out of range");
}

void SingleTapeTM::validate() const {
    if (state_count <= 0) throw PreconditionError("tm: no states");
    if (alphabet.empty()) throw PreconditionError("tm: empty alphabet");
    check_state(initial, state_count, "tm");
    for (int q : accepting) check_state(q, state_count, "tm");
    std::set<std::pair<int, int>> seen;
    for (const auto& tr : transitions) {
        check_state(tr.state, state_count, "tm");
        check_state(tr.next, state_count, "tm");
        if (tr.read < 0 || tr.read >= static_cast<int>(alphabet.size()) || tr.write < 0 ||
            tr.write >= static_cast<int>(alphabet.size()))
            throw PreconditionError("tm: symbol out of range");
        if (deterministic && !seen.insert({tr.state, tr.read}).second)
            throw PreconditionError("tm: deterministic flag with duplicate (state,symbol)");
    }
}

bool SingleTapeTM::is_accepting(int q) const {
    return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

void BoundedTMInstance::validate() const {
    machine.validate();
    if (steps < 0) throw PreconditionError("bounded tm: t < 0");
    if (cells < 1) throw PreconditionError("bounded tm: s < 1");
}

void TwoTapeTM::validate() const {
    if (state_count <= 0) throw PreconditionError("tm2: no states");
    if (input_alphabet.empty() || work_alphabet.empty())
        throw PreconditionError("tm2: empty alphabet");
    check_state(initial, state_count, "tm2");
    for (int q : accepting) check_state(q, state_count, "tm2");
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& tr : transitions) {
        check_state(tr.state, state_count, "tm2");
        check_state(tr.next, state_count, "tm2");
        if (tr.input_read < 0 || tr.input_read >= static_cast<int>(input_alphabet.size()))
            throw PreconditionError("tm2: input symbol out of range");
        if (tr.work_read < 0 || tr.work_read >= static_cast<int>(work_alphabet.size()) ||
            tr.work_write < 0 || tr.work_write >= static_cast<int>(work_alphabet.size()))
            throw PreconditionError("tm2: work symbol out of range");
        if (deterministic && !seen.insert({tr.state, tr.input_read, tr.work_read}).second)
            throw PreconditionError("tm2: deterministic flag with duplicate key");
    }
    for (char c : input)
        if (input_alphabet.find(c) == std::string::npos)
            throw PreconditionError("tm2: input uses a symbol outside the input alphabet");
}

void MultiHeadAutomaton::validate() const {
    if (state_count <= 0) throw PreconditionError("mfa: no states");
    if (heads < 1) throw PreconditionError("mfa: no heads");
    if (initial < 1 || initial > state_count) throw PreconditionError("mfa: bad initial state");
    for (int q : accepting)
        if (q < 1 || q > state_count) throw PreconditionError("mfa: bad accepting state");
    if (input.find('<') != std::string::npos || input.find('>') != std::string::npos)
        throw PreconditionError("mfa: input contains an endmarker character");
    std::set<std::pair<int, std::string>> seen;
    for (const auto& tr : transitions) {
        if (tr.state < 1 || tr.state > state_count || tr.next < 1 || tr.next > state_count)
            throw PreconditionError("mfa: transition state out of range");
        if (static_cast<int>(tr.observed.size()) != heads ||
            static_cast<int>(tr.moves.size()) != heads)
            throw PreconditionError("mfa: transition arity mismatch");
        if (dag && tr.next <= tr.state)
            throw PreconditionError("mfa: dag flag with non-increasing transition");
        if (deterministic && !seen.insert({tr.state, tr.observed}).second)
            throw PreconditionError("mfa: deterministic flag with duplicate key");
    }
}

bool MultiHeadAutomaton::is_accepting(int q) const {
    return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

}  // namespace parared
