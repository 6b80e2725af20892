#pragma once

#include <string>
#include <vector>

#include "parared/budget.hpp"

namespace parared {

enum class Move { Left, Right, Stay };

inline char move_char(Move m) { return m == Move::Left ? 'L' : m == Move::Right ? 'R' : 'S'; }
inline Move parse_move(char c) {
    if (c == 'L') return Move::Left;
    if (c == 'R') return Move::Right;
    if (c == 'S') return Move::Stay;
    throw PreconditionError("bad move");
}

// Single-tape Turing machine. Tape symbols are characters of `alphabet`;
// index 0 is the blank. The transition set is a relation; the deterministic
// flag promises at most one entry per (state, symbol).
struct SingleTapeTM {
    struct Transition {
        int state;
        int read;   // symbol index
        int next;
        int write;  // symbol index
        Move move;
    };

    int state_count = 0;
    std::string alphabet = "_";  // blank first
    int initial = 0;
    std::vector<int> accepting;
    bool deterministic = true;
    std::vector<Transition> transitions;

    void validate() const;
    bool is_accepting(int q) const;
};

// (M, t, s): does M accept the empty string within t steps using at most
// s tape cells? t and s are written in unary on disk.
struct BoundedTMInstance {
    SingleTapeTM machine;
    long long steps = 0;  // t ≥ 0
    int cells = 1;        // s ≥ 1

    void validate() const;
};

// Machine with a read-only input tape and one work tape. Input head
// positions are 1..max(|x|,1); moves clamp at the ends. Position max(|x|,1)
// on the empty input reads the input blank.
struct TwoTapeTM {
    struct Transition {
        int state;
        int input_read;  // index into input_alphabet
        int work_read;   // index into work alphabet
        int next;
        int work_write;
        Move input_move;
        Move work_move;
    };

    int state_count = 0;
    std::string input_alphabet = "_";  // blank first; read when input is empty
    std::string work_alphabet = "_";   // blank first
    int initial = 0;
    std::vector<int> accepting;
    bool deterministic = true;
    std::vector<Transition> transitions;
    std::string input;  // the word x the machine runs on

    void validate() const;
};

// Multi-head one-tape automaton. States are numbered 1..state_count as the
// dag ordering requires. The tape holds '<' + input + '>' and every head
// starts on position 1; a move off the tape makes the transition
// inapplicable.
struct MultiHeadAutomaton {
    struct Transition {
        int state;
        std::string observed;  // one character per head
        int next;
        std::vector<Move> moves;
    };

    int state_count = 0;
    int heads = 1;
    int initial = 1;
    std::vector<int> accepting;
    bool deterministic = true;
    bool dag = false;
    std::vector<Transition> transitions;
    std::string input;

    void validate() const;
    bool is_accepting(int q) const;
};

}  // namespace parared
