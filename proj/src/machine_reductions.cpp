#include "parared/machine_reductions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "parared/words.hpp"

namespace parared {

// --- hardwiring and compression ------------------------------------------------

SingleTapeTM tm_hardwire_input(const TwoTapeTM& m) {
    m.validate();
    const int q_count = m.state_count;
    const int n = std::max<int>(1, static_cast<int>(m.input.size()));
    auto input_symbol = [&](int p) {  // p in 1..n
        if (m.input.empty() || p > static_cast<int>(m.input.size())) return 0;  // input blank
        return static_cast<int>(m.input_alphabet.find(m.input[p - 1]));
    };
    auto id = [&](int q, int p) { return (p - 1) * q_count + q; };

    SingleTapeTM out;
    out.state_count = q_count * n;
    out.alphabet = m.work_alphabet;
    out.deterministic = m.deterministic;
    out.initial = id(m.initial, 1);
    for (int q : m.accepting)
        for (int p = 1; p <= n; ++p) out.accepting.push_back(id(q, p));
    for (const auto& tr : m.transitions)
        for (int p = 1; p <= n; ++p) {
            if (tr.input_read != input_symbol(p)) continue;
            int p2 = p;
            if (tr.input_move == Move::Left) p2 = std::max(1, p - 1);
            else if (tr.input_move == Move::Right) p2 = std::min(n, p + 1);
            out.transitions.push_back(
                {id(tr.state, p), tr.work_read, id(tr.next, p2), tr.work_write, tr.work_move});
        }
    out.validate();
    return out;
}

SingleTapeTM tm_space_compress(const SingleTapeTM& m, int block) {
    m.validate();
    if (block < 1) throw PreconditionError("tm_space_compress: block size must be >= 1");
    const int g = static_cast<int>(m.alphabet.size());
    long long block_count = 1;
    for (int i = 0; i < block; ++i) {
        block_count *= g;
        if (block_count > 91) throw PreconditionError("tm_space_compress: block alphabet too large");
    }

    // printable characters for the block alphabet, skipping the reserved ?01
    std::string chars;
    for (char c = '!'; c <= '~'; ++c) {
        if (is_reserved_symbol(c)) continue;
        chars += c;
        if (static_cast<long long>(chars.size()) == block_count) break;
    }

    auto digit = [&](long long v, int o) {
        for (int i = 0; i < o; ++i) v /= g;
        return static_cast<int>(v % g);
    };
    auto with_digit = [&](long long v, int o, int d) {
        long long scale = 1;
        for (int i = 0; i < o; ++i) scale *= g;
        return v + (d - digit(v, o)) * scale;
    };
    auto id = [&](int q, int o) { return q * block + o; };

    SingleTapeTM out;
    out.state_count = m.state_count * block;
    out.alphabet = chars;
    out.deterministic = m.deterministic;
    out.initial = id(m.initial, 0);
    for (int q : m.accepting)
        for (int o = 0; o < block; ++o) out.accepting.push_back(id(q, o));
    for (const auto& tr : m.transitions)
        for (int o = 0; o < block; ++o)
            for (long long v = 0; v < block_count; ++v) {
                if (digit(v, o) != tr.read) continue;
                long long v2 = with_digit(v, o, tr.write);
                int o2 = o;
                Move move = Move::Stay;
                if (tr.move == Move::Left) {
                    if (o > 0) o2 = o - 1;
                    else { o2 = block - 1; move = Move::Left; }
                } else if (tr.move == Move::Right) {
                    if (o < block - 1) o2 = o + 1;
                    else { o2 = 0; move = Move::Right; }
                }
                out.transitions.push_back({id(tr.state, o), static_cast<int>(v),
                                           id(tr.next, o2), static_cast<int>(v2), move});
            }
    out.validate();
    return out;
}

BoundedTMInstance dtsc_from_parameterized_run(const TwoTapeTM& m, long long t, int s, int block) {
    if (t < 0 || s < 1) throw PreconditionError("dtsc_from_parameterized_run: bad bounds");
    BoundedTMInstance out;
    out.machine = tm_space_compress(tm_hardwire_input(m), block);
    out.steps = t;
    out.cells = (s + block - 1) / block;
    out.validate();
    return out;
}

// --- machine -> cellular automaton ------------------------------------------------

namespace {

// State ids of the simulation automaton: (q, γ) -> q*G + γ, (⊥, γ) -> Q*G + γ.
struct CaIds {
    int q_count, g_count;
    int head(int q, int g) const { return q * g_count + g; }
    int bot(int g) const { return q_count * g_count + g; }
};

}  // namespace

CellularInstance tm_to_ca(const SingleTapeTM& m, int cells) {
    m.validate();
    if (!m.deterministic)
        throw PreconditionError("tm_to_ca: machine must be deterministic (use tm_to_nca)");
    if (cells < 1) throw PreconditionError("tm_to_ca: need at least one cell");
    const int q_count = m.state_count;
    const int g_count = static_cast<int>(m.alphabet.size());
    CaIds ids{q_count, g_count};

    CellularAutomaton ca;
    ca.state_count = (q_count + 1) * g_count;
    ca.deterministic = true;
    for (int q : m.accepting)
        for (int g = 0; g < g_count; ++g) ca.accepting.push_back(ids.head(q, g));

    for (const auto& tr : m.transitions) {
        int own_next = tr.move == Move::Stay ? ids.head(tr.next, tr.write) : ids.bot(tr.write);
        int self = ids.head(tr.state, tr.read);
        // the head cell itself
        for (int g1 = 0; g1 < g_count; ++g1)
            for (int g2 = 0; g2 < g_count; ++g2)
                ca.interior.push_back({ids.bot(g1), self, ids.bot(g2), own_next});
        for (int g = 0; g < g_count; ++g) {
            ca.left.push_back({self, ids.bot(g), own_next});
            ca.right.push_back({ids.bot(g), self, own_next});
        }
        ca.single.push_back({self, own_next});
        // neighbours: receive the head or keep their state
        for (int g = 0; g < g_count; ++g) {
            int recv_left = tr.move == Move::Left ? ids.head(tr.next, g) : ids.bot(g);
            int recv_right = tr.move == Move::Right ? ids.head(tr.next, g) : ids.bot(g);
            for (int other = 0; other < g_count; ++other) {
                ca.interior.push_back({ids.bot(other), ids.bot(g), self, recv_left});
                ca.interior.push_back({self, ids.bot(g), ids.bot(other), recv_right});
            }
            ca.left.push_back({ids.bot(g), self, recv_left});
            ca.right.push_back({self, ids.bot(g), recv_right});
        }
    }
    // cells away from the head keep their symbol
    for (int g = 0; g < g_count; ++g) {
        for (int g1 = 0; g1 < g_count; ++g1)
            for (int g2 = 0; g2 < g_count; ++g2)
                ca.interior.push_back({ids.bot(g1), ids.bot(g), ids.bot(g2), ids.bot(g)});
        for (int g2 = 0; g2 < g_count; ++g2) {
            ca.left.push_back({ids.bot(g), ids.bot(g2), ids.bot(g)});
            ca.right.push_back({ids.bot(g2), ids.bot(g), ids.bot(g)});
        }
        ca.single.push_back({ids.bot(g), ids.bot(g)});
    }

    CellularInstance inst;
    inst.automaton = std::move(ca);
    inst.initial.assign(cells, ids.bot(0));
    inst.initial[0] = ids.head(m.initial, 0);
    inst.validate();
    return inst;
}

SingleTapeTM tm_binary_branching(const SingleTapeTM& m) {
    m.validate();
    std::map<std::pair<int, int>, std::vector<SingleTapeTM::Transition>> groups;
    for (const auto& tr : m.transitions) groups[{tr.state, tr.read}].push_back(tr);

    SingleTapeTM out = m;
    out.transitions.clear();
    for (auto& [key, choices] : groups) {
        if (choices.size() <= 2) {
            for (const auto& tr : choices) out.transitions.push_back(tr);
            continue;
        }
        int cur = key.first;
        int read = key.second;
        for (std::size_t i = 0; i + 2 < choices.size(); ++i) {
            SingleTapeTM::Transition direct = choices[i];
            direct.state = cur;
            out.transitions.push_back(direct);
            int fresh = out.state_count++;
            out.transitions.push_back({cur, read, fresh, read, Move::Stay});
            cur = fresh;
        }
        SingleTapeTM::Transition a = choices[choices.size() - 2];
        SingleTapeTM::Transition b = choices[choices.size() - 1];
        a.state = cur;
        b.state = cur;
        out.transitions.push_back(a);
        out.transitions.push_back(b);
    }
    out.validate();
    return out;
}

CellularInstance tm_to_nca(const SingleTapeTM& machine, int cells) {
    machine.validate();
    if (cells < 1) throw PreconditionError("tm_to_nca: need at least one cell");
    SingleTapeTM m = tm_binary_branching(machine);
    const int q_count = m.state_count;
    const int g_count = static_cast<int>(m.alphabet.size());
    CaIds ids{q_count, g_count};
    // tagged states after the plain and ⊥ blocks
    auto tagged = [&](int q, int c, int g) {
        return (q_count + 1) * g_count + (q * 2 + c) * g_count + g;
    };

    std::map<std::pair<int, int>, std::vector<SingleTapeTM::Transition>> groups;
    for (const auto& tr : m.transitions) groups[{tr.state, tr.read}].push_back(tr);

    CellularAutomaton ca;
    ca.state_count = (q_count + 1) * g_count + 2 * q_count * g_count;
    ca.deterministic = false;
    for (int q : m.accepting)
        for (int g = 0; g < g_count; ++g) ca.accepting.push_back(ids.head(q, g));

    for (const auto& [key, choices] : groups) {
        auto [q, a] = key;
        int self = ids.head(q, a);
        // choice step: the head cell tags itself; neighbours hold still
        for (std::size_t c = 0; c < choices.size(); ++c) {
            int next = tagged(q, static_cast<int>(c), a);
            for (int g1 = 0; g1 < g_count; ++g1)
                for (int g2 = 0; g2 < g_count; ++g2)
                    ca.interior.push_back({ids.bot(g1), self, ids.bot(g2), next});
            for (int g = 0; g < g_count; ++g) {
                ca.left.push_back({self, ids.bot(g), next});
                ca.right.push_back({ids.bot(g), self, next});
            }
            ca.single.push_back({self, next});
        }
        for (int g = 0; g < g_count; ++g) {
            for (int other = 0; other < g_count; ++other) {
                ca.interior.push_back({ids.bot(other), ids.bot(g), self, ids.bot(g)});
                ca.interior.push_back({self, ids.bot(g), ids.bot(other), ids.bot(g)});
            }
            ca.left.push_back({ids.bot(g), self, ids.bot(g)});
            ca.right.push_back({self, ids.bot(g), ids.bot(g)});
        }
        // resolution step: deterministic according to the tag
        for (std::size_t c = 0; c < choices.size(); ++c) {
            const auto& tr = choices[c];
            int tag = tagged(q, static_cast<int>(c), a);
            int own_next = tr.move == Move::Stay ? ids.head(tr.next, tr.write) : ids.bot(tr.write);
            for (int g1 = 0; g1 < g_count; ++g1)
                for (int g2 = 0; g2 < g_count; ++g2)
                    ca.interior.push_back({ids.bot(g1), tag, ids.bot(g2), own_next});
            for (int g = 0; g < g_count; ++g) {
                ca.left.push_back({tag, ids.bot(g), own_next});
                ca.right.push_back({ids.bot(g), tag, own_next});
            }
            ca.single.push_back({tag, own_next});
            for (int g = 0; g < g_count; ++g) {
                int recv_left = tr.move == Move::Left ? ids.head(tr.next, g) : ids.bot(g);
                int recv_right = tr.move == Move::Right ? ids.head(tr.next, g) : ids.bot(g);
                for (int other = 0; other < g_count; ++other) {
                    ca.interior.push_back({ids.bot(other), ids.bot(g), tag, recv_left});
                    ca.interior.push_back({tag, ids.bot(g), ids.bot(other), recv_right});
                }
                ca.left.push_back({ids.bot(g), tag, recv_left});
                ca.right.push_back({tag, ids.bot(g), recv_right});
            }
        }
    }
    for (int g = 0; g < g_count; ++g) {
        for (int g1 = 0; g1 < g_count; ++g1)
            for (int g2 = 0; g2 < g_count; ++g2)
                ca.interior.push_back({ids.bot(g1), ids.bot(g), ids.bot(g2), ids.bot(g)});
        for (int g2 = 0; g2 < g_count; ++g2) {
            ca.left.push_back({ids.bot(g), ids.bot(g2), ids.bot(g)});
            ca.right.push_back({ids.bot(g2), ids.bot(g), ids.bot(g)});
        }
        ca.single.push_back({ids.bot(g), ids.bot(g)});
    }

    CellularInstance inst;
    inst.automaton = std::move(ca);
    inst.initial.assign(cells, ids.bot(0));
    inst.initial[0] = ids.head(m.initial, 0);
    inst.validate();
    return inst;
}

// --- layering -----------------------------------------------------------------------

CellularInstance ca_to_dag_ca(const CellularInstance& inst, int t) {
    inst.validate();
    if (t < 1) throw PreconditionError("ca_to_dag_ca: need at least one step");
    const CellularAutomaton& ca = inst.automaton;
    const int q_count = ca.state_count;
    auto id = [&](int q, int step) { return (step - 1) * q_count + q; };

    CellularAutomaton out;
    out.state_count = (t + 1) * q_count;
    out.deterministic = ca.deterministic;
    out.dag = true;
    for (int step = 1; step <= t + 1; ++step)
        for (int q : ca.accepting) out.accepting.push_back(id(q, step));
    for (int step = 1; step <= t; ++step) {
        for (const auto& r : ca.interior)
            out.interior.push_back(
                {id(r.left, step), id(r.own, step), id(r.right, step), id(r.next, step + 1)});
        for (const auto& r : ca.left)
            out.left.push_back({id(r.a, step), id(r.b, step), id(r.next, step + 1)});
        for (const auto& r : ca.right)
            out.right.push_back({id(r.a, step), id(r.b, step), id(r.next, step + 1)});
        for (const auto& r : ca.single)
            out.single.push_back({id(r.own, step), id(r.next, step + 1)});
    }

    CellularInstance res;
    res.automaton = std::move(out);
    for (int q : inst.initial) res.initial.push_back(id(q, 1));
    res.validate();
    return res;
}

MultiHeadAutomaton mfa_to_dag_mfa(const MultiHeadAutomaton& a, int t) {
    a.validate();
    if (t < 1) throw PreconditionError("mfa_to_dag_mfa: need at least one step");
    const int q_count = a.state_count;
    auto id = [&](int q, int step) { return (step - 1) * q_count + q; };  // 1-based q

    MultiHeadAutomaton out;
    out.state_count = (t + 1) * q_count;
    out.heads = a.heads;
    out.initial = id(a.initial, 1);
    out.deterministic = a.deterministic;
    out.dag = true;
    out.input = a.input;
    for (int step = 1; step <= t + 1; ++step)
        for (int q : a.accepting) out.accepting.push_back(id(q, step));
    for (int step = 1; step <= t; ++step)
        for (const auto& tr : a.transitions)
            out.transitions.push_back(
                {id(tr.state, step), tr.observed, id(tr.next, step + 1), tr.moves});
    out.validate();
    return out;
}

// --- unique accepting configuration -----------------------------------------------

namespace {

struct LocalTables {
    std::map<std::tuple<int, int, int>, std::vector<int>> interior;
    std::map<std::pair<int, int>, std::vector<int>> left, right;
    std::map<int, std::vector<int>> single;

    explicit LocalTables(const CellularAutomaton& ca) {
        for (const auto& r : ca.interior) interior[{r.left, r.own, r.right}].push_back(r.next);
        for (const auto& r : ca.left) left[{r.a, r.b}].push_back(r.next);
        for (const auto& r : ca.right) right[{r.a, r.b}].push_back(r.next);
        for (const auto& r : ca.single) single[r.own].push_back(r.next);
    }
};

}  // namespace

CellularInstance ca_normalize_unique_accept_cyclic(const CellularInstance& inst) {
    inst.validate();
    const CellularAutomaton& ca = inst.automaton;
    const int q_count = ca.state_count;
    const int sink = q_count;
    const int total = q_count + 1;
    LocalTables tables(ca);

    CellularAutomaton out;
    out.state_count = total;
    out.deterministic = ca.deterministic;
    out.dag = false;
    out.accepting = {sink};

    auto result_for = [&](int own, bool near_sink, const std::vector<int>* options,
                          auto&& push) {
        if (own == sink || near_sink || ca.is_accepting(own)) {
            push(sink);
        } else if (options) {
            for (int n : *options) push(n);
        }
    };
    for (int x = 0; x < total; ++x)
        for (int o = 0; o < total; ++o)
            for (int y = 0; y < total; ++y) {
                const std::vector<int>* opts = nullptr;
                if (x != sink && o != sink && y != sink) {
                    auto it = tables.interior.find({x, o, y});
                    if (it != tables.interior.end()) opts = &it->second;
                }
                result_for(o, x == sink || y == sink, opts,
                           [&](int n) { out.interior.push_back({x, o, y, n}); });
            }
    for (int o = 0; o < total; ++o)
        for (int y = 0; y < total; ++y) {
            const std::vector<int>* opts = nullptr;
            if (o != sink && y != sink) {
                auto it = tables.left.find({o, y});
                if (it != tables.left.end()) opts = &it->second;
            }
            result_for(o, y == sink, opts, [&](int n) { out.left.push_back({o, y, n}); });
        }
    for (int x = 0; x < total; ++x)
        for (int o = 0; o < total; ++o) {
            const std::vector<int>* opts = nullptr;
            if (x != sink && o != sink) {
                auto it = tables.right.find({x, o});
                if (it != tables.right.end()) opts = &it->second;
            }
            result_for(o, x == sink, opts, [&](int n) { out.right.push_back({x, o, n}); });
        }
    for (int o = 0; o < total; ++o) {
        const std::vector<int>* opts = nullptr;
        if (o != sink) {
            auto it = tables.single.find(o);
            if (it != tables.single.end()) opts = &it->second;
        }
        result_for(o, false, opts, [&](int n) { out.single.push_back({o, n}); });
    }

    CellularInstance res;
    res.automaton = std::move(out);
    res.initial = inst.initial;
    res.accepting_config.assign(inst.initial.size(), sink);
    res.validate();
    return res;
}

CellularInstance ca_normalize_unique_accept_dag(const CellularInstance& inst, int t) {
    inst.validate();
    if (t < 0) throw PreconditionError("ca_normalize_unique_accept_dag: negative horizon");
    const CellularAutomaton& ca = inst.automaton;
    const int q_count = ca.state_count;
    const int cells = inst.cells();
    const int h_last = t + cells;     // step at which accepted runs are all-sink
    const int c_max = h_last + 1;     // clocks run 1..c_max
    LocalTables tables(ca);

    // clocked (q,c) -> (c-1)*Q + q; sink_c -> c_max*Q + (c-2) for c in 2..c_max
    auto cid = [&](int q, int c) { return (c - 1) * q_count + q; };
    auto sid = [&](int c) { return c_max * q_count + (c - 2); };

    CellularAutomaton out;
    out.state_count = c_max * q_count + (c_max - 1);
    out.deterministic = ca.deterministic;
    out.dag = true;
    for (int c = 2; c <= c_max; ++c) out.accepting.push_back(sid(c));
    for (int c = 1; c <= std::min(t + 1, c_max); ++c)
        for (int q : ca.accepting) out.accepting.push_back(cid(q, c));

    // per clock c the observable states are the clocked ones plus sink_c
    for (int c = 1; c < c_max; ++c) {
        auto states_at = [&](std::vector<int>& qs) {
            qs.clear();
            for (int q = 0; q < q_count; ++q) qs.push_back(q);
            if (c >= 2) qs.push_back(-1);  // -1 stands for sink_c
        };
        auto encode = [&](int q) { return q < 0 ? sid(c) : cid(q, c); };
        auto next_for = [&](int own, bool near_sink, const std::vector<int>* options,
                            auto&& push) {
            if (own < 0) { push(sid(c + 1)); return; }
            if (near_sink) { push(sid(c + 1)); return; }
            if (ca.is_accepting(own) && c <= t + 1) { push(sid(c + 1)); return; }
            if (c <= t && options) {
                for (int n : *options) push(cid(n, c + 1));
                return;
            }
            push(cid(own, c + 1));  // freeze-advance (stalled or past the horizon)
        };
        std::vector<int> qs;
        states_at(qs);
        for (int x : qs)
            for (int o : qs)
                for (int y : qs) {
                    const std::vector<int>* opts = nullptr;
                    if (x >= 0 && o >= 0 && y >= 0) {
                        auto it = tables.interior.find({x, o, y});
                        if (it != tables.interior.end()) opts = &it->second;
                    }
                    next_for(o, x < 0 || y < 0, opts, [&](int n) {
                        out.interior.push_back({encode(x), encode(o), encode(y), n});
                    });
                }
        for (int o : qs)
            for (int y : qs) {
                const std::vector<int>* opts = nullptr;
                if (o >= 0 && y >= 0) {
                    auto it = tables.left.find({o, y});
                    if (it != tables.left.end()) opts = &it->second;
                }
                next_for(o, y < 0, opts,
                         [&](int n) { out.left.push_back({encode(o), encode(y), n}); });
            }
        for (int x : qs)
            for (int o : qs) {
                const std::vector<int>* opts = nullptr;
                if (x >= 0 && o >= 0) {
                    auto it = tables.right.find({x, o});
                    if (it != tables.right.end()) opts = &it->second;
                }
                next_for(o, x < 0, opts,
                         [&](int n) { out.right.push_back({encode(x), encode(o), n}); });
            }
        for (int o : qs) {
            const std::vector<int>* opts = nullptr;
            if (o >= 0) {
                auto it = tables.single.find(o);
                if (it != tables.single.end()) opts = &it->second;
            }
            next_for(o, false, opts, [&](int n) { out.single.push_back({encode(o), n}); });
        }
    }

    CellularInstance res;
    res.automaton = std::move(out);
    for (int q : inst.initial) res.initial.push_back(cid(q, 1));
    res.accepting_config.assign(inst.initial.size(), sid(c_max));
    res.validate();
    return res;
}

// --- pebble games ---------------------------------------------------------------------

namespace {

// vertex layout of the pebble graphs built from a cellular instance
struct PebbleLayout {
    int cells, q_count;
    std::vector<int> aux_cell_offset;  // per cell, offset inside one aux layer
    int aux_size = 0;

    PebbleLayout(int s, int q) : cells(s), q_count(q) {
        aux_cell_offset.resize(s);
        for (int c = 0; c < s; ++c) {
            aux_cell_offset[c] = aux_size;
            if (s == 1) aux_size += q;                       // (own)
            else if (c == 0 || c == s - 1) aux_size += q * q;  // border pairs
            else aux_size += q * q * q;                      // (left, own, right)
        }
    }

    int main_size() const { return cells * q_count; }
    int main_vertex(int c, int q) const { return c * q_count + q; }
    int aux_interior(int c, int l, int o, int r) const {
        return aux_cell_offset[c] + (l * q_count + o) * q_count + r;
    }
    int aux_left(int o, int r) const { return aux_cell_offset[0] + o * q_count + r; }
    int aux_right(int l, int o) const {
        return aux_cell_offset[cells - 1] + l * q_count + o;
    }
    int aux_single(int o) const { return aux_cell_offset[0] + o; }

    int aux_threshold(int c) const {
        if (cells == 1) return 1;
        if (c == 0 || c == cells - 1) return 2;
        return 3;
    }
};

}  // namespace

ThresholdPebbleGame dagca_to_tpg(const CellularInstance& inst, int layers) {
    inst.validate();
    if (!inst.automaton.dag) throw PreconditionError("dagca_to_tpg: needs a dag automaton");
    if (inst.accepting_config.empty())
        throw PreconditionError("dagca_to_tpg: no unique accepting configuration");
    if (layers < 1) throw PreconditionError("dagca_to_tpg: need at least one layer");
    const int s = inst.cells();
    const int q_count = inst.automaton.state_count;
    PebbleLayout lay(s, q_count);

    // layer blocks: main(1) aux(1) main(2) ... main(layers)
    auto main_base = [&](int layer) {  // 1-based
        return (layer - 1) * (lay.main_size() + lay.aux_size);
    };
    auto aux_base = [&](int layer) { return main_base(layer) + lay.main_size(); };
    const int n = layers * lay.main_size() + (layers - 1) * lay.aux_size;

    ThresholdPebbleGame game;
    game.graph = Graph(n, true);
    game.thresholds.assign(n, 1);
    game.dag = true;
    game.cap = s;

    for (int layer = 1; layer < layers; ++layer) {
        int mb = main_base(layer);
        int ab = aux_base(layer);
        int nb = main_base(layer + 1);
        // main -> aux wiring plus aux thresholds
        for (int c = 0; c < s; ++c) {
            if (s == 1) {
                for (int o = 0; o < q_count; ++o) {
                    int v = ab + lay.aux_single(o);
                    game.thresholds[v] = 1;
                    game.graph.add_edge(mb + lay.main_vertex(0, o), v);
                }
            } else if (c == 0) {
                for (int o = 0; o < q_count; ++o)
                    for (int r = 0; r < q_count; ++r) {
                        int v = ab + lay.aux_left(o, r);
                        game.thresholds[v] = 2;
                        game.graph.add_edge(mb + lay.main_vertex(0, o), v);
                        game.graph.add_edge(mb + lay.main_vertex(1, r), v);
                    }
            } else if (c == s - 1) {
                for (int l = 0; l < q_count; ++l)
                    for (int o = 0; o < q_count; ++o) {
                        int v = ab + lay.aux_right(l, o);
                        game.thresholds[v] = 2;
                        game.graph.add_edge(mb + lay.main_vertex(s - 2, l), v);
                        game.graph.add_edge(mb + lay.main_vertex(s - 1, o), v);
                    }
            } else {
                for (int l = 0; l < q_count; ++l)
                    for (int o = 0; o < q_count; ++o)
                        for (int r = 0; r < q_count; ++r) {
                            int v = ab + lay.aux_interior(c, l, o, r);
                            game.thresholds[v] = 3;
                            game.graph.add_edge(mb + lay.main_vertex(c - 1, l), v);
                            game.graph.add_edge(mb + lay.main_vertex(c, o), v);
                            game.graph.add_edge(mb + lay.main_vertex(c + 1, r), v);
                        }
            }
        }
        // aux -> next main per automaton rule
        if (s == 1) {
            for (const auto& r : inst.automaton.single)
                game.graph.add_edge(ab + lay.aux_single(r.own), nb + lay.main_vertex(0, r.next));
        } else {
            for (const auto& r : inst.automaton.left)
                game.graph.add_edge(ab + lay.aux_left(r.a, r.b), nb + lay.main_vertex(0, r.next));
            for (const auto& r : inst.automaton.right)
                game.graph.add_edge(ab + lay.aux_right(r.a, r.b),
                                    nb + lay.main_vertex(s - 1, r.next));
            for (const auto& r : inst.automaton.interior)
                for (int c = 1; c + 1 < s; ++c)
                    game.graph.add_edge(ab + lay.aux_interior(c, r.left, r.own, r.right),
                                        nb + lay.main_vertex(c, r.next));
        }
    }

    for (int c = 0; c < s; ++c) {
        game.start.push_back(main_base(1) + lay.main_vertex(c, inst.initial[c]));
        game.target.push_back(main_base(layers) + lay.main_vertex(c, inst.accepting_config[c]));
    }
    game.validate();
    return game;
}

ThresholdPebbleGame ca_to_tpg_cyclic(const CellularInstance& inst) {
    inst.validate();
    if (inst.accepting_config.empty())
        throw PreconditionError("ca_to_tpg_cyclic: no unique accepting configuration");
    const int s = inst.cells();
    const int q_count = inst.automaton.state_count;
    PebbleLayout lay(s, q_count);
    const int n = lay.main_size() + lay.aux_size;
    const int ab = lay.main_size();

    ThresholdPebbleGame game;
    game.graph = Graph(n, true);
    game.thresholds.assign(n, 1);
    game.dag = false;
    game.cap = s;

    for (int c = 0; c < s; ++c) {
        if (s == 1) {
            for (int o = 0; o < q_count; ++o) {
                int v = ab + lay.aux_single(o);
                game.thresholds[v] = 1;
                game.graph.add_edge(lay.main_vertex(0, o), v);
            }
        } else if (c == 0) {
            for (int o = 0; o < q_count; ++o)
                for (int r = 0; r < q_count; ++r) {
                    int v = ab + lay.aux_left(o, r);
                    game.thresholds[v] = 2;
                    game.graph.add_edge(lay.main_vertex(0, o), v);
                    game.graph.add_edge(lay.main_vertex(1, r), v);
                }
        } else if (c == s - 1) {
            for (int l = 0; l < q_count; ++l)
                for (int o = 0; o < q_count; ++o) {
                    int v = ab + lay.aux_right(l, o);
                    game.thresholds[v] = 2;
                    game.graph.add_edge(lay.main_vertex(s - 2, l), v);
                    game.graph.add_edge(lay.main_vertex(s - 1, o), v);
                }
        } else {
            for (int l = 0; l < q_count; ++l)
                for (int o = 0; o < q_count; ++o)
                    for (int r = 0; r < q_count; ++r) {
                        int v = ab + lay.aux_interior(c, l, o, r);
                        game.thresholds[v] = 3;
                        game.graph.add_edge(lay.main_vertex(c - 1, l), v);
                        game.graph.add_edge(lay.main_vertex(c, o), v);
                        game.graph.add_edge(lay.main_vertex(c + 1, r), v);
                    }
        }
    }
    if (s == 1) {
        for (const auto& r : inst.automaton.single)
            game.graph.add_edge(ab + lay.aux_single(r.own), lay.main_vertex(0, r.next));
    } else {
        for (const auto& r : inst.automaton.left)
            game.graph.add_edge(ab + lay.aux_left(r.a, r.b), lay.main_vertex(0, r.next));
        for (const auto& r : inst.automaton.right)
            game.graph.add_edge(ab + lay.aux_right(r.a, r.b), lay.main_vertex(s - 1, r.next));
        for (const auto& r : inst.automaton.interior)
            for (int c = 1; c + 1 < s; ++c)
                game.graph.add_edge(ab + lay.aux_interior(c, r.left, r.own, r.right),
                                    lay.main_vertex(c, r.next));
    }

    for (int c = 0; c < s; ++c) {
        game.start.push_back(lay.main_vertex(c, inst.initial[c]));
        game.target.push_back(lay.main_vertex(c, inst.accepting_config[c]));
    }
    game.validate();
    return game;
}

// --- layered reachability -> injective lcs ----------------------------------------------

LcsInstance layeredreach_to_lcs_injective(const Graph& g) {
    if (!g.directed()) throw PreconditionError("layered-reach: graph must be directed");
    if (g.has_holes()) throw PreconditionError("layered-reach: template graph");
    if (g.n() < 1) throw PreconditionError("layered-reach: empty graph");
    if (static_cast<int>(g.layers.size()) != g.n())
        throw PreconditionError("layered-reach: malformed layering");
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b)
            if (g.has_edge(a, b) && g.layers[b] != g.layers[a] + 1)
                throw PreconditionError("layered-reach: malformed layering");

    int lmin = *std::min_element(g.layers.begin(), g.layers.end());
    int lmax = *std::max_element(g.layers.begin(), g.layers.end());
    int m = lmax - lmin + 1;

    if (g.s && g.t) {
        int first = 0, last = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (g.layers[v] == lmin) ++first;
            if (g.layers[v] == lmax) ++last;
        }
        if (first != 1 || last != 1 || g.layers[*g.s] != lmin || g.layers[*g.t] != lmax)
            throw PreconditionError("layered-reach: s/t must be the unique extreme-layer vertices");
    }

    // edges named in ascending (layer, from, to) order
    struct Edge { int from, to, layer; };
    std::vector<Edge> edges;
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b)
            if (g.has_edge(a, b)) edges.push_back({a, b, g.layers[a]});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.layer, x.from, x.to) < std::tie(y.layer, y.from, y.to);
    });

    LcsInstance out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges.size() <= 26) out.alphabet.push_back(std::string(1, static_cast<char>('a' + e)));
        else out.alphabet.push_back("e" + std::to_string(e + 1));
    }
    out.strings.assign(4, {});
    out.l = m - 1;

    auto edge_index = [&](int from, int to) {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].from == from && edges[e].to == to) return static_cast<int>(e);
        throw std::logic_error("layered-reach: missing edge");
    };

    for (int layer = lmin; layer <= lmax; ++layer) {
        int pos = layer - lmin + 1;  // 1-based layer position
        int fwd = pos % 2 == 1 ? 0 : 2;
        int rev = fwd + 1;
        std::vector<int> vertices;
        for (int v = 0; v < g.n(); ++v)
            if (g.layers[v] == layer) vertices.push_back(v);

        auto incoming = [&](int v) {
            std::vector<int> in;
            for (int u = 0; u < g.n(); ++u)
                if (g.has_edge(u, v)) in.push_back(edge_index(u, v));
            return in;  // ascending start vertex by construction
        };
        auto outgoing = [&](int v) {
            std::vector<int> outs;
            for (int w = 0; w < g.n(); ++w)
                if (g.has_edge(v, w)) outs.push_back(edge_index(v, w));
            return outs;  // ascending end vertex
        };

        for (int v : vertices) {
            for (int e : incoming(v)) out.strings[fwd].push_back(e);
            for (int e : outgoing(v)) out.strings[fwd].push_back(e);
        }
        for (auto it = vertices.rbegin(); it != vertices.rend(); ++it) {
            auto in = incoming(*it);
            for (auto e = in.rbegin(); e != in.rend(); ++e) out.strings[rev].push_back(*e);
            auto outs = outgoing(*it);
            for (auto e = outs.rbegin(); e != outs.rend(); ++e) out.strings[rev].push_back(*e);
        }
    }

    out.validate();
    if (out.strings.size() != 4) throw std::logic_error("layered-reach: string count drift");
    if (!out.injective()) throw std::logic_error("layered-reach: output not a p-sequence instance");
    return out;
}

// --- sequentialization ----------------------------------------------------------------

SequentialCellularInstance nca_to_sequential(const CellularInstance& inst) {
    inst.validate();
    const CellularAutomaton& ca = inst.automaton;
    const int q_count = ca.state_count;
    // cur in the high bits: state ids then grow whenever the stepping cell's
    // current component grows, which is what the sequential dag flag checks
    auto pair_id = [&](int prev, int cur) { return cur * q_count + prev; };

    CellularAutomaton out;
    out.state_count = q_count * q_count;
    out.deterministic = ca.deterministic;
    out.dag = ca.dag;
    for (int prev = 0; prev < q_count; ++prev)
        for (int q : ca.accepting) out.accepting.push_back(pair_id(prev, q));

    // left neighbour already fired (its prev is the pre-step state); the
    // right one has not (its cur is the pre-step state)
    for (const auto& r : ca.interior)
        for (int x = 0; x < q_count; ++x)
            for (int y = 0; y < q_count; ++y)
                for (int z = 0; z < q_count; ++z)
                    out.interior.push_back({pair_id(r.left, x), pair_id(y, r.own),
                                            pair_id(z, r.right), pair_id(r.own, r.next)});
    for (const auto& r : ca.left)  // (own, right)
        for (int y = 0; y < q_count; ++y)
            for (int z = 0; z < q_count; ++z)
                out.left.push_back({pair_id(y, r.a), pair_id(z, r.b), pair_id(r.a, r.next)});
    for (const auto& r : ca.right)  // (left, own)
        for (int x = 0; x < q_count; ++x)
            for (int y = 0; y < q_count; ++y)
                out.right.push_back({pair_id(r.a, x), pair_id(y, r.b), pair_id(r.b, r.next)});
    for (const auto& r : ca.single)
        for (int y = 0; y < q_count; ++y)
            out.single.push_back({pair_id(y, r.own), pair_id(r.own, r.next)});

    SequentialCellularInstance res;
    res.automaton = std::move(out);
    for (int q : inst.initial) res.initial.push_back(pair_id(q, q));
    res.validate();
    return res;
}

// --- horizon padding --------------------------------------------------------------------

PaddedSeqca seqca_pad_to_horizon(const SequentialCellularInstance& inst, int t,
                                 std::uint64_t node_cap) {
    inst.validate();
    if (t < 0) throw PreconditionError("seqca_pad_to_horizon: negative horizon");
    const CellularAutomaton& ca = inst.automaton;
    const int k = inst.cells();
    const int raw_count = ca.state_count;
    const int horizon = t + k + 2;  // compute rounds, flush rounds, gated round
    LocalTables tables(ca);

    // padded state: ((clock-1)*2 + abit)*raw + q
    auto pid = [&](int q, int clock, int abit) {
        return ((clock - 1) * 2 + abit) * raw_count + q;
    };
    auto raw_of = [&](int id) { return id % raw_count; };
    auto abit_of = [&](int id) { return (id / raw_count) % 2; };
    auto clock_of = [&](int id) { return id / (2 * raw_count) + 1; };

    std::vector<int> start;
    for (int q : inst.initial) start.push_back(pid(q, 1, ca.is_accepting(q) ? 1 : 0));

    CellularAutomaton out;
    out.state_count = (horizon + 1) * 2 * raw_count;
    out.deterministic = ca.deterministic;
    out.dag = true;
    for (int q = 0; q < raw_count; ++q) out.accepting.push_back(pid(q, horizon + 1, 1));

    std::set<std::tuple<int, int, int, int, int>> emitted;  // kind, a, b, c, next
    auto emit = [&](int kind, int a, int b, int c, int next) {
        if (!emitted.insert({kind, a, b, c, next}).second) return;
        switch (kind) {
            case 3: out.interior.push_back({a, b, c, next}); break;
            case 2: out.left.push_back({a, b, next}); break;
            case 1: out.right.push_back({a, b, next}); break;
            case 0: out.single.push_back({b, next}); break;
        }
    };

    auto key_of = [&](const std::vector<int>& cfg, int cell) {
        std::string s;
        for (int v : cfg) { s += std::to_string(v); s += ','; }
        s += '@';
        s += std::to_string(cell);
        return s;
    };

    std::unordered_set<std::string> seen;
    std::deque<std::pair<std::vector<int>, int>> queue;
    queue.emplace_back(start, 0);
    seen.insert(key_of(start, 0));

    while (!queue.empty()) {
        auto [cfg, cell] = queue.front();
        queue.pop_front();
        if (seen.size() > node_cap)
            throw ConstructionBudgetExceeded("seqca_pad_to_horizon: node cap exceeded");
        const int own = cfg[cell];
        const int clock = clock_of(own);
        if (clock > horizon) continue;  // all rounds complete on this branch

        const int left = cell > 0 ? cfg[cell - 1] : -1;
        const int right = cell + 1 < k ? cfg[cell + 1] : -1;
        const int a_near = (left >= 0 ? abit_of(left) : 0) | (right >= 0 ? abit_of(right) : 0);

        // raw options during compute rounds
        const std::vector<int>* opts = nullptr;
        if (clock <= t) {
            if (k == 1) {
                auto it = tables.single.find(raw_of(own));
                if (it != tables.single.end()) opts = &it->second;
            } else if (cell == 0) {
                auto it = tables.left.find({raw_of(own), raw_of(right)});
                if (it != tables.left.end()) opts = &it->second;
            } else if (cell == k - 1) {
                auto it = tables.right.find({raw_of(left), raw_of(own)});
                if (it != tables.right.end()) opts = &it->second;
            } else {
                auto it = tables.interior.find({raw_of(left), raw_of(own), raw_of(right)});
                if (it != tables.interior.end()) opts = &it->second;
            }
        }
        std::vector<int> raws;
        if (opts && !opts->empty()) raws = *opts;
        else raws = {raw_of(own)};  // stall-pad / flush freeze

        for (int nq : raws) {
            int a2 = abit_of(own) | a_near | (ca.is_accepting(nq) ? 1 : 0);
            if (clock == horizon && a2 != 1) continue;  // gated final round
            int next = pid(nq, clock + 1, a2);
            if (k == 1) emit(0, -1, own, -1, next);
            else if (cell == 0) emit(2, own, right, -1, next);
            else if (cell == k - 1) emit(1, left, own, -1, next);
            else emit(3, left, own, right, next);
            std::vector<int> ncfg = cfg;
            ncfg[cell] = next;
            int ncell = (cell + 1) % k;
            if (seen.insert(key_of(ncfg, ncell)).second) queue.emplace_back(std::move(ncfg), ncell);
        }
    }

    PaddedSeqca res;
    res.instance.automaton = std::move(out);
    res.instance.initial = start;
    res.instance.validate();
    res.horizon = horizon;
    res.step_of_state = [raw_count](int s) { return s / (2 * raw_count) + 1; };
    return res;
}

// --- sequential automaton -> lcs ------------------------------------------------------------

namespace {

struct TagRef {
    SeqTag tag;
    int index;  // position in the global tag list
};

std::string state_token(int q, int s) {
    return "q" + std::to_string(q) + "s" + std::to_string(s);
}

std::string tag_token(const SeqTag& t) {
    auto part = [](int v) { return v < 0 ? std::string("b") : std::to_string(v); };
    return "t" + part(t.left) + "_" + std::to_string(t.own) + "_" + part(t.right) + "_" +
           std::to_string(t.next) + "s" + std::to_string(t.step) + "c" + std::to_string(t.cell);
}

}  // namespace

SeqcaLcs seqca_to_lcs(const SequentialCellularInstance& inst, int t,
                      const std::function<bool(const SeqTag&)>& admissible) {
    inst.validate();
    if (!inst.automaton.dag)
        throw PreconditionError("seqca_to_lcs: needs a dag automaton (normalize first)");
    if (t < 1) throw PreconditionError("seqca_to_lcs: need at least one major step");
    const CellularAutomaton& ca = inst.automaton;
    const int k = inst.cells();

    // all tags (f, s, i), grouped by (s, i), each group in canonical
    // (left, own, right, next) order
    std::vector<SeqTag> tags;
    auto add_tag = [&](int l, int o, int r, int n, int s, int i) {
        SeqTag tag{l, o, r, n, s, i};
        if (!admissible || admissible(tag)) tags.push_back(tag);
    };
    for (int s = 1; s <= t; ++s)
        for (int i = 1; i <= k; ++i) {
            if (k == 1) {
                for (const auto& r : ca.single) add_tag(-1, r.own, -1, r.next, s, i);
            } else if (i == 1) {
                for (const auto& r : ca.left) add_tag(-1, r.a, r.b, r.next, s, i);
            } else if (i == k) {
                for (const auto& r : ca.right) add_tag(r.a, r.b, -1, r.next, s, i);
            } else {
                for (const auto& r : ca.interior) add_tag(r.left, r.own, r.right, r.next, s, i);
            }
        }
    auto tag_less = [](const SeqTag& a, const SeqTag& b) {
        return std::tie(a.step, a.cell, a.left, a.own, a.right, a.next) <
               std::tie(b.step, b.cell, b.left, b.own, b.right, b.next);
    };
    std::sort(tags.begin(), tags.end(), tag_less);
    tags.erase(std::unique(tags.begin(), tags.end(),
                           [&](const SeqTag& a, const SeqTag& b) {
                               return !tag_less(a, b) && !tag_less(b, a);
                           }),
               tags.end());

    // states included in each cell's skeleton blocks
    std::vector<std::map<int, std::set<int>>> included(k + 1);  // cell -> step -> states
    for (int i = 1; i <= k; ++i) included[i][1].insert(inst.initial[i - 1]);
    for (const auto& tag : tags) {
        included[tag.cell][tag.step].insert(tag.own);                 // rule 1/2 anchor
        included[tag.cell][tag.step + 1].insert(tag.next);            // rule 3/4 anchor
        if (tag.cell > 1) included[tag.cell - 1][tag.step + 1].insert(tag.left);  // rule 5
        if (tag.cell < k) included[tag.cell + 1][tag.step].insert(tag.right);     // rule 6
    }

    // token ids: state tokens first (by cell-independent (q, s)), then tags
    std::map<std::pair<int, int>, int> state_sym;  // (q, s) -> symbol
    LcsInstance lcs;
    for (int i = 1; i <= k; ++i)
        for (const auto& [s, qs] : included[i])
            for (int q : qs)
                if (!state_sym.count({q, s})) {
                    state_sym[{q, s}] = static_cast<int>(lcs.alphabet.size());
                    lcs.alphabet.push_back(state_token(q, s));
                }
    std::vector<int> tag_sym(tags.size());
    for (std::size_t j = 0; j < tags.size(); ++j) {
        tag_sym[j] = static_cast<int>(lcs.alphabet.size());
        lcs.alphabet.push_back(tag_token(tags[j]));
    }

    // per (cell, anchor step, anchor state): tag indices per role
    struct AnchorLists {
        std::vector<int> rule12;  // own-cell tags anchored after (f_old, s)
        std::vector<int> rule34;  // own-cell tags anchored before (f_new, s+1)
        std::vector<int> rule5;   // right neighbour's tags after (f_left, s+1)
        std::vector<int> rule6;   // left neighbour's tags after (f_right, s)
    };
    std::map<std::tuple<int, int, int>, AnchorLists> anchors;
    for (std::size_t j = 0; j < tags.size(); ++j) {
        const SeqTag& tag = tags[j];
        anchors[{tag.cell, tag.step, tag.own}].rule12.push_back(static_cast<int>(j));
        anchors[{tag.cell, tag.step + 1, tag.next}].rule34.push_back(static_cast<int>(j));
        if (tag.cell > 1)
            anchors[{tag.cell - 1, tag.step + 1, tag.left}].rule5.push_back(static_cast<int>(j));
        if (tag.cell < k)
            anchors[{tag.cell + 1, tag.step, tag.right}].rule6.push_back(static_cast<int>(j));
    }

    SeqcaLcs out;
    out.lcs.alphabet = lcs.alphabet;
    out.lcs.l = static_cast<long long>(t) * k;

    static const AnchorLists empty_lists;
    for (int i = 1; i <= k; ++i) {
        for (int pair = 0; pair < 2; ++pair) {  // 0: odd blocks (s1,s2), 1: even (s3,s4)
            for (int variant = 0; variant < 2; ++variant) {  // 0: forward, 1: reversed
                std::vector<int> word;
                std::vector<int> rules;
                auto emit = [&](int sym, int rule) {
                    word.push_back(sym);
                    rules.push_back(rule);
                };
                for (int s = 1; s <= t + 1; ++s) {
                    if ((s % 2 == 1 ? 0 : 1) != pair) continue;
                    auto it = included[i].find(s);
                    if (it == included[i].end()) continue;
                    std::vector<int> qs(it->second.begin(), it->second.end());
                    if (variant == 1) std::reverse(qs.begin(), qs.end());
                    for (int q : qs) {
                        auto at = anchors.find({i, s, q});
                        const AnchorLists& lists =
                            at == anchors.end() ? empty_lists : at->second;
                        // prefix: rule 3/4 tags (reversed on the second string)
                        std::vector<int> pre = lists.rule34;
                        if (variant == 1) std::reverse(pre.begin(), pre.end());
                        for (int j : pre) emit(tag_sym[j], variant == 0 ? 3 : 4);
                        emit(state_sym.at({q, s}), 0);
                        // suffix in chain order: the right neighbour's
                        // step-(s-1) tags, the left neighbour's step-s tags,
                        // then the cell's own step-s tags
                        for (int j : lists.rule5) emit(tag_sym[j], 5);
                        for (int j : lists.rule6) emit(tag_sym[j], 6);
                        std::vector<int> post = lists.rule12;
                        if (variant == 1) std::reverse(post.begin(), post.end());
                        for (int j : post) emit(tag_sym[j], variant == 0 ? 1 : 2);
                    }
                }
                // rule 7: all absent tags once after each letter
                std::set<int> present(word.begin(), word.end());
                std::vector<int> missing;
                for (std::size_t j = 0; j < tags.size(); ++j)
                    if (!present.count(tag_sym[j])) missing.push_back(tag_sym[j]);
                std::vector<int> completed;
                std::vector<int> completed_rules;
                for (std::size_t p = 0; p < word.size(); ++p) {
                    completed.push_back(word[p]);
                    completed_rules.push_back(rules[p]);
                    for (int sym : missing) {
                        completed.push_back(sym);
                        completed_rules.push_back(7);
                    }
                }
                // drop everything before the cell's initial state tag
                int init_sym = state_sym.at({inst.initial[i - 1], 1});
                std::size_t cut = 0;
                for (std::size_t p = 0; p < completed.size(); ++p)
                    if (completed[p] == init_sym && completed_rules[p] == 0) {
                        cut = p;
                        break;
                    }
                completed.erase(completed.begin(), completed.begin() + cut);
                completed_rules.erase(completed_rules.begin(), completed_rules.begin() + cut);
                // one completion clump before the first letter as well: a tag
                // anchored at the very start of a string could otherwise never
                // be preceded by the earlier minor steps' tags
                completed.insert(completed.begin(), missing.begin(), missing.end());
                completed_rules.insert(completed_rules.begin(), missing.size(), 7);
                out.lcs.strings.push_back(std::move(completed));
                out.rule_ids.push_back(std::move(completed_rules));
            }
        }
    }

    out.lcs.validate();
    if (static_cast<int>(out.lcs.strings.size()) != 4 * k)
        throw std::logic_error("seqca_to_lcs: string count drift");
    if (out.lcs.l != static_cast<long long>(t) * k)
        throw std::logic_error("seqca_to_lcs: target length drift");
    return out;
}

SeqcaLcs nca_to_lcs_pipeline(const CellularInstance& inst, int t) {
    SequentialCellularInstance seq = nca_to_sequential(inst);
    PaddedSeqca padded = seqca_pad_to_horizon(seq, t);
    auto step_of = padded.step_of_state;
    auto admissible = [step_of](const SeqTag& tag) { return step_of(tag.own) == tag.step; };
    return seqca_to_lcs(padded.instance, padded.horizon, admissible);
}

}  // namespace parared
