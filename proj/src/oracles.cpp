#include "parared/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace parared {

bool eval_bf(const BooleanFormula& f, const std::string& assignment) {
    return f.evaluate(assignment);
}

const char* to_string(GraphPropertyKind k) {
    switch (k) {
        case GraphPropertyKind::Reach: return "reach";
        case GraphPropertyKind::DagReach: return "dag-reach";
        case GraphPropertyKind::LayeredReach: return "layered-reach";
        case GraphPropertyKind::Cycle: return "cycle";
        case GraphPropertyKind::UndirectedReach: return "undirected-reach";
        case GraphPropertyKind::Tree: return "tree";
        case GraphPropertyKind::Forest: return "forest";
        case GraphPropertyKind::UndirectedCycle: return "undirected-cycle";
    }
    return "?";
}

GraphPropertyKind graph_property_from_string(const std::string& s) {
    static const std::map<std::string, GraphPropertyKind> table = {
        {"reach", GraphPropertyKind::Reach},
        {"dag-reach", GraphPropertyKind::DagReach},
        {"layered-reach", GraphPropertyKind::LayeredReach},
        {"cycle", GraphPropertyKind::Cycle},
        {"undirected-reach", GraphPropertyKind::UndirectedReach},
        {"tree", GraphPropertyKind::Tree},
        {"forest", GraphPropertyKind::Forest},
        {"undirected-cycle", GraphPropertyKind::UndirectedCycle},
    };
    auto it = table.find(s);
    if (it == table.end()) throw PreconditionError("unknown graph property: " + s);
    return it->second;
}

GraphPropertyKind graph_property_of_base(BaseKind base) {
    switch (base) {
        case BaseKind::Reach: return GraphPropertyKind::Reach;
        case BaseKind::DagReach: return GraphPropertyKind::DagReach;
        case BaseKind::Cycle: return GraphPropertyKind::Cycle;
        case BaseKind::UndirectedReach: return GraphPropertyKind::UndirectedReach;
        case BaseKind::Tree: return GraphPropertyKind::Tree;
        case BaseKind::Forest: return GraphPropertyKind::Forest;
        case BaseKind::UndirectedCycle: return GraphPropertyKind::UndirectedCycle;
        default: throw PreconditionError("not a graph base kind");
    }
}

// --- graph properties -------------------------------------------------------

namespace {

std::vector<char> reachable_from(const Graph& g, int start) {
    std::vector<char> seen(g.n(), 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w = 0; w < g.n(); ++w)
            if (g.has_edge(v, w) && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return seen;
}

bool directed_has_cycle(const Graph& g) {
    // 0 = white, 1 = on stack, 2 = done
    std::vector<char> color(g.n(), 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        color[v] = 1;
        for (int w = 0; w < g.n(); ++w) {
            if (!g.has_edge(v, w)) continue;
            if (color[w] == 1) return true;
            if (color[w] == 0 && self(self, w)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (int v = 0; v < g.n(); ++v)
        if (color[v] == 0 && dfs(dfs, v)) return true;
    return false;
}

bool undirected_has_cycle(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.has_edge(v, v)) return true;
    std::vector<int> parent(g.n(), -2);
    for (int root = 0; root < g.n(); ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w = 0; w < g.n(); ++w) {
                if (!g.has_edge(v, w) || w == v) continue;
                if (parent[w] == -2) {
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != w) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool undirected_connected(const Graph& g) {
    if (g.n() == 0) return false;
    auto seen = reachable_from(g, 0);
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

void check_layering(const Graph& g) {
    if (static_cast<int>(g.layers.size()) != g.n())
        throw PreconditionError("graph: missing or incomplete layer data");
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b)
            if (g.has_edge(a, b) && g.layers[b] != g.layers[a] + 1)
                throw PreconditionError("graph: edge violates layering");
}

}  // namespace

bool graph_property(GraphPropertyKind kind, const Graph& g) {
    if (g.has_holes()) throw PreconditionError("graph property on a template graph");
    auto need_st = [&]() {
        if (!g.s || !g.t) throw PreconditionError("graph: missing s/t");
    };
    auto need_undirected = [&]() {
        if (g.directed()) throw PreconditionError("graph: property needs an undirected graph");
    };
    auto need_directed = [&]() {
        if (!g.directed()) throw PreconditionError("graph: property needs a directed graph");
    };
    switch (kind) {
        case GraphPropertyKind::Reach:
            need_directed();
            need_st();
            return reachable_from(g, *g.s)[*g.t] != 0;
        case GraphPropertyKind::DagReach:
            need_directed();
            need_st();
            if (directed_has_cycle(g)) return false;
            return reachable_from(g, *g.s)[*g.t] != 0;
        case GraphPropertyKind::LayeredReach:
            need_directed();
            need_st();
            check_layering(g);
            return reachable_from(g, *g.s)[*g.t] != 0;
        case GraphPropertyKind::Cycle:
            need_directed();
            return directed_has_cycle(g);
        case GraphPropertyKind::UndirectedReach:
            need_undirected();
            need_st();
            return reachable_from(g, *g.s)[*g.t] != 0;
        case GraphPropertyKind::Tree:
            need_undirected();
            return g.n() >= 1 && undirected_connected(g) && !undirected_has_cycle(g);
        case GraphPropertyKind::Forest:
            need_undirected();
            return !undirected_has_cycle(g);
        case GraphPropertyKind::UndirectedCycle:
            need_undirected();
            return undirected_has_cycle(g);
    }
    throw std::logic_error("bad graph property kind");
}

// --- union problems ---------------------------------------------------------

const char* to_string(UnionVariant v) {
    switch (v) {
        case UnionVariant::Family: return "family-union";
        case UnionVariant::Subset: return "subset-union";
        case UnionVariant::Weighted: return "weighted-union";
    }
    return "?";
}

WordOracle base_oracle(BaseKind kind) {
    switch (kind) {
        case BaseKind::Word:
            throw PreconditionError("word base has no canonical oracle");
        case BaseKind::Bf:
            return [](const std::string& w) {
                auto [f, a] = decode_bf_word(w);
                return f.evaluate(a);
            };
        case BaseKind::Agen:
        case BaseKind::Gen:
            return [kind](const std::string& w) {
                auto [gi, chosen] = decode_agen_word(w);
                if (kind == BaseKind::Agen && !gi.associative)
                    throw PreconditionError("agen word without associative flag");
                auto closure = generator_closure(gi.table, chosen);
                return closure.count(gi.target) > 0;
            };
        default: {
            GraphPropertyKind prop = graph_property_of_base(kind);
            return [prop](const std::string& w) {
                return graph_property(prop, decode_graph_word(w));
            };
        }
    }
}

namespace {

// Union of zero instantiations: the template with every hole set to 0.
InstantiationWord zero_instantiation(const std::shared_ptr<const TemplateWord>& t) {
    std::string w = t->symbols();
    for (int p : t->holes()) w[p] = '0';
    return InstantiationWord(t, std::move(w));
}

}  // namespace

Outcome solve_union(const FamilyUnionInstance& inst, const WordOracle& oracle, Budget& budget) {
    inst.validate();
    if (inst.families.empty()) {
        if (!budget.charge()) return Outcome::BudgetExceeded;
        return outcome_of(oracle(zero_instantiation(inst.tmpl).symbols()));
    }
    for (const auto& fam : inst.families)
        if (fam.empty()) return Outcome::No;
    std::vector<std::size_t> idx(inst.families.size(), 0);
    std::vector<InstantiationWord> chosen;
    while (true) {
        if (!budget.charge()) return Outcome::BudgetExceeded;
        chosen.clear();
        for (std::size_t i = 0; i < idx.size(); ++i) chosen.push_back(inst.families[i][idx[i]]);
        if (oracle(union_instantiations(chosen).symbols())) return Outcome::Yes;
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == inst.families[i].size()) idx[i++] = 0;
        if (i == idx.size()) return Outcome::No;
    }
}

Outcome solve_union(const SubsetUnionInstance& inst, const WordOracle& oracle, Budget& budget) {
    inst.validate();
    int n = static_cast<int>(inst.elements.size());
    if (inst.k > n) return Outcome::No;
    if (inst.k == 0) {
        if (!budget.charge()) return Outcome::BudgetExceeded;
        return outcome_of(oracle(zero_instantiation(inst.tmpl).symbols()));
    }
    std::vector<int> comb(inst.k);
    for (int i = 0; i < inst.k; ++i) comb[i] = i;
    std::vector<InstantiationWord> chosen;
    while (true) {
        if (!budget.charge()) return Outcome::BudgetExceeded;
        chosen.clear();
        for (int i : comb) chosen.push_back(inst.elements[i]);
        if (oracle(union_instantiations(chosen).symbols())) return Outcome::Yes;
        int i = inst.k - 1;
        while (i >= 0 && comb[i] == n - inst.k + i) --i;
        if (i < 0) return Outcome::No;
        ++comb[i];
        for (int j = i + 1; j < inst.k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

Outcome solve_union(const WeightedUnionInstance& inst, const WordOracle& oracle, Budget& budget) {
    inst.validate();
    const auto& holes = inst.tmpl->holes();
    int h = static_cast<int>(holes.size());
    if (inst.k > h) return Outcome::No;
    std::string base = inst.tmpl->symbols();
    for (int p : holes) base[p] = '0';
    if (inst.k == 0) {
        if (!budget.charge()) return Outcome::BudgetExceeded;
        return outcome_of(oracle(base));
    }
    std::vector<int> comb(inst.k);
    for (int i = 0; i < inst.k; ++i) comb[i] = i;
    while (true) {
        if (!budget.charge()) return Outcome::BudgetExceeded;
        std::string w = base;
        for (int i : comb) w[holes[i]] = '1';
        if (oracle(w)) return Outcome::Yes;
        int i = inst.k - 1;
        while (i >= 0 && comb[i] == h - inst.k + i) --i;
        if (i < 0) return Outcome::No;
        ++comb[i];
        for (int j = i + 1; j < inst.k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

// --- bounded Turing machines -------------------------------------------------

namespace {

struct TmConfig {
    int state;
    int head;
    std::string tape;  // symbol indices as chars

    std::string key() const {
        return std::to_string(state) + ":" + std::to_string(head) + ":" + tape;
    }
};

}  // namespace

Outcome run_tm_bounded(const BoundedTMInstance& inst, Budget& budget) {
    inst.validate();
    const SingleTapeTM& m = inst.machine;
    TmConfig start{m.initial, 0, std::string(static_cast<std::size_t>(inst.cells), '\0')};

    std::map<std::pair<int, int>, std::vector<const SingleTapeTM::Transition*>> delta;
    for (const auto& tr : m.transitions) delta[{tr.state, tr.read}].push_back(&tr);

    auto successors = [&](const TmConfig& c, std::vector<TmConfig>& out) {
        out.clear();
        auto it = delta.find({c.state, c.tape[c.head]});
        if (it == delta.end()) return;
        for (const auto* tr : it->second) {
            TmConfig next = c;
            next.state = tr->next;
            next.tape[c.head] = static_cast<char>(tr->write);
            if (tr->move == Move::Left) --next.head;
            else if (tr->move == Move::Right) ++next.head;
            if (next.head < 0 || next.head >= inst.cells) continue;  // boundary violation
            out.push_back(std::move(next));
        }
    };

    if (m.deterministic) {
        TmConfig cur = start;
        std::vector<TmConfig> next;
        for (long long step = 0;; ++step) {
            if (!budget.charge()) return Outcome::BudgetExceeded;
            if (m.is_accepting(cur.state)) return Outcome::Yes;
            if (step == inst.steps) return Outcome::No;
            successors(cur, next);
            if (next.empty()) return Outcome::No;
            cur = next.front();
        }
    }

    std::unordered_set<std::string> seen;
    std::deque<std::pair<TmConfig, long long>> queue;
    queue.emplace_back(start, 0);
    seen.insert(start.key());
    std::vector<TmConfig> next;
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (!budget.charge()) return Outcome::BudgetExceeded;
        if (m.is_accepting(cur.state)) return Outcome::Yes;
        if (depth == inst.steps) continue;
        successors(cur, next);
        for (auto& nc : next)
            if (seen.insert(nc.key()).second) queue.emplace_back(std::move(nc), depth + 1);
    }
    return Outcome::No;
}

// --- multi-head automata ------------------------------------------------------

namespace {

struct MfaConfig {
    int state;
    std::vector<int> heads;

    std::string key() const {
        std::string k = std::to_string(state);
        for (int h : heads) k += "," + std::to_string(h);
        return k;
    }
};

}  // namespace

Outcome run_mfa(const MultiHeadAutomaton& a, Budget& budget) {
    a.validate();
    std::string tape = "<" + a.input + ">";
    MfaConfig start{a.initial, std::vector<int>(a.heads, 1)};

    std::map<std::pair<int, std::string>, std::vector<const MultiHeadAutomaton::Transition*>>
        delta;
    for (const auto& tr : a.transitions) delta[{tr.state, tr.observed}].push_back(&tr);

    auto observe = [&](const MfaConfig& c) {
        std::string obs(static_cast<std::size_t>(a.heads), ' ');
        for (int i = 0; i < a.heads; ++i) obs[i] = tape[c.heads[i]];
        return obs;
    };
    auto successors = [&](const MfaConfig& c, std::vector<MfaConfig>& out) {
        out.clear();
        auto it = delta.find({c.state, observe(c)});
        if (it == delta.end()) return;
        for (const auto* tr : it->second) {
            MfaConfig next = c;
            next.state = tr->next;
            bool ok = true;
            for (int i = 0; i < a.heads; ++i) {
                if (tr->moves[i] == Move::Left) --next.heads[i];
                else if (tr->moves[i] == Move::Right) ++next.heads[i];
                if (next.heads[i] < 0 || next.heads[i] >= static_cast<int>(tape.size())) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(std::move(next));
        }
    };

    if (a.deterministic) {
        std::unordered_set<std::string> seen;
        MfaConfig cur = start;
        std::vector<MfaConfig> next;
        long long steps = 0;
        while (true) {
            if (!budget.charge()) return Outcome::BudgetExceeded;
            if (a.is_accepting(cur.state)) return Outcome::Yes;
            if (!seen.insert(cur.key()).second) return Outcome::No;  // configuration repeat
            successors(cur, next);
            if (next.empty()) return Outcome::No;
            ++steps;
            if (a.dag && steps > a.state_count)
                throw std::logic_error("mfa: dag run exceeded |Q| transitions");
            cur = next.front();
        }
    }

    std::unordered_set<std::string> seen;
    std::deque<std::pair<MfaConfig, long long>> queue;
    queue.emplace_back(start, 0);
    seen.insert(start.key());
    std::vector<MfaConfig> next;
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (!budget.charge()) return Outcome::BudgetExceeded;
        if (a.is_accepting(cur.state)) return Outcome::Yes;
        if (a.dag && depth > a.state_count)
            throw std::logic_error("mfa: dag run exceeded |Q| transitions");
        successors(cur, next);
        for (auto& nc : next)
            if (seen.insert(nc.key()).second) queue.emplace_back(std::move(nc), depth + 1);
    }
    return Outcome::No;
}

// --- cellular automata ---------------------------------------------------------

namespace {

struct CaTables {
    std::map<std::tuple<int, int, int>, std::vector<int>> interior;
    std::map<std::pair<int, int>, std::vector<int>> left, right;
    std::map<int, std::vector<int>> single;

    explicit CaTables(const CellularAutomaton& ca) {
        for (const auto& r : ca.interior) interior[{r.left, r.own, r.right}].push_back(r.next);
        for (const auto& r : ca.left) left[{r.a, r.b}].push_back(r.next);
        for (const auto& r : ca.right) right[{r.a, r.b}].push_back(r.next);
        for (const auto& r : ca.single) single[r.own].push_back(r.next);
    }

    // Options for cell i of config; empty = stuck.
    const std::vector<int>* options(const std::vector<int>& config, int i) const {
        static const std::vector<int> none;
        int k = static_cast<int>(config.size());
        if (k == 1) {
            auto it = single.find(config[0]);
            return it == single.end() ? &none : &it->second;
        }
        if (i == 0) {
            auto it = left.find({config[0], config[1]});
            return it == left.end() ? &none : &it->second;
        }
        if (i == k - 1) {
            auto it = right.find({config[k - 2], config[k - 1]});
            return it == right.end() ? &none : &it->second;
        }
        auto it = interior.find({config[i - 1], config[i], config[i + 1]});
        return it == interior.end() ? &none : &it->second;
    }
};

std::string config_key(const std::vector<int>& config) {
    std::string k;
    for (int q : config) {
        k += std::to_string(q);
        k += ',';
    }
    return k;
}

bool any_accepting(const CellularAutomaton& ca, const std::vector<int>& config) {
    for (int q : config)
        if (ca.is_accepting(q)) return true;
    return false;
}

// All global successors of a configuration (product of per-cell options).
// Returns false when some cell is stuck.
bool global_successors(const CaTables& tables, const std::vector<int>& config,
                       std::vector<std::vector<int>>& out) {
    out.clear();
    int k = static_cast<int>(config.size());
    std::vector<const std::vector<int>*> opts(k);
    for (int i = 0; i < k; ++i) {
        opts[i] = tables.options(config, i);
        if (opts[i]->empty()) return false;
    }
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        std::vector<int> next(k);
        for (int i = 0; i < k; ++i) next[i] = (*opts[i])[idx[i]];
        out.push_back(std::move(next));
        int i = 0;
        while (i < k && ++idx[i] == opts[i]->size()) idx[i++] = 0;
        if (i == k) return true;
    }
}

}  // namespace

Outcome run_ca(const CellularInstance& inst, RunMode mode, Budget& budget) {
    inst.validate();
    const CellularAutomaton& ca = inst.automaton;
    if (mode == RunMode::Det && !ca.deterministic)
        throw PreconditionError("run_ca det mode needs a deterministic automaton");
    CaTables tables(ca);

    if (mode == RunMode::Det) {
        std::vector<int> cur = inst.initial;
        std::unordered_set<std::string> seen;
        long long steps = 0;
        while (true) {
            if (!budget.charge()) return Outcome::BudgetExceeded;
            if (any_accepting(ca, cur)) return Outcome::Yes;
            if (!seen.insert(config_key(cur)).second) return Outcome::No;
            std::vector<int> next(cur.size());
            bool stuck = false;
            for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
                const auto* opts = tables.options(cur, i);
                if (opts->empty()) { stuck = true; break; }
                next[i] = opts->front();
            }
            if (stuck) return Outcome::No;
            ++steps;
            if (ca.dag && steps > ca.state_count)
                throw std::logic_error("ca: dag run exceeded |Q| global steps");
            cur = std::move(next);
        }
    }

    std::unordered_set<std::string> seen;
    std::deque<std::pair<std::vector<int>, long long>> queue;
    queue.emplace_back(inst.initial, 0);
    seen.insert(config_key(inst.initial));
    std::vector<std::vector<int>> next;
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (!budget.charge()) return Outcome::BudgetExceeded;
        if (any_accepting(ca, cur)) return Outcome::Yes;
        if (ca.dag && depth >= ca.state_count) continue;
        if (!global_successors(tables, cur, next)) continue;
        for (auto& nc : next) {
            if (!budget.charge()) return Outcome::BudgetExceeded;
            if (seen.insert(config_key(nc)).second) queue.emplace_back(std::move(nc), depth + 1);
        }
    }
    return Outcome::No;
}

Outcome run_ca_bounded(const CellularInstance& inst, RunMode mode, long long max_steps,
                       Budget& budget) {
    inst.validate();
    const CellularAutomaton& ca = inst.automaton;
    if (mode == RunMode::Det && !ca.deterministic)
        throw PreconditionError("run_ca_bounded det mode needs a deterministic automaton");
    CaTables tables(ca);

    if (mode == RunMode::Det) {
        std::vector<int> cur = inst.initial;
        std::unordered_set<std::string> seen;
        for (long long step = 0;; ++step) {
            if (!budget.charge()) return Outcome::BudgetExceeded;
            if (any_accepting(ca, cur)) return Outcome::Yes;
            if (step == max_steps) return Outcome::No;
            if (!seen.insert(config_key(cur)).second) return Outcome::No;
            std::vector<int> next(cur.size());
            bool stuck = false;
            for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
                const auto* opts = tables.options(cur, i);
                if (opts->empty()) { stuck = true; break; }
                next[i] = opts->front();
            }
            if (stuck) return Outcome::No;
            cur = std::move(next);
        }
    }

    std::unordered_set<std::string> seen;
    std::deque<std::pair<std::vector<int>, long long>> queue;
    queue.emplace_back(inst.initial, 0);
    seen.insert(config_key(inst.initial));
    std::vector<std::vector<int>> next;
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (!budget.charge()) return Outcome::BudgetExceeded;
        if (any_accepting(ca, cur)) return Outcome::Yes;
        if (depth >= max_steps) continue;
        if (!global_successors(tables, cur, next)) continue;
        for (auto& nc : next) {
            if (!budget.charge()) return Outcome::BudgetExceeded;
            if (seen.insert(config_key(nc)).second) queue.emplace_back(std::move(nc), depth + 1);
        }
    }
    return Outcome::No;
}

Outcome run_tm2_bounded(const TwoTapeTM& m, long long t, int s, Budget& budget) {
    m.validate();
    if (s < 1) throw PreconditionError("run_tm2_bounded: s < 1");
    const int n = std::max<int>(1, static_cast<int>(m.input.size()));
    auto input_symbol = [&](int p) {
        if (m.input.empty() || p > static_cast<int>(m.input.size())) return 0;
        return static_cast<int>(m.input_alphabet.find(m.input[p - 1]));
    };

    struct Config {
        int state, input_pos, work_pos;
        std::string tape;
        std::string key() const {
            return std::to_string(state) + ":" + std::to_string(input_pos) + ":" +
                   std::to_string(work_pos) + ":" + tape;
        }
    };
    std::map<std::tuple<int, int, int>, std::vector<const TwoTapeTM::Transition*>> delta;
    for (const auto& tr : m.transitions)
        delta[{tr.state, tr.input_read, tr.work_read}].push_back(&tr);

    auto is_accepting = [&](int q) {
        return std::find(m.accepting.begin(), m.accepting.end(), q) != m.accepting.end();
    };
    Config start{m.initial, 1, 0, std::string(static_cast<std::size_t>(s), '\0')};
    std::unordered_set<std::string> seen{start.key()};
    std::deque<std::pair<Config, long long>> queue;
    queue.emplace_back(start, 0);
    std::vector<Config> next;
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (!budget.charge()) return Outcome::BudgetExceeded;
        if (is_accepting(cur.state)) return Outcome::Yes;
        if (depth == t) continue;
        next.clear();
        auto it = delta.find({cur.state, input_symbol(cur.input_pos), cur.tape[cur.work_pos]});
        if (it != delta.end()) {
            for (const auto* tr : it->second) {
                Config nc = cur;
                nc.state = tr->next;
                nc.tape[cur.work_pos] = static_cast<char>(tr->work_write);
                if (tr->input_move == Move::Left) nc.input_pos = std::max(1, nc.input_pos - 1);
                else if (tr->input_move == Move::Right) nc.input_pos = std::min(n, nc.input_pos + 1);
                if (tr->work_move == Move::Left) --nc.work_pos;
                else if (tr->work_move == Move::Right) ++nc.work_pos;
                if (nc.work_pos < 0 || nc.work_pos >= s) continue;  // boundary violation
                next.push_back(std::move(nc));
            }
        }
        for (auto& nc : next)
            if (seen.insert(nc.key()).second) queue.emplace_back(std::move(nc), depth + 1);
    }
    return Outcome::No;
}

Outcome run_seqca(const SequentialCellularInstance& inst, RunMode mode, Budget& budget) {
    inst.validate();
    const CellularAutomaton& ca = inst.automaton;
    if (mode == RunMode::Det && !ca.deterministic)
        throw PreconditionError("run_seqca det mode needs a deterministic automaton");
    CaTables tables(ca);
    int k = inst.cells();
    long long minor_limit = ca.dag ? static_cast<long long>(k) * ca.state_count : -1;

    // search state: configuration plus the index of the next cell to fire
    auto key = [&](const std::vector<int>& c, int cell) {
        return config_key(c) + "@" + std::to_string(cell);
    };

    if (mode == RunMode::Det) {
        std::vector<int> cur = inst.initial;
        int cell = 0;
        std::unordered_set<std::string> seen;
        long long minors = 0;
        while (true) {
            if (!budget.charge()) return Outcome::BudgetExceeded;
            if (any_accepting(ca, cur)) return Outcome::Yes;
            if (!seen.insert(key(cur, cell)).second) return Outcome::No;
            const auto* opts = tables.options(cur, cell);
            if (opts->empty()) return Outcome::No;
            cur[cell] = opts->front();
            cell = (cell + 1) % k;
            ++minors;
            if (minor_limit >= 0 && minors > minor_limit)
                throw std::logic_error("seqca: dag run exceeded k*|Q| minor steps");
        }
    }

    std::unordered_set<std::string> seen;
    std::deque<std::tuple<std::vector<int>, int, long long>> queue;
    queue.emplace_back(inst.initial, 0, 0);
    seen.insert(key(inst.initial, 0));
    while (!queue.empty()) {
        auto [cur, cell, minors] = queue.front();
        queue.pop_front();
        if (!budget.charge()) return Outcome::BudgetExceeded;
        if (any_accepting(ca, cur)) return Outcome::Yes;
        if (minor_limit >= 0 && minors >= minor_limit) continue;
        const auto* opts = tables.options(cur, cell);
        for (int q : *opts) {
            std::vector<int> next = cur;
            next[cell] = q;
            if (seen.insert(key(next, (cell + 1) % k)).second)
                queue.emplace_back(std::move(next), (cell + 1) % k, minors + 1);
        }
    }
    return Outcome::No;
}

// --- threshold pebble games -----------------------------------------------------

namespace {

std::vector<char> to_mask(int n, const std::vector<int>& vs) {
    std::vector<char> m(n, 0);
    for (int v : vs) m[v] = 1;
    return m;
}

std::string mask_key(const std::vector<char>& m) { return std::string(m.begin(), m.end()); }

// Vertices pebbleable after X.
std::vector<int> pebbleable(const ThresholdPebbleGame& game, const std::vector<char>& x) {
    std::vector<int> out;
    int n = game.graph.n();
    for (int v = 0; v < n; ++v) {
        int count = 0;
        for (int p = 0; p < n; ++p)
            if (x[p] && game.graph.has_edge(p, v)) ++count;
        if (count >= game.thresholds[v]) out.push_back(v);
    }
    return out;
}

}  // namespace

Outcome run_tpg(const ThresholdPebbleGame& game, TpgMode mode, Budget& budget) {
    game.validate();
    int n = game.graph.n();
    std::vector<char> start = to_mask(n, game.start);
    std::vector<char> target = to_mask(n, game.target);

    if (mode == TpgMode::Max) {
        std::vector<char> cur = start;
        std::unordered_set<std::string> seen;
        while (true) {
            if (!budget.charge()) return Outcome::BudgetExceeded;
            if (cur == target) return Outcome::Yes;
            if (!seen.insert(mask_key(cur)).second) return Outcome::No;
            cur = to_mask(n, pebbleable(game, cur));
        }
    }

    // a target larger than the cap is unreachable after the first step, so
    // the search simply never finds it
    std::unordered_set<std::string> seen;
    std::deque<std::vector<char>> queue{start};
    seen.insert(mask_key(start));
    bool blown = false;
    while (!queue.empty()) {
        std::vector<char> cur = queue.front();
        queue.pop_front();
        if (!budget.charge()) return Outcome::BudgetExceeded;
        if (cur == target) return Outcome::Yes;
        std::vector<int> can = pebbleable(game, cur);
        int cap = game.cap > 0 ? std::min<int>(game.cap, static_cast<int>(can.size()))
                               : static_cast<int>(can.size());
        std::vector<int> chosen;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (blown) return;
            if (!budget.charge()) { blown = true; return; }
            std::vector<char> y(n, 0);
            for (int v : chosen) y[v] = 1;
            if (seen.insert(mask_key(y)).second) queue.push_back(y);
            if (static_cast<int>(chosen.size()) == cap) return;
            for (std::size_t j = i; j < can.size(); ++j) {
                chosen.push_back(can[j]);
                self(self, j + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
        if (blown) return Outcome::BudgetExceeded;
    }
    return Outcome::No;
}

// --- longest common subsequence ---------------------------------------------------

Outcome lcs_decide(const LcsInstance& inst, Budget& budget) {
    inst.validate();
    if (inst.l == 0) return Outcome::Yes;
    if (inst.strings.empty()) return Outcome::Yes;  // vacuous
    int k = static_cast<int>(inst.strings.size());
    int nsyms = static_cast<int>(inst.alphabet.size());

    std::vector<std::vector<std::vector<int>>> occ(
        k, std::vector<std::vector<int>>(nsyms));
    for (int i = 0; i < k; ++i)
        for (std::size_t p = 0; p < inst.strings[i].size(); ++p)
            occ[i][inst.strings[i][p]].push_back(static_cast<int>(p));

    std::vector<int> common;
    for (int sym = 0; sym < nsyms; ++sym) {
        bool all = true;
        for (int i = 0; i < k; ++i)
            if (occ[i][sym].empty()) { all = false; break; }
        if (all) common.push_back(sym);
    }

    const long long cap = inst.l;
    std::unordered_map<std::string, long long> memo;
    bool blown = false;

    auto key = [](const std::vector<int>& pos) {
        std::string s;
        for (int p : pos) {
            s += std::to_string(p);
            s += ',';
        }
        return s;
    };

    // longest common subsequence length starting at `pos`, capped at l
    auto best = [&](auto&& self, const std::vector<int>& pos) -> long long {
        if (blown) return 0;
        std::string kk = key(pos);
        auto it = memo.find(kk);
        if (it != memo.end()) return it->second;
        if (!budget.charge()) { blown = true; return 0; }
        long long res = 0;
        std::vector<int> next(k);
        for (int sym : common) {
            bool ok = true;
            for (int i = 0; i < k; ++i) {
                const auto& list = occ[i][sym];
                auto at = std::lower_bound(list.begin(), list.end(), pos[i]);
                if (at == list.end()) { ok = false; break; }
                next[i] = *at + 1;
            }
            if (!ok) continue;
            long long v = 1 + self(self, next);
            if (v > res) res = v;
            if (res >= cap) { res = cap; break; }
        }
        memo[kk] = res;
        return res;
    };

    std::vector<int> startpos(k, 0);
    long long got = best(best, startpos);
    if (blown) return Outcome::BudgetExceeded;
    return outcome_of(got >= inst.l);
}

bool lcs_injective_decide(const LcsInstance& inst) {
    inst.validate();
    if (!inst.injective())
        throw PreconditionError("lcs_injective_decide: input is not a p-sequence instance");
    if (inst.l == 0) return true;
    if (inst.strings.empty()) return true;
    int k = static_cast<int>(inst.strings.size());
    int nsyms = static_cast<int>(inst.alphabet.size());

    std::vector<std::vector<int>> pos(k, std::vector<int>(nsyms, -1));
    for (int i = 0; i < k; ++i)
        for (std::size_t p = 0; p < inst.strings[i].size(); ++p)
            pos[i][inst.strings[i][p]] = static_cast<int>(p);

    std::vector<int> common;
    for (int sym = 0; sym < nsyms; ++sym) {
        bool all = true;
        for (int i = 0; i < k; ++i)
            if (pos[i][sym] < 0) { all = false; break; }
        if (all) common.push_back(sym);
    }

    // a can precede b iff a appears before b in all strings
    auto before = [&](int a, int b) {
        for (int i = 0; i < k; ++i)
            if (pos[i][a] >= pos[i][b]) return false;
        return true;
    };

    std::sort(common.begin(), common.end(),
              [&](int a, int b) { return pos[0][a] < pos[0][b]; });
    std::vector<long long> len(common.size(), 1);
    long long bestlen = common.empty() ? 0 : 1;
    for (std::size_t j = 0; j < common.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i)
            if (before(common[i], common[j])) len[j] = std::max(len[j], len[i] + 1);
        bestlen = std::max(bestlen, len[j]);
    }
    return bestlen >= inst.l;
}

// --- generators ----------------------------------------------------------------

std::set<int> generator_closure(const std::vector<std::vector<int>>& table,
                                const std::vector<int>& generators) {
    std::set<int> closure(generators.begin(), generators.end());
    std::deque<int> work(closure.begin(), closure.end());
    while (!work.empty()) {
        int a = work.front();
        work.pop_front();
        std::vector<int> snapshot(closure.begin(), closure.end());
        for (int b : snapshot) {
            for (int c : {table[a][b], table[b][a]}) {
                if (closure.insert(c).second) work.push_back(c);
            }
        }
    }
    return closure;
}

Outcome agen_decide(const GeneratorInstance& inst, Budget& budget) {
    inst.validate();
    int n = static_cast<int>(inst.candidates.size());
    if (inst.k > n) return Outcome::No;
    if (inst.k == 0) {
        if (!budget.charge()) return Outcome::BudgetExceeded;
        return outcome_of(generator_closure(inst.table, {}).count(inst.target) > 0);
    }
    std::vector<int> comb(inst.k);
    for (int i = 0; i < inst.k; ++i) comb[i] = i;
    while (true) {
        if (!budget.charge()) return Outcome::BudgetExceeded;
        std::vector<int> gens;
        for (int i : comb) gens.push_back(inst.candidates[i]);
        if (generator_closure(inst.table, gens).count(inst.target) > 0) return Outcome::Yes;
        int i = inst.k - 1;
        while (i >= 0 && comb[i] == n - inst.k + i) --i;
        if (i < 0) return Outcome::No;
        ++comb[i];
        for (int j = i + 1; j < inst.k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

// --- replacement systems ----------------------------------------------------------

namespace {

// Redexes of `word`, in (position, rule index) order.
void collect_redexes(const ReplacementSystem& rs, const std::vector<int>& word,
                     std::vector<std::pair<std::size_t, std::size_t>>& out) {
    out.clear();
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        for (std::size_t r = 0; r < rs.rules.size(); ++r) {
            const auto& lhs = rs.rules[r].first;
            if (pos + lhs.size() > word.size()) continue;
            if (std::equal(lhs.begin(), lhs.end(), word.begin() + pos))
                out.emplace_back(pos, r);
        }
    }
}

std::vector<int> apply_rule(const ReplacementSystem& rs, const std::vector<int>& word,
                            std::size_t pos, std::size_t rule) {
    const auto& [lhs, rhs] = rs.rules[rule];
    std::vector<int> next;
    next.reserve(word.size() - lhs.size() + rhs.size());
    next.insert(next.end(), word.begin(), word.begin() + pos);
    next.insert(next.end(), rhs.begin(), rhs.end());
    next.insert(next.end(), word.begin() + pos + lhs.size(), word.end());
    return next;
}

}  // namespace

std::vector<int> rs_normalize(const ReplacementSystem& rs, std::vector<int> word,
                              long long step_budget) {
    return rs_normalize_with_order(rs, std::move(word), step_budget,
                                   [](std::size_t) { return std::size_t{0}; });
}

std::vector<int> rs_normalize_with_order(const ReplacementSystem& rs, std::vector<int> word,
                                         long long step_budget,
                                         const std::function<std::size_t(std::size_t)>& pick) {
    rs.validate();
    std::vector<std::pair<std::size_t, std::size_t>> redexes;
    for (long long step = 0;; ++step) {
        collect_redexes(rs, word, redexes);
        if (redexes.empty()) return word;
        if (step >= step_budget)
            throw NonterminationSuspected("rs_normalize: step budget exhausted");
        auto [pos, rule] = redexes[pick(redexes.size()) % redexes.size()];
        word = apply_rule(rs, word, pos, rule);
    }
}

}  // namespace parared
