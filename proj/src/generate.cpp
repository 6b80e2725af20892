#include "parared/generate.hpp"

#include <algorithm>
#include <set>

namespace parared {

Graph gen_graph(Rng& rng, int n, bool directed, int edge_percent, bool with_st, bool dag) {
    Graph g(n, directed);
    for (int a = 0; a < n; ++a)
        for (int b = directed ? 0 : a; b < n; ++b) {
            if (dag && a >= b) continue;
            if (!directed && a == b) continue;
            if (rng.chance(edge_percent)) g.add_edge(a, b);
        }
    if (with_st && n > 0) {
        g.s = rng.below(n);
        g.t = rng.below(n);
    }
    return g;
}

Graph gen_layered_graph(Rng& rng, int layers, int width, int edge_percent) {
    if (layers < 2) layers = 2;
    // single vertex on the first and last layers
    std::vector<int> layer_of;
    layer_of.push_back(0);
    for (int i = 1; i + 1 < layers; ++i) {
        int size = rng.range(1, width);
        for (int j = 0; j < size; ++j) layer_of.push_back(i);
    }
    layer_of.push_back(layers - 1);
    int n = static_cast<int>(layer_of.size());
    Graph g(n, true);
    g.layers = layer_of;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (layer_of[b] == layer_of[a] + 1 && rng.chance(edge_percent)) g.add_edge(a, b);
    g.s = 0;
    g.t = n - 1;
    return g;
}

BooleanFormula gen_formula(Rng& rng, int vars, int nodes) {
    auto rec = [&](auto&& self, int budget) -> BooleanFormula {
        if (budget <= 1) {
            int pick = rng.below(vars + 1);
            if (pick == vars) return BooleanFormula::constant(rng.below(2) == 1);
            return BooleanFormula::var(pick);
        }
        switch (rng.below(4)) {
            case 0: return BooleanFormula::band(self(self, budget / 2), self(self, budget / 2));
            case 1: return BooleanFormula::bor(self(self, budget / 2), self(self, budget / 2));
            case 2: return BooleanFormula::implies(self(self, budget / 2), self(self, budget / 2));
            default: return BooleanFormula::negate(self(self, budget - 1));
        }
    };
    BooleanFormula f = rec(rec, nodes);
    // pad the variable count so every index < vars is legal
    return BooleanFormula::parse_prefix(f.to_prefix(), vars);
}

SingleTapeTM gen_tm(Rng& rng, int states, int symbols, bool deterministic) {
    SingleTapeTM m;
    m.state_count = states;
    m.alphabet = std::string("_abcdefgh").substr(0, symbols);
    m.deterministic = deterministic;
    m.initial = 0;
    m.accepting = {states - 1};
    std::set<std::pair<int, int>> used;
    int want = rng.range(states, 2 * states + 2);
    for (int i = 0; i < want; ++i) {
        int q = rng.below(states);
        int a = rng.below(symbols);
        if (deterministic && !used.insert({q, a}).second) continue;
        Move mv = static_cast<Move>(rng.below(3));
        m.transitions.push_back({q, a, rng.below(states), rng.below(symbols), mv});
    }
    m.validate();
    return m;
}

BoundedTMInstance gen_bounded_tm(Rng& rng, int states, int symbols, bool deterministic,
                                 long long t, int s) {
    BoundedTMInstance b;
    b.machine = gen_tm(rng, states, symbols, deterministic);
    b.steps = t;
    b.cells = s;
    b.validate();
    return b;
}

TwoTapeTM gen_tm2(Rng& rng, int states, int symbols, bool deterministic, int input_len) {
    TwoTapeTM m;
    m.state_count = states;
    m.input_alphabet = "_xy";
    m.work_alphabet = std::string("_abc").substr(0, std::max(2, symbols));
    m.deterministic = deterministic;
    m.initial = 0;
    m.accepting = {states - 1};
    for (int i = 0; i < input_len; ++i)
        m.input += m.input_alphabet[1 + rng.below(2)];
    int wsyms = static_cast<int>(m.work_alphabet.size());
    std::set<std::tuple<int, int, int>> used;
    int want = rng.range(2 * states, 4 * states);
    for (int i = 0; i < want; ++i) {
        int q = rng.below(states);
        int a = rng.below(3);
        int w = rng.below(wsyms);
        if (deterministic && !used.insert({q, a, w}).second) continue;
        m.transitions.push_back({q, a, w, rng.below(states), rng.below(wsyms),
                                 static_cast<Move>(rng.below(3)), static_cast<Move>(rng.below(3))});
    }
    m.validate();
    return m;
}

MultiHeadAutomaton gen_mfa(Rng& rng, int states, int heads, int input_len,
                           bool deterministic, bool dag) {
    MultiHeadAutomaton a;
    a.state_count = states;
    a.heads = heads;
    a.initial = 1;
    a.accepting = {states};
    a.deterministic = deterministic;
    a.dag = dag;
    std::string sigma = "xy";
    for (int i = 0; i < input_len; ++i) a.input += sigma[rng.below(2)];
    std::string observable = sigma + "<>";
    std::set<std::pair<int, std::string>> used;
    int want = rng.range(2 * states, 4 * states + 2);
    for (int i = 0; i < want; ++i) {
        int q = dag ? rng.range(1, std::max(1, states - 1)) : rng.range(1, states);
        std::string obs;
        for (int h = 0; h < heads; ++h)
            obs += observable[rng.below(static_cast<int>(observable.size()))];
        if (deterministic && !used.insert({q, obs}).second) continue;
        int next = dag ? rng.range(q + 1, states) : rng.range(1, states);
        std::vector<Move> moves;
        for (int h = 0; h < heads; ++h) moves.push_back(static_cast<Move>(rng.below(3)));
        a.transitions.push_back({q, obs, next, moves});
    }
    a.validate();
    return a;
}

CellularAutomaton gen_ca_automaton(Rng& rng, int states, bool deterministic, bool dag,
                                   int rule_percent) {
    CellularAutomaton ca;
    ca.state_count = states;
    ca.deterministic = deterministic;
    ca.dag = dag;
    ca.accepting = {states - 1};
    auto next_of = [&](int m) -> int {
        if (!dag) return rng.below(states);
        if (m + 1 >= states) return -1;  // nothing above: the cell stalls here
        return rng.range(m + 1, states - 1);
    };
    for (int l = 0; l < states; ++l)
        for (int o = 0; o < states; ++o)
            for (int r = 0; r < states; ++r) {
                if (!rng.chance(rule_percent)) continue;
                int branches = deterministic ? 1 : rng.range(1, 2);
                std::set<int> picked;
                for (int b = 0; b < branches; ++b) {
                    int n = next_of(std::max({l, o, r}));
                    if (n >= 0 && picked.insert(n).second) ca.interior.push_back({l, o, r, n});
                }
            }
    for (int a = 0; a < states; ++a)
        for (int b = 0; b < states; ++b) {
            if (rng.chance(rule_percent)) {
                int branches = deterministic ? 1 : rng.range(1, 2);
                std::set<int> picked;
                for (int i = 0; i < branches; ++i) {
                    int n = next_of(std::max(a, b));
                    if (n >= 0 && picked.insert(n).second) ca.left.push_back({a, b, n});
                }
            }
            if (rng.chance(rule_percent)) {
                int branches = deterministic ? 1 : rng.range(1, 2);
                std::set<int> picked;
                for (int i = 0; i < branches; ++i) {
                    int n = next_of(std::max(a, b));
                    if (n >= 0 && picked.insert(n).second) ca.right.push_back({a, b, n});
                }
            }
        }
    for (int o = 0; o < states; ++o) {
        if (!rng.chance(rule_percent)) continue;
        int branches = deterministic ? 1 : rng.range(1, 2);
        std::set<int> picked;
        for (int i = 0; i < branches; ++i) {
            int n = next_of(o);
            if (n >= 0 && picked.insert(n).second) ca.single.push_back({o, n});
        }
    }
    ca.validate();
    return ca;
}

CellularInstance gen_ca(Rng& rng, int states, int cells, bool deterministic, bool dag,
                        int rule_percent) {
    CellularInstance inst;
    inst.automaton = gen_ca_automaton(rng, states, deterministic, dag, rule_percent);
    for (int i = 0; i < cells; ++i)
        inst.initial.push_back(dag ? rng.below(std::max(1, (states + 1) / 2))
                                   : rng.below(states));
    inst.validate();
    return inst;
}

ThresholdPebbleGame gen_tpg(Rng& rng, int n, int edge_percent, bool dag, int cap) {
    ThresholdPebbleGame g;
    g.graph = gen_graph(rng, n, true, edge_percent, false, dag);
    g.dag = dag;
    g.cap = cap;
    for (int v = 0; v < n; ++v) {
        int preds = 0;
        for (int u = 0; u < n; ++u)
            if (g.graph.has_edge(u, v)) ++preds;
        g.thresholds.push_back(preds == 0 ? 1 : rng.range(1, preds));
    }
    for (int v = 0; v < n; ++v)
        if (rng.chance(40)) g.start.push_back(v);
    for (int v = 0; v < n; ++v)
        if (rng.chance(30)) g.target.push_back(v);
    g.validate();
    return g;
}

LcsInstance gen_lcs(Rng& rng, int strings, int alphabet, int length, bool injective) {
    LcsInstance inst;
    for (int i = 0; i < alphabet; ++i)
        inst.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < strings; ++i) {
        std::vector<int> w;
        if (injective) {
            std::vector<int> syms(alphabet);
            for (int j = 0; j < alphabet; ++j) syms[j] = j;
            for (int j = alphabet - 1; j > 0; --j)
                std::swap(syms[j], syms[rng.below(j + 1)]);
            int len = rng.range(1, std::min(length, alphabet));
            w.assign(syms.begin(), syms.begin() + len);
        } else {
            int len = rng.range(1, length);
            for (int j = 0; j < len; ++j) w.push_back(rng.below(alphabet));
        }
        inst.strings.push_back(std::move(w));
    }
    inst.l = rng.range(0, std::max(1, length / 2));
    inst.validate();
    return inst;
}

GeneratorInstance gen_generator(Rng& rng, int universe, int candidates, int k,
                                bool associative) {
    GeneratorInstance gi;
    gi.names.resize(universe);
    for (int i = 0; i < universe; ++i) gi.names[i] = "u" + std::to_string(i);
    gi.table.assign(universe, std::vector<int>(universe, 0));
    if (associative) {
        // known associative tables, relabelled by a random permutation
        std::vector<int> perm(universe);
        for (int i = 0; i < universe; ++i) perm[i] = i;
        for (int i = universe - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<int> inv(universe);
        for (int i = 0; i < universe; ++i) inv[perm[i]] = i;
        int family = rng.below(5);
        auto raw = [&](int a, int b) {
            switch (family) {
                case 0: return (a + b) % universe;  // cyclic group
                case 1: return (a * b) % universe;  // multiplicative monoid
                case 2: return std::max(a, b);      // join semilattice
                case 3: return a;                   // left projection
                default: return b;                  // right projection
            }
        };
        for (int a = 0; a < universe; ++a)
            for (int b = 0; b < universe; ++b)
                gi.table[a][b] = perm[raw(inv[a], inv[b])];
        gi.associative = true;
    } else {
        for (int a = 0; a < universe; ++a)
            for (int b = 0; b < universe; ++b) gi.table[a][b] = rng.below(universe);
        gi.associative = false;
    }
    gi.target = rng.below(universe);
    for (int c = 0; c < universe; ++c)
        if (rng.chance(60) && static_cast<int>(gi.candidates.size()) < candidates)
            gi.candidates.push_back(c);
    if (gi.candidates.empty()) gi.candidates.push_back(rng.below(universe));
    gi.k = k;
    gi.validate();
    return gi;
}

ReplacementSystem gen_rs(Rng& rng, int alphabet, int rules) {
    ReplacementSystem rs;
    for (int i = 0; i < alphabet; ++i)
        rs.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < rules; ++i) {
        std::vector<int> lhs, rhs;
        int ll = rng.range(1, 3);
        int rl = rng.range(0, 2);
        for (int j = 0; j < ll; ++j) lhs.push_back(rng.below(alphabet));
        for (int j = 0; j < rl; ++j) rhs.push_back(rng.below(alphabet));
        rs.rules.emplace_back(std::move(lhs), std::move(rhs));
    }
    rs.validate();
    return rs;
}

CompatibleProjection gen_projection(Rng& rng, int input_len, int blocks, int outputs) {
    CompatibleProjection p;
    p.alphabet = "abg";
    p.kappa = blocks;
    p.blocks = blocks;
    p.block_width = 2;
    for (int i = 0; i < input_len; ++i) p.input += p.alphabet[rng.below(3)];
    int advice_len = rng.below(3);
    for (int i = 0; i < advice_len; ++i) p.advice += p.alphabet[rng.below(3)];
    int bits = blocks * p.block_width;
    int fixed = input_len + advice_len;
    for (int i = 0; i < outputs; ++i) {
        CompatibleProjection::Position pos;
        switch (rng.below(3)) {
            case 0:
                pos.kind = CompatibleProjection::Position::Const;
                pos.constant = p.alphabet[rng.below(3)];
                break;
            case 1:
                pos.kind = CompatibleProjection::Position::FromInput;
                pos.index = rng.below(std::max(1, fixed));
                break;
            default:
                pos.kind = CompatibleProjection::Position::FromBit;
                pos.index = rng.below(bits);
                pos.when0 = rng.chance(50) ? '0' : '1';
                pos.when1 = rng.chance(50) ? '0' : '1';
                break;
        }
        p.positions.push_back(pos);
    }
    p.validate();
    return p;
}

// --- union instance generators -------------------------------------------------

FamilyUnionInstance gen_family_union_bf(Rng& rng, int vars, int k, int per_family) {
    BooleanFormula phi = gen_formula(rng, vars, rng.range(2, 8));
    FamilyUnionInstance inst;
    inst.base = BaseKind::Bf;
    inst.tmpl = bf_template(phi);
    for (int i = 0; i < k; ++i) {
        std::vector<InstantiationWord> fam;
        int members = rng.range(1, per_family);
        std::set<std::string> seen;
        for (int j = 0; j < members; ++j) {
            std::string a;
            for (int v = 0; v < vars; ++v) a += rng.chance(50) ? '1' : '0';
            if (!seen.insert(a).second) continue;
            fam.emplace_back(inst.tmpl, encode_bf_word(phi, a));
        }
        inst.families.push_back(std::move(fam));
    }
    inst.validate();
    return inst;
}

SubsetUnionInstance gen_subset_union_bf(Rng& rng, int vars, int set_size, int k) {
    BooleanFormula phi = gen_formula(rng, vars, rng.range(2, 8));
    SubsetUnionInstance inst;
    inst.base = BaseKind::Bf;
    inst.tmpl = bf_template(phi);
    inst.k = k;
    std::set<std::string> seen;
    for (int j = 0; j < set_size; ++j) {
        std::string a;
        for (int v = 0; v < vars; ++v) a += rng.chance(50) ? '1' : '0';
        if (!seen.insert(a).second) continue;
        inst.elements.emplace_back(inst.tmpl, encode_bf_word(phi, a));
    }
    inst.validate();
    return inst;
}

FamilyUnionInstance gen_family_union_graph(Rng& rng, BaseKind base, int n, int k,
                                           int per_family) {
    bool directed =
        base == BaseKind::Reach || base == BaseKind::DagReach || base == BaseKind::Cycle;
    bool with_st = base == BaseKind::Reach || base == BaseKind::DagReach ||
                   base == BaseKind::UndirectedReach;
    bool dag = base == BaseKind::DagReach;
    bool treeish = base == BaseKind::Tree || base == BaseKind::Forest;

    std::optional<int> s, t;
    if (with_st && n > 0) {
        s = rng.below(n);
        t = rng.below(n);
    }
    FamilyUnionInstance inst;
    inst.base = base;
    inst.tmpl = graph_template(n, directed, s, t);

    // tree-flavoured bases draw members from sub-forests of a random tree so
    // unions are sometimes acyclic
    Graph skeleton(n, false);
    if (treeish && n > 1)
        for (int v = 1; v < n; ++v) skeleton.add_edge(rng.below(v), v);

    for (int i = 0; i < k; ++i) {
        std::vector<InstantiationWord> fam;
        int members = rng.range(1, per_family);
        std::set<std::string> seen;
        for (int j = 0; j < members; ++j) {
            Graph g(n, directed);
            g.s = s;
            g.t = t;
            for (int a = 0; a < n; ++a)
                for (int b = directed ? 0 : a; b < n; ++b) {
                    if (dag && a >= b) continue;
                    if (!directed && a == b) continue;
                    int percent = treeish ? (skeleton.has_edge(a, b) ? 45 : 6) : 35;
                    if (rng.chance(percent)) g.add_edge(a, b);
                }
            std::string w = encode_graph_word(g);
            if (!seen.insert(w).second) continue;
            fam.emplace_back(inst.tmpl, w);
        }
        inst.families.push_back(std::move(fam));
    }
    inst.validate();
    return inst;
}

FamilyUnionInstance gen_family_union_agen(Rng& rng, int universe, int k, int per_family) {
    GeneratorInstance gi = gen_generator(rng, universe, universe, 0, true);
    FamilyUnionInstance inst;
    inst.base = BaseKind::Agen;
    inst.tmpl = agen_template(gi);
    for (int i = 0; i < k; ++i) {
        std::vector<InstantiationWord> fam;
        int members = rng.range(1, per_family);
        std::set<std::string> seen;
        for (int j = 0; j < members; ++j) {
            std::vector<int> chosen;
            for (int c : gi.candidates)
                if (rng.chance(45)) chosen.push_back(c);
            std::string w = encode_agen_word(gi, chosen);
            if (!seen.insert(w).second) continue;
            fam.emplace_back(inst.tmpl, w);
        }
        inst.families.push_back(std::move(fam));
    }
    inst.validate();
    return inst;
}

SubsetUnionInstance gen_subset_union_agen(Rng& rng, int universe, int set_size, int k) {
    GeneratorInstance gi = gen_generator(rng, universe, universe, 0, true);
    SubsetUnionInstance inst;
    inst.base = BaseKind::Agen;
    inst.tmpl = agen_template(gi);
    inst.k = k;
    std::set<std::string> seen;
    for (int j = 0; j < set_size; ++j) {
        std::vector<int> chosen;
        for (int c : gi.candidates)
            if (rng.chance(40) && static_cast<int>(chosen.size()) < 2) chosen.push_back(c);
        std::string w = encode_agen_word(gi, chosen);
        if (!seen.insert(w).second) continue;
        inst.elements.emplace_back(inst.tmpl, w);
    }
    inst.validate();
    return inst;
}

// --- kind dispatch ----------------------------------------------------------------

ProblemInstance gen_instance(const std::string& kind, const GenProfile& p, std::uint64_t seed) {
    Rng rng(seed);
    auto det = [&](int dflt) { return p.deterministic.value_or(dflt) != 0; };

    if (kind == "graph") return gen_graph(rng, p.n.value_or(4), true, 35, true, false);
    if (kind == "dag-graph") return gen_graph(rng, p.n.value_or(4), true, 35, true, true);
    if (kind == "layered-graph")
        return gen_layered_graph(rng, p.layers.value_or(4), p.width.value_or(3), 50);
    if (kind == "bf") {
        BfInstance inst;
        int vars = p.vars.value_or(3);
        inst.formula = gen_formula(rng, vars, 8);
        for (int v = 0; v < vars; ++v) inst.assignment += rng.chance(50) ? '1' : '0';
        return inst;
    }
    if (kind == "dtsc" || kind == "ntsc")
        return gen_bounded_tm(rng, p.states.value_or(3), p.alphabet.value_or(2), kind == "dtsc",
                              p.steps.value_or(20), p.cells.value_or(3));
    if (kind == "tm2")
        return gen_tm2(rng, p.states.value_or(3), p.alphabet.value_or(2), det(1),
                       p.length.value_or(3));
    if (kind == "mfa")
        return gen_mfa(rng, p.states.value_or(4), p.heads.value_or(2), p.length.value_or(3),
                       det(1), false);
    if (kind == "dag-mfa")
        return gen_mfa(rng, p.states.value_or(4), p.heads.value_or(2), p.length.value_or(3),
                       det(1), true);
    if (kind == "ca") return gen_ca(rng, p.states.value_or(3), p.cells.value_or(3), true, false, 85);
    if (kind == "nca") return gen_ca(rng, p.states.value_or(3), p.cells.value_or(3), false, false, 70);
    if (kind == "dag-ca")
        return gen_ca(rng, p.states.value_or(3), p.cells.value_or(2), true, true, 80);
    if (kind == "dag-nca")
        return gen_ca(rng, p.states.value_or(3), p.cells.value_or(2), false, true, 70);
    if (kind == "tpg") return gen_tpg(rng, p.n.value_or(5), 35, false, p.k.value_or(0));
    if (kind == "lcs")
        return gen_lcs(rng, p.strings.value_or(3), p.alphabet.value_or(4), p.length.value_or(5),
                       false);
    if (kind == "lcs-injective")
        return gen_lcs(rng, p.strings.value_or(3), p.alphabet.value_or(5), p.length.value_or(5),
                       true);
    if (kind == "gen")
        return gen_generator(rng, p.n.value_or(4), p.n.value_or(4), p.k.value_or(1), true);
    if (kind == "rs") return gen_rs(rng, p.alphabet.value_or(3), 4);
    if (kind == "projection") return gen_projection(rng, p.length.value_or(3), p.k.value_or(2), 10);
    if (kind == "family-union-bf")
        return gen_family_union_bf(rng, p.vars.value_or(3), p.k.value_or(2), 3);
    if (kind == "subset-union-bf")
        return gen_subset_union_bf(rng, p.vars.value_or(3), p.n.value_or(4), p.k.value_or(2));
    if (kind == "weighted-union-bf") {
        BooleanFormula phi = gen_formula(rng, p.vars.value_or(3), 8);
        WeightedUnionInstance inst;
        inst.base = BaseKind::Bf;
        inst.tmpl = bf_template(phi);
        inst.k = p.k.value_or(1);
        return inst;
    }
    if (kind == "family-union-agen")
        return gen_family_union_agen(rng, p.n.value_or(3), p.k.value_or(2), 2);
    if (kind == "subset-union-agen")
        return gen_subset_union_agen(rng, p.n.value_or(3), p.n.value_or(3), p.k.value_or(1));
    if (kind.rfind("family-union-", 0) == 0) {
        std::string base = kind.substr(std::string("family-union-").size());
        return gen_family_union_graph(rng, base_kind_from_string(base), p.n.value_or(3),
                                      p.k.value_or(2), 2);
    }
    throw PreconditionError("gen: unknown kind " + kind);
}

}  // namespace parared
