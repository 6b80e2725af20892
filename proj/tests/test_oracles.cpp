#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parared/generate.hpp"
#include "parared/oracles.hpp"

using namespace parared;

namespace {

BooleanFormula phi_xyz() {  // x ∧ (y → x) ∧ z
    return BooleanFormula::band(
        BooleanFormula::band(BooleanFormula::var(0),
                             BooleanFormula::implies(BooleanFormula::var(1),
                                                     BooleanFormula::var(0))),
        BooleanFormula::var(2));
}

// the three-layer example graph: v1..v3 | v4..v6 | v7..v9, edges a..j
Graph three_layer_graph() {
    Graph g(9, true);
    g.layers = {0, 0, 0, 1, 1, 1, 2, 2, 2};
    g.add_edge(0, 3);  // a
    g.add_edge(1, 3);  // b
    g.add_edge(1, 4);  // c
    g.add_edge(1, 5);  // d
    g.add_edge(2, 5);  // e
    g.add_edge(3, 6);  // f
    g.add_edge(3, 7);  // g
    g.add_edge(4, 8);  // h
    g.add_edge(5, 7);  // i
    g.add_edge(5, 8);  // j
    return g;
}

LcsInstance three_layer_strings() {
    LcsInstance inst;
    for (char c = 'a'; c <= 'j'; ++c) inst.alphabet.push_back(std::string(1, c));
    auto word = [&](const std::string& s) {
        std::vector<int> w;
        for (char c : s) w.push_back(c - 'a');
        return w;
    };
    inst.strings = {word("abcdefgihj"), word("edcbajhigf"), word("abfgchdeij"),
                    word("edjichbagf")};
    inst.l = 2;
    return inst;
}

}  // namespace

TEST_CASE("eval_bf on the worked formula") {
    BooleanFormula f = phi_xyz();
    CHECK(eval_bf(f, "101"));
    CHECK_FALSE(eval_bf(f, "010"));
    CHECK(eval_bf(BooleanFormula::constant(true), ""));
    CHECK_THROWS_AS(eval_bf(f, "10"), PreconditionError);
}

TEST_CASE("graph properties") {
    SUBCASE("layered-reach on the worked graph") {
        Graph g = three_layer_graph();
        g.s = 1;  // v2
        g.t = 8;  // v9
        CHECK(graph_property(GraphPropertyKind::LayeredReach, g));
        g.s = 0;
        g.t = 7;  // v1 -> a -> v4 -> g -> v8
        CHECK(graph_property(GraphPropertyKind::LayeredReach, g));
    }
    SUBCASE("reach on a single vertex with s = t") {
        Graph g(1, true);
        g.s = 0;
        g.t = 0;
        CHECK(graph_property(GraphPropertyKind::Reach, g));
    }
    SUBCASE("forest on the empty graph") {
        Graph g(0, false);
        CHECK(graph_property(GraphPropertyKind::Forest, g));
        CHECK_FALSE(graph_property(GraphPropertyKind::Tree, g));
    }
    SUBCASE("cycles") {
        Graph g(2, true);
        g.add_edge(0, 1);
        CHECK_FALSE(graph_property(GraphPropertyKind::Cycle, g));
        g.add_edge(1, 0);
        CHECK(graph_property(GraphPropertyKind::Cycle, g));
        Graph u(3, false);
        u.add_edge(0, 1);
        u.add_edge(1, 2);
        CHECK(graph_property(GraphPropertyKind::Tree, u));
        CHECK_FALSE(graph_property(GraphPropertyKind::UndirectedCycle, u));
        u.add_edge(2, 0);
        CHECK(graph_property(GraphPropertyKind::UndirectedCycle, u));
        CHECK_FALSE(graph_property(GraphPropertyKind::Forest, u));
    }
    SUBCASE("missing data errors") {
        Graph g(2, true);
        CHECK_THROWS_AS(graph_property(GraphPropertyKind::Reach, g), PreconditionError);
        CHECK_THROWS_AS(graph_property(GraphPropertyKind::LayeredReach, g), PreconditionError);
    }
}

TEST_CASE("solve_union on the worked instances") {
    Budget budget;
    SUBCASE("weighted over the Theorem-2 output formula") {
        // v2 ∧ ((v3 ∨ v4) → v2) ∧ (v2 ∨ v4)
        BooleanFormula phi2 = BooleanFormula::band(
            BooleanFormula::band(
                BooleanFormula::var(1),
                BooleanFormula::implies(
                    BooleanFormula::bor(BooleanFormula::var(2), BooleanFormula::var(3)),
                    BooleanFormula::var(1))),
            BooleanFormula::bor(BooleanFormula::var(1), BooleanFormula::var(3)));
        WeightedUnionInstance w;
        w.base = BaseKind::Bf;
        w.tmpl = bf_template(phi2);
        w.k = 1;
        CHECK(solve_union(w, base_oracle(BaseKind::Bf), budget) == Outcome::Yes);
    }
    SUBCASE("subset over the worked formula") {
        BooleanFormula f = phi_xyz();
        SubsetUnionInstance s;
        s.base = BaseKind::Bf;
        s.tmpl = bf_template(f);
        for (const char* a : {"000", "101", "010", "111"})
            s.elements.emplace_back(s.tmpl, encode_bf_word(f, a));
        s.k = 1;
        CHECK(solve_union(s, base_oracle(BaseKind::Bf), budget) == Outcome::Yes);
    }
    SUBCASE("a family with an empty set has no choice") {
        BooleanFormula f = BooleanFormula::constant(true);
        FamilyUnionInstance fam;
        fam.base = BaseKind::Bf;
        fam.tmpl = bf_template(f);
        fam.families.push_back({});
        CHECK(solve_union(fam, base_oracle(BaseKind::Bf), budget) == Outcome::No);
    }
    SUBCASE("weighted equals subset over all weight-one instantiations") {
        Rng rng(99);
        for (int round = 0; round < 60; ++round) {
            BooleanFormula f = gen_formula(rng, rng.range(1, 4), 8);
            auto t = bf_template(f);
            int k = rng.range(0, 3);
            WeightedUnionInstance w{BaseKind::Bf, t, k};
            SubsetUnionInstance s;
            s.base = BaseKind::Bf;
            s.tmpl = t;
            s.elements = all_weight_one_instantiations(t);
            s.k = k;
            Budget b1, b2;
            CHECK(solve_union(w, base_oracle(BaseKind::Bf), b1) ==
                  solve_union(s, base_oracle(BaseKind::Bf), b2));
        }
    }
}

TEST_CASE("bounded machine runs") {
    Budget budget;
    SUBCASE("initial state accepting, t = 0") {
        SingleTapeTM m;
        m.state_count = 1;
        m.accepting = {0};
        CHECK(run_tm_bounded({m, 0, 1}, budget) == Outcome::Yes);
    }
    SUBCASE("no transitions, not accepting") {
        SingleTapeTM m;
        m.state_count = 1;
        CHECK(run_tm_bounded({m, 50, 2}, budget) == Outcome::No);
    }
    SUBCASE("write one symbol then accept") {
        SingleTapeTM m;
        m.state_count = 2;
        m.alphabet = "_a";
        m.accepting = {1};
        m.transitions.push_back({0, 0, 1, 1, Move::Stay});
        CHECK(run_tm_bounded({m, 1, 1}, budget) == Outcome::Yes);
        CHECK(run_tm_bounded({m, 0, 1}, budget) == Outcome::No);
    }
    SUBCASE("boundary violations reject") {
        SingleTapeTM m;
        m.state_count = 2;
        m.alphabet = "_";
        m.accepting = {1};
        m.transitions.push_back({0, 0, 1, 0, Move::Left});
        CHECK(run_tm_bounded({m, 5, 1}, budget) == Outcome::No);
    }
}

TEST_CASE("multi-head automata") {
    Budget budget;
    SUBCASE("accepting immediately") {
        MultiHeadAutomaton a;
        a.state_count = 1;
        a.heads = 1;
        a.initial = 1;
        a.accepting = {1};
        a.input = "xx";
        CHECK(run_mfa(a, budget) == Outcome::Yes);
    }
    SUBCASE("dag automata stop within |Q| transitions") {
        Rng rng(4);
        for (int round = 0; round < 30; ++round) {
            MultiHeadAutomaton a = gen_mfa(rng, rng.range(2, 4), rng.range(1, 2),
                                           rng.range(1, 3), rng.chance(50), true);
            Budget b;
            CHECK_NOTHROW(run_mfa(a, b));  // the run itself asserts the bound
        }
    }
    SUBCASE("two heads compare w with its reverse") {
        // head 2 walks to the right end, then the heads scan toward each
        // other comparing symbols; '<' under head 2 and '>' under head 1
        // means every position matched
        MultiHeadAutomaton a;
        a.state_count = 3;
        a.heads = 2;
        a.initial = 1;
        a.accepting = {3};
        auto walk = [&](char c1, char c2) {
            a.transitions.push_back({1, std::string{c1, c2}, 1, {Move::Stay, Move::Right}});
        };
        for (char c1 : {'a', 'b'})
            for (char c2 : {'a', 'b'}) walk(c1, c2);
        for (char c1 : {'a', 'b'})
            a.transitions.push_back({1, std::string{c1, '>'}, 2, {Move::Stay, Move::Left}});
        for (char c : {'a', 'b'})
            a.transitions.push_back({2, std::string{c, c}, 2, {Move::Right, Move::Left}});
        a.transitions.push_back({2, "><", 3, {Move::Stay, Move::Stay}});
        a.input = "abba";
        Budget b1;
        CHECK(run_mfa(a, b1) == Outcome::Yes);
        a.input = "aba";
        Budget b2;
        CHECK(run_mfa(a, b2) == Outcome::Yes);
        a.input = "ab";
        Budget b3;
        CHECK(run_mfa(a, b3) == Outcome::No);
    }
}

TEST_CASE("cellular automata runs") {
    SUBCASE("initial string already accepting") {
        CellularInstance inst;
        inst.automaton.state_count = 2;
        inst.automaton.accepting = {1};
        inst.initial = {0, 1};
        Budget b;
        CHECK(run_ca(inst, RunMode::Det, b) == Outcome::Yes);
    }
    SUBCASE("a single cell is a unary state machine") {
        Rng rng(11);
        for (int round = 0; round < 40; ++round) {
            int states = rng.range(2, 5);
            CellularInstance inst;
            inst.automaton.state_count = states;
            inst.automaton.accepting = {states - 1};
            for (int q = 0; q < states; ++q)
                inst.automaton.single.push_back({q, rng.below(states)});
            inst.initial = {rng.below(states)};
            // direct walk of the state chain
            bool expect = false;
            int cur = inst.initial[0];
            std::set<int> seen;
            while (true) {
                if (cur == states - 1) { expect = true; break; }
                if (!seen.insert(cur).second) break;
                cur = inst.automaton.single[cur].next;
            }
            Budget b;
            CHECK(run_ca(inst, RunMode::Det, b) == outcome_of(expect));
        }
    }
    SUBCASE("dag automata halt within |Q| global steps") {
        Rng rng(12);
        for (int round = 0; round < 30; ++round) {
            CellularInstance inst = gen_ca(rng, rng.range(2, 4), rng.range(1, 3),
                                           rng.chance(50), true, 80);
            Budget b;
            RunMode mode = inst.automaton.deterministic ? RunMode::Det : RunMode::Nondet;
            CHECK_NOTHROW(run_ca(inst, mode, b));
        }
    }
}

TEST_CASE("threshold pebble games") {
    SUBCASE("S = T accepts in zero steps") {
        ThresholdPebbleGame g;
        g.graph = Graph(2, true);
        g.thresholds = {1, 1};
        g.start = {0};
        g.target = {0};
        Budget b;
        CHECK(run_tpg(g, TpgMode::Max, b) == Outcome::Yes);
        Budget b2;
        CHECK(run_tpg(g, TpgMode::Nondet, b2) == Outcome::Yes);
    }
    SUBCASE("single edge, threshold one") {
        ThresholdPebbleGame g;
        g.graph = Graph(2, true);
        g.graph.add_edge(0, 1);
        g.thresholds = {1, 1};
        g.start = {0};
        g.target = {1};
        Budget b;
        CHECK(run_tpg(g, TpgMode::Max, b) == Outcome::Yes);
        Budget b2;
        CHECK(run_tpg(g, TpgMode::Nondet, b2) == Outcome::Yes);
    }
    SUBCASE("a target beyond the pebble cap is only reachable as the start") {
        ThresholdPebbleGame g;
        g.graph = Graph(3, true);
        g.graph.add_edge(0, 1);
        g.graph.add_edge(0, 2);
        g.thresholds = {1, 1, 1};
        g.start = {0};
        g.target = {1, 2};
        g.cap = 1;
        Budget b;
        CHECK(run_tpg(g, TpgMode::Nondet, b) == Outcome::No);
        g.start = {1, 2};
        Budget b2;
        CHECK(run_tpg(g, TpgMode::Nondet, b2) == Outcome::Yes);
    }
    SUBCASE("max mode is deterministic across repeated runs") {
        Rng rng(31);
        for (int round = 0; round < 20; ++round) {
            ThresholdPebbleGame g = gen_tpg(rng, rng.range(2, 6), 40, false, 0);
            Budget b1, b2;
            CHECK(run_tpg(g, TpgMode::Max, b1) == run_tpg(g, TpgMode::Max, b2));
            CHECK(b1.used == b2.used);  // identical pebbling sequences
        }
    }
}

TEST_CASE("longest common subsequence oracles") {
    SUBCASE("the worked four-string instance") {
        LcsInstance inst = three_layer_strings();
        Budget b;
        CHECK(lcs_decide(inst, b) == Outcome::Yes);  // "a f" works
        CHECK(lcs_injective_decide(inst));
    }
    SUBCASE("l = 0 is always yes") {
        LcsInstance inst;
        inst.alphabet = {"a"};
        inst.strings = {{}, {}};
        inst.l = 0;
        Budget b;
        CHECK(lcs_decide(inst, b) == Outcome::Yes);
    }
    SUBCASE("ab and ba have no common pair") {
        LcsInstance inst;
        inst.alphabet = {"a", "b"};
        inst.strings = {{0, 1}, {1, 0}};
        inst.l = 2;
        Budget b;
        CHECK(lcs_decide(inst, b) == Outcome::No);
        CHECK_FALSE(lcs_injective_decide(inst));
    }
    SUBCASE("a single string matches itself") {
        LcsInstance inst;
        inst.alphabet = {"a", "b", "c"};
        inst.strings = {{0, 1, 2}};
        inst.l = 3;
        CHECK(lcs_injective_decide(inst));
    }
    SUBCASE("non-injective input violates the precondition") {
        LcsInstance inst;
        inst.alphabet = {"a"};
        inst.strings = {{0, 0}};
        inst.l = 1;
        CHECK_THROWS_AS(lcs_injective_decide(inst), PreconditionError);
    }
    SUBCASE("injective decider agrees with the general one") {
        Rng rng(77);
        for (int round = 0; round < 150; ++round) {
            LcsInstance inst = gen_lcs(rng, rng.range(1, 4), rng.range(2, 6),
                                       rng.range(1, 6), true);
            Budget b;
            Outcome full = lcs_decide(inst, b);
            REQUIRE(full != Outcome::BudgetExceeded);
            CHECK((full == Outcome::Yes) == lcs_injective_decide(inst));
        }
    }
}

TEST_CASE("generator closure and decision") {
    std::vector<std::vector<int>> mod4(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) mod4[a][b] = (a + b) % 4;

    CHECK(generator_closure(mod4, {}).empty());
    CHECK(generator_closure(mod4, {0, 1, 2, 3}).size() == 4);
    CHECK(generator_closure(mod4, {1}) == std::set<int>{0, 1, 2, 3});

    SUBCASE("closure is monotone") {
        Rng rng(41);
        for (int round = 0; round < 60; ++round) {
            int u = rng.range(2, 6);
            std::vector<std::vector<int>> table(u, std::vector<int>(u));
            for (auto& row : table)
                for (auto& v : row) v = rng.below(u);
            std::vector<int> small, big;
            for (int e = 0; e < u; ++e) {
                bool in_small = rng.chance(40);
                if (in_small) small.push_back(e);
                if (in_small || rng.chance(40)) big.push_back(e);
            }
            auto cs = generator_closure(table, small);
            auto cb = generator_closure(table, big);
            for (int e : cs) CHECK(cb.count(e) == 1);
        }
    }

    SUBCASE("agen decisions") {
        GeneratorInstance fixed;
        fixed.names = {"e"};
        fixed.table = {{0}};
        fixed.target = 0;
        fixed.candidates = {0};
        fixed.k = 1;
        fixed.associative = true;
        Budget b;
        CHECK(agen_decide(fixed, b) == Outcome::Yes);  // x ∈ C, x∘x = x

        GeneratorInstance zero;
        zero.names = {"a", "b"};
        zero.table = {{0, 0}, {0, 0}};
        zero.target = 1;
        zero.candidates = {0};
        zero.k = 0;
        zero.associative = true;
        Budget b2;
        CHECK(agen_decide(zero, b2) == Outcome::No);

        GeneratorInstance mod;
        mod.names = {"0", "1", "2", "3"};
        mod.table = mod4;
        mod.target = 3;
        mod.candidates = {1, 2};
        mod.k = 1;
        mod.associative = true;
        Budget b3;
        CHECK(agen_decide(mod, b3) == Outcome::Yes);  // G = {1}
    }
}

TEST_CASE("replacement system normalization") {
    ReplacementSystem rs;
    rs.alphabet = {"a", "b", "c"};
    rs.rules.push_back({{0, 1}, {2}});  // ab -> c

    CHECK(rs.render(rs_normalize(rs, rs.parse_word("a b"), 100)) == "c");
    CHECK(rs.render(rs_normalize(rs, rs.parse_word("c a"), 100)) == "c a");

    ReplacementSystem loop;
    loop.alphabet = {"a", "b"};
    loop.rules.push_back({{0}, {1}});
    loop.rules.push_back({{1}, {0}});
    CHECK_THROWS_AS(rs_normalize(loop, loop.parse_word("a"), 50), NonterminationSuspected);
}

TEST_CASE("budget exhaustion is reported, not folded into no") {
    LcsInstance big;
    big.alphabet = {"a", "b", "c", "d"};
    std::vector<int> word;
    for (int i = 0; i < 12; ++i) word.push_back(i % 4);
    big.strings = {word, word, word};
    big.l = 12;
    Budget tiny(3);
    CHECK(lcs_decide(big, tiny) == Outcome::BudgetExceeded);

    GeneratorInstance gi;
    int u = 8;
    gi.names.resize(u);
    gi.table.assign(u, std::vector<int>(u, 0));
    for (int i = 0; i < u; ++i) {
        gi.names[i] = "u" + std::to_string(i);
        gi.candidates.push_back(i);
        for (int j = 0; j < u; ++j) gi.table[i][j] = std::max(i, j);
    }
    gi.target = u - 1;
    gi.k = 4;
    gi.associative = true;
    Budget tiny2(1);
    CHECK(agen_decide(gi, tiny2) == Outcome::BudgetExceeded);
}
