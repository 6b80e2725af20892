#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "parared/generate.hpp"
#include "parared/machine_reductions.hpp"
#include "parared/oracles.hpp"

using namespace parared;

namespace {

Graph three_layer_graph() {
    Graph g(9, true);
    g.layers = {0, 0, 0, 1, 1, 1, 2, 2, 2};
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    g.add_edge(1, 5);
    g.add_edge(2, 5);
    g.add_edge(3, 6);
    g.add_edge(3, 7);
    g.add_edge(4, 8);
    g.add_edge(5, 7);
    g.add_edge(5, 8);
    return g;
}

std::string render(const LcsInstance& inst, int string_index) {
    std::string out;
    for (int sym : inst.strings[string_index]) out += inst.alphabet[sym];
    return out;
}

}  // namespace

TEST_CASE("input hardwiring") {
    Rng rng(3);
    TwoTapeTM m = gen_tm2(rng, 3, 3, true, 4);
    SingleTapeTM hard = tm_hardwire_input(m);
    CHECK(hard.state_count == 3 * 4);  // |Q| copies per input position

    m.input.clear();
    SingleTapeTM eps = tm_hardwire_input(m);
    CHECK(eps.state_count == 3);  // a single copy on the empty input
}

TEST_CASE("space compression") {
    Rng rng(9);
    SingleTapeTM m = gen_tm(rng, 3, 3, true);
    SUBCASE("block 1 renames without changing behaviour") {
        SingleTapeTM c = tm_space_compress(m, 1);
        CHECK(c.state_count == m.state_count);
        CHECK(c.alphabet.size() == m.alphabet.size());
        for (long long t : {0, 3, 9}) {
            Budget b1, b2;
            CHECK(run_tm_bounded({m, t, 3}, b1) == run_tm_bounded({c, t, 3}, b2));
        }
    }
    SUBCASE("block alphabet grows to |Gamma|^b") {
        SingleTapeTM c = tm_space_compress(m, 2);
        CHECK(c.alphabet.size() == 9);
        CHECK(c.state_count == m.state_count * 2);
    }
    SUBCASE("block-level acceptance is exact") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            Rng r(seed);
            SingleTapeTM mm = gen_tm(r, r.range(2, 4), r.range(2, 3), r.chance(60));
            int block = r.range(1, 3);
            int blocks_used = r.range(1, 2);
            long long t = r.range(0, 20);
            SingleTapeTM cc = tm_space_compress(mm, block);
            Budget b1, b2;
            CHECK(run_tm_bounded({mm, t, blocks_used * block}, b1) ==
                  run_tm_bounded({cc, t, blocks_used}, b2));
        }
    }
}

TEST_CASE("composed bounded-run reduction emits ceil(s/b) cells") {
    Rng rng(15);
    TwoTapeTM m = gen_tm2(rng, 3, 2, true, 2);
    BoundedTMInstance out = dtsc_from_parameterized_run(m, 12, 6, 3);
    CHECK(out.cells == 2);
    CHECK(out.steps == 12);
    BoundedTMInstance out1 = dtsc_from_parameterized_run(m, 12, 5, 3);
    CHECK(out1.cells == 2);
}

TEST_CASE("machine to cellular automaton") {
    SUBCASE("an immediately accepting machine yields an accepting initial string") {
        SingleTapeTM m;
        m.state_count = 1;
        m.accepting = {0};
        CellularInstance inst = tm_to_ca(m, 3);
        bool initial_accepting = false;
        for (int q : inst.initial)
            if (inst.automaton.is_accepting(q)) initial_accepting = true;
        CHECK(initial_accepting);
    }
    SUBCASE("state strings decode to machine configurations step for step") {
        Rng rng(21);
        for (int round = 0; round < 25; ++round) {
            SingleTapeTM m = gen_tm(rng, rng.range(2, 4), rng.range(2, 3), true);
            int s = rng.range(1, 4);
            CellularInstance ca = tm_to_ca(m, s);
            const int g_count = static_cast<int>(m.alphabet.size());
            const int bot_base = m.state_count * g_count;

            // direct machine trace
            int state = m.initial, head = 0;
            std::string tape(s, '\0');
            std::vector<int> config = ca.initial;
            std::map<std::tuple<int, int, int>, std::vector<int>> inter;
            std::map<std::pair<int, int>, std::vector<int>> lft, rgt;
            std::map<int, std::vector<int>> sng;
            for (auto& r : ca.automaton.interior)
                inter[{r.left, r.own, r.right}].push_back(r.next);
            for (auto& r : ca.automaton.left) lft[{r.a, r.b}].push_back(r.next);
            for (auto& r : ca.automaton.right) rgt[{r.a, r.b}].push_back(r.next);
            for (auto& r : ca.automaton.single) sng[r.own].push_back(r.next);

            for (int step = 0; step < 20; ++step) {
                // decode: exactly one head cell, symbols match the tape
                int heads_seen = 0;
                for (int c = 0; c < s; ++c) {
                    int q = config[c];
                    if (q < bot_base) {
                        ++heads_seen;
                        CHECK(q / g_count == state);
                        CHECK(c == head);
                        CHECK(q % g_count == tape[c]);
                    } else {
                        CHECK(q - bot_base == tape[c]);
                    }
                }
                CHECK(heads_seen == 1);

                // one machine step
                const SingleTapeTM::Transition* tr = nullptr;
                for (auto& cand : m.transitions)
                    if (cand.state == state && cand.read == tape[head]) { tr = &cand; break; }
                if (!tr) break;
                tape[head] = static_cast<char>(tr->write);
                state = tr->next;
                if (tr->move == Move::Left) --head;
                else if (tr->move == Move::Right) ++head;
                if (head < 0 || head >= s) break;  // falls off; automaton goes all-quiet

                // one automaton step
                std::vector<int> next(s);
                bool stuck = false;
                for (int c = 0; c < s && !stuck; ++c) {
                    const std::vector<int>* opts = nullptr;
                    if (s == 1) { auto it = sng.find(config[0]); if (it != sng.end()) opts = &it->second; }
                    else if (c == 0) { auto it = lft.find({config[0], config[1]}); if (it != lft.end()) opts = &it->second; }
                    else if (c == s - 1) { auto it = rgt.find({config[s - 2], config[s - 1]}); if (it != rgt.end()) opts = &it->second; }
                    else { auto it = inter.find({config[c - 1], config[c], config[c + 1]}); if (it != inter.end()) opts = &it->second; }
                    if (!opts || opts->empty()) { stuck = true; break; }
                    REQUIRE(opts->size() == 1);
                    next[c] = opts->front();
                }
                if (stuck) break;
                config = std::move(next);
            }
        }
    }
}

TEST_CASE("tagged nondeterministic simulation matches the plain one on deterministic input") {
    Rng rng(33);
    for (int round = 0; round < 20; ++round) {
        SingleTapeTM m = gen_tm(rng, rng.range(2, 4), 2, true);
        int s = rng.range(1, 3);
        Budget b1, b2;
        CHECK(run_ca(tm_to_ca(m, s), RunMode::Det, b1) ==
              run_ca(tm_to_nca(m, s), RunMode::Nondet, b2));
    }
}

TEST_CASE("binary branching splits wide choices") {
    SingleTapeTM m;
    m.state_count = 4;
    m.alphabet = "_";
    m.accepting = {3};
    for (int i = 0; i < 3; ++i) m.transitions.push_back({0, 0, i + 1, 0, Move::Stay});
    m.deterministic = false;
    SingleTapeTM split = tm_binary_branching(m);
    std::map<std::pair<int, int>, int> width;
    for (auto& tr : split.transitions) width[{tr.state, tr.read}]++;
    for (auto& [key, w] : width) CHECK(w <= 2);
    Budget b1, b2;
    CHECK(run_tm_bounded({m, 10, 1}, b1) == run_tm_bounded({split, 10, 1}, b2));
}

TEST_CASE("clock layering") {
    Rng rng(39);
    SUBCASE("one copy accepts iff the input accepts in one step") {
        for (int round = 0; round < 20; ++round) {
            CellularInstance inst = gen_ca(rng, 3, 2, true, false, 90);
            CellularInstance out = ca_to_dag_ca(inst, 1);
            Budget b1, b2;
            CHECK(run_ca_bounded(inst, RunMode::Det, 1, b1) == run_ca(out, RunMode::Det, b2));
        }
    }
    SUBCASE("the output always validates as a dag") {
        CellularInstance inst = gen_ca(rng, 3, 2, false, false, 80);
        CellularInstance out = ca_to_dag_ca(inst, 3);
        CHECK(out.automaton.dag);
        CHECK_NOTHROW(out.validate());
    }
    SUBCASE("multi-head layering preserves acceptance of dag automata") {
        for (int round = 0; round < 20; ++round) {
            MultiHeadAutomaton a = gen_mfa(rng, rng.range(2, 4), rng.range(1, 2),
                                           rng.range(1, 3), rng.chance(60), true);
            MultiHeadAutomaton out = mfa_to_dag_mfa(a, a.state_count);
            Budget b1, b2;
            CHECK(run_mfa(a, b1) == run_mfa(out, b2));
        }
    }
}

TEST_CASE("pebble game structure mirrors the two-layer figure") {
    // |Q| = 2, s = 3: auxiliary layers of 4 + 8 + 4 vertices with thresholds
    // 2 / 3 / 2; main-layer thresholds 1
    CellularAutomaton ca;
    ca.state_count = 2;
    ca.deterministic = true;
    ca.dag = true;
    ca.accepting = {1};
    ca.left.push_back({0, 0, 1});
    ca.right.push_back({0, 0, 1});
    ca.interior.push_back({0, 0, 0, 1});
    CellularInstance inst{ca, {0, 0, 0}, {1, 1, 1}};

    ThresholdPebbleGame game = dagca_to_tpg(inst, 3);
    const int main_size = 3 * 2;
    const int aux_size = 4 + 8 + 4;
    CHECK(game.graph.n() == 3 * main_size + 2 * aux_size);
    CHECK(game.cap == 3);

    auto aux_thresholds = [&](int layer_pair) {
        int base = layer_pair * (main_size + aux_size) + main_size;
        for (int i = 0; i < 4; ++i) CHECK(game.thresholds[base + i] == 2);
        for (int i = 4; i < 12; ++i) CHECK(game.thresholds[base + i] == 3);
        for (int i = 12; i < 16; ++i) CHECK(game.thresholds[base + i] == 2);
    };
    aux_thresholds(0);
    aux_thresholds(1);
    for (int layer = 0; layer < 3; ++layer) {
        int base = layer * (main_size + aux_size);
        for (int i = 0; i < main_size; ++i) CHECK(game.thresholds[base + i] == 1);
    }

    SUBCASE("the maximum next pebbling covers exactly s auxiliary vertices") {
        std::vector<char> x(game.graph.n(), 0);
        for (int v : game.start) x[v] = 1;
        int pebbleable = 0;
        for (int v = 0; v < game.graph.n(); ++v) {
            int count = 0;
            for (int p = 0; p < game.graph.n(); ++p)
                if (x[p] && game.graph.has_edge(p, v)) ++count;
            if (count >= game.thresholds[v]) ++pebbleable;
        }
        CHECK(pebbleable == 3);
    }

    SUBCASE("missing preconditions are reported") {
        CellularInstance no_config{ca, {0, 0, 0}, {}};
        CHECK_THROWS_AS(dagca_to_tpg(no_config, 3), PreconditionError);
        CellularAutomaton cyclic = ca;
        cyclic.dag = false;
        CellularInstance not_dag{cyclic, {0, 0, 0}, {1, 1, 1}};
        CHECK_THROWS_AS(dagca_to_tpg(not_dag, 3), PreconditionError);
    }
}

TEST_CASE("cyclic pebble game size is independent of the run length") {
    Rng rng(51);
    CellularInstance inst = gen_ca(rng, 3, 3, true, false, 100);
    CellularInstance norm = ca_normalize_unique_accept_cyclic(inst);
    ThresholdPebbleGame game = ca_to_tpg_cyclic(norm);
    int q = norm.automaton.state_count;
    int expected_aux = q * q + q * q * q + q * q;
    CHECK(game.graph.n() == 3 * q + expected_aux);
}

TEST_CASE("layered reachability to injective lcs reproduces the worked strings") {
    Graph g = three_layer_graph();
    LcsInstance out = layeredreach_to_lcs_injective(g);
    REQUIRE(out.strings.size() == 4);
    CHECK(out.l == 2);
    CHECK(render(out, 0) == "abcdefgihj");
    CHECK(render(out, 1) == "edcbajhigf");
    CHECK(render(out, 2) == "abfgchdeij");
    CHECK(render(out, 3) == "edjichbagf");
    CHECK(out.injective());
    CHECK(lcs_injective_decide(out));

    SUBCASE("edges of one layer appear in opposite orders in the paired strings") {
        Rng rng(57);
        for (int round = 0; round < 30; ++round) {
            Graph h = gen_layered_graph(rng, rng.range(2, 5), rng.range(1, 4), 60);
            LcsInstance lcs = layeredreach_to_lcs_injective(h);
            // per layer, the edge symbols of that layer must be mutually
            // reversed between the two strings of each pair
            std::map<int, int> layer_of_symbol;
            {
                struct E { int from, to, layer; };
                std::vector<E> edges;
                for (int a = 0; a < h.n(); ++a)
                    for (int b = 0; b < h.n(); ++b)
                        if (h.has_edge(a, b)) edges.push_back({a, b, h.layers[a]});
                std::sort(edges.begin(), edges.end(), [](const E& x, const E& y) {
                    return std::tie(x.layer, x.from, x.to) < std::tie(y.layer, y.from, y.to);
                });
                for (std::size_t e = 0; e < edges.size(); ++e)
                    layer_of_symbol[static_cast<int>(e)] = edges[e].layer;
            }
            for (int pair = 0; pair < 2; ++pair) {
                const auto& fwd = lcs.strings[2 * pair];
                const auto& rev = lcs.strings[2 * pair + 1];
                std::map<int, std::vector<int>> by_layer_fwd, by_layer_rev;
                for (int sym : fwd) by_layer_fwd[layer_of_symbol[sym]].push_back(sym);
                for (int sym : rev) by_layer_rev[layer_of_symbol[sym]].push_back(sym);
                for (auto& [layer, order] : by_layer_fwd) {
                    std::vector<int> mirrored(by_layer_rev[layer].rbegin(),
                                              by_layer_rev[layer].rend());
                    CHECK(order == mirrored);
                }
            }
        }
    }
}

TEST_CASE("malformed layering is rejected") {
    Graph g(3, true);
    g.layers = {0, 0, 1};
    g.add_edge(0, 1);  // stays inside layer 0
    CHECK_THROWS_AS(layeredreach_to_lcs_injective(g), PreconditionError);
}

TEST_CASE("sequentialization") {
    Rng rng(63);
    SUBCASE("the state count squares") {
        CellularInstance inst = gen_ca(rng, 3, 2, true, false, 90);
        SequentialCellularInstance seq = nca_to_sequential(inst);
        CHECK(seq.automaton.state_count == 9);
    }
    SUBCASE("sequential minor steps project onto the parallel run") {
        for (int round = 0; round < 50; ++round) {
            int states = rng.range(2, 3);
            int k = rng.range(1, 3);
            CellularInstance inst = gen_ca(rng, states, k, true, false, 100);
            SequentialCellularInstance seq = nca_to_sequential(inst);

            std::map<std::tuple<int, int, int>, int> inter;
            std::map<std::pair<int, int>, int> lft, rgt;
            std::map<int, int> sng;
            for (auto& r : inst.automaton.interior) inter[{r.left, r.own, r.right}] = r.next;
            for (auto& r : inst.automaton.left) lft[{r.a, r.b}] = r.next;
            for (auto& r : inst.automaton.right) rgt[{r.a, r.b}] = r.next;
            for (auto& r : inst.automaton.single) sng[r.own] = r.next;

            std::map<std::tuple<int, int, int>, int> sinter;
            std::map<std::pair<int, int>, int> slft, srgt;
            std::map<int, int> ssng;
            for (auto& r : seq.automaton.interior) sinter[{r.left, r.own, r.right}] = r.next;
            for (auto& r : seq.automaton.left) slft[{r.a, r.b}] = r.next;
            for (auto& r : seq.automaton.right) srgt[{r.a, r.b}] = r.next;
            for (auto& r : seq.automaton.single) ssng[r.own] = r.next;

            std::vector<int> par = inst.initial;
            std::vector<int> sq = seq.initial;
            for (int major = 0; major < 4; ++major) {
                // one parallel step (the automaton is total)
                std::vector<int> next(k);
                for (int c = 0; c < k; ++c) {
                    if (k == 1) next[c] = sng.at(par[0]);
                    else if (c == 0) next[c] = lft.at({par[0], par[1]});
                    else if (c == k - 1) next[c] = rgt.at({par[k - 2], par[k - 1]});
                    else next[c] = inter.at({par[c - 1], par[c], par[c + 1]});
                }
                par = std::move(next);
                // k sequential minor steps
                for (int c = 0; c < k; ++c) {
                    if (k == 1) sq[c] = ssng.at(sq[0]);
                    else if (c == 0) sq[c] = slft.at({sq[0], sq[1]});
                    else if (c == k - 1) sq[c] = srgt.at({sq[k - 2], sq[k - 1]});
                    else sq[c] = sinter.at({sq[c - 1], sq[c], sq[c + 1]});
                }
                // current components match the parallel configuration
                for (int c = 0; c < k; ++c) CHECK(sq[c] / states == par[c]);
            }
        }
    }
}

TEST_CASE("lcs strings from sequential automata") {
    Rng rng(69);
    for (int round = 0; round < 15; ++round) {
        int k = rng.range(1, 3);
        CellularInstance inst = gen_ca(rng, rng.range(2, 3), k, true, true, 100);
        int t = inst.automaton.state_count;
        SeqcaLcs out = nca_to_lcs_pipeline(inst, t);
        int horizon = t + k + 2;
        CHECK(static_cast<int>(out.lcs.strings.size()) == 4 * k);
        CHECK(out.lcs.l == static_cast<long long>(horizon) * k);

        // tags two or more major steps apart are ordered in every string at
        // every real (non-completion) position
        for (std::size_t j = 0; j < out.lcs.strings.size(); ++j) {
            // symbol -> (min real pos, max real pos, step)
            std::map<int, std::pair<int, int>> span;
            for (std::size_t p = 0; p < out.lcs.strings[j].size(); ++p) {
                if (out.rule_ids[j][p] == 0 || out.rule_ids[j][p] == 7) continue;
                int sym = out.lcs.strings[j][p];
                auto it = span.find(sym);
                if (it == span.end()) span[sym] = {static_cast<int>(p), static_cast<int>(p)};
                else it->second.second = static_cast<int>(p);
            }
            auto step_of = [&](int sym) {
                const std::string& name = out.lcs.alphabet[sym];
                auto s = name.rfind('s');
                auto c = name.rfind('c');
                return std::stoi(name.substr(s + 1, c - s - 1));
            };
            std::vector<std::pair<int, int>> order;  // (step, sym)
            for (auto& [sym, se] : span) order.push_back({step_of(sym), sym});
            for (auto& [step1, sym1] : order)
                for (auto& [step2, sym2] : order)
                    if (step1 + 2 <= step2)
                        CHECK(span[sym1].second < span[sym2].first);
        }
    }
}

TEST_CASE("padded horizon instances gate rejection branches") {
    Rng rng(81);
    for (int round = 0; round < 30; ++round) {
        int k = rng.range(1, 3);
        CellularInstance inst = gen_ca(rng, rng.range(2, 3), k, rng.chance(60), true, 100);
        if (rng.chance(30)) inst.automaton.accepting.clear();
        int t = inst.automaton.state_count;
        SequentialCellularInstance seq = nca_to_sequential(inst);
        PaddedSeqca padded = seqca_pad_to_horizon(seq, t);
        RunMode mode = inst.automaton.deterministic ? RunMode::Det : RunMode::Nondet;
        Budget b1, b2;
        CHECK(run_ca(inst, mode, b1) == run_seqca(padded.instance, mode, b2));
    }
}
