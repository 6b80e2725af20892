// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Worked examples are byte-exact under the documented naming
// scheme; the seeded suites must agree 100% within budget.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "parared/generate.hpp"
#include "parared/machine_reductions.hpp"
#include "parared/oracles.hpp"
#include "parared/union_reductions.hpp"
#include "parared/verify.hpp"

using namespace parared;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
}

bool run_suite(const std::string& name, int cases, std::string& detail) {
    const ReductionDescriptor* desc = find_reduction(name);
    if (!desc || !desc->verifiable()) {
        detail = "missing suite";
        return false;
    }
    auto reports = verify_reduction(*desc, cases, 42);
    VerifySummary s = summarize(reports);
    detail = std::to_string(s.agreed) + "/" + std::to_string(s.cases) + " agreed, " +
             std::to_string(s.skipped) + " skipped";
    return s.disagreed == 0 && s.agreed > 0;
}

BooleanFormula phi_xyz() {
    return BooleanFormula::band(
        BooleanFormula::band(BooleanFormula::var(0),
                             BooleanFormula::implies(BooleanFormula::var(1),
                                                     BooleanFormula::var(0))),
        BooleanFormula::var(2));
}

// --- criterion 1a: the doubling projection example --------------------------------

void criterion_1a() {
    CompatibleProjection p;
    p.alphabet = "abg";
    p.kappa = 2;
    p.blocks = 2;
    p.block_width = 2;
    p.input = "abga";
    for (int copy = 0; copy < 2; ++copy) {
        for (int i = 0; i < 4; ++i)
            p.positions.push_back({CompatibleProjection::Position::FromInput, 0, i, '0', '1'});
        for (int i = 0; i < 4; ++i)
            p.positions.push_back({CompatibleProjection::Position::FromBit, 0, i, '0', '1'});
    }
    FamilyUnionInstance out = projection_to_family_union(p);
    const char* s1[] = {"abga0000abga0000", "abga0100abga0100", "abga1000abga1000",
                        "abga1100abga1100"};
    const char* s2[] = {"abga0000abga0000", "abga0001abga0001", "abga0010abga0010",
                        "abga0011abga0011"};
    bool ok = out.k() == 2 && out.families[0].size() == 4 && out.families[1].size() == 4;
    int total = 0;
    for (int i = 0; ok && i < 4; ++i) {
        ok = out.families[0][i].symbols() == s1[i] && out.families[1][i].symbols() == s2[i];
        total += 2;
    }
    report("1a projection example emits the two worked sets (8 strings)", ok,
           ok ? std::to_string(total) + " strings byte-exact" : "");
}

// --- criterion 1b: the formula chain examples ---------------------------------------

void criterion_1b() {
    BooleanFormula phi = phi_xyz();

    FamilyUnionInstance fam;
    fam.base = BaseKind::Bf;
    fam.tmpl = bf_template(phi);
    fam.families.push_back({InstantiationWord(fam.tmpl, encode_bf_word(phi, "000")),
                            InstantiationWord(fam.tmpl, encode_bf_word(phi, "001"))});
    fam.families.push_back({InstantiationWord(fam.tmpl, encode_bf_word(phi, "001"))});
    SubsetUnionInstance mid = family_to_subset_bf(fam);

    BooleanFormula phi6 = BooleanFormula::parse_prefix(phi.to_prefix(), 6);
    BooleanFormula expected_mid = BooleanFormula::band(
        phi6, BooleanFormula::band(
                  BooleanFormula::bor(BooleanFormula::var(3), BooleanFormula::var(4)),
                  BooleanFormula::var(5)));
    bool family_ok = mid.elements.size() == 3 &&
                     mid.elements[0].symbols() == encode_bf_word(expected_mid, "000100") &&
                     mid.elements[1].symbols() == encode_bf_word(expected_mid, "001010") &&
                     mid.elements[2].symbols() == encode_bf_word(expected_mid, "001001");
    report("1b family_to_subset_bf reproduces the worked tag set", family_ok);

    SubsetUnionInstance sub;
    sub.base = BaseKind::Bf;
    sub.tmpl = bf_template(phi);
    for (const char* a : {"000", "101", "010", "011"})
        sub.elements.emplace_back(sub.tmpl, encode_bf_word(phi, a));
    sub.k = 1;
    WeightedUnionInstance w = subset_to_weighted_bf(sub);
    BooleanFormula expected_w = BooleanFormula::band(
        BooleanFormula::band(
            BooleanFormula::var(1),
            BooleanFormula::implies(
                BooleanFormula::bor(BooleanFormula::var(2), BooleanFormula::var(3)),
                BooleanFormula::var(1))),
        BooleanFormula::bor(BooleanFormula::var(1), BooleanFormula::var(3)));
    auto [got, slots] = decode_bf_word(w.tmpl->symbols());
    bool weighted_ok = got == expected_w && slots == "????";
    auto s2 = all_weight_one_instantiations(w.tmpl);
    const char* tails[] = {"0001", "0010", "0100", "1000"};
    weighted_ok = weighted_ok && s2.size() == 4;
    for (int i = 0; weighted_ok && i < 4; ++i) {
        const std::string& word = s2[i].symbols();
        weighted_ok = word.substr(word.size() - 4) == tails[i];
    }
    report("1b subset_to_weighted_bf reproduces phi' and the weight-one set", weighted_ok);
}

// --- criterion 1c: the layered-reachability example ----------------------------------

void criterion_1c() {
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
    LcsInstance out = layeredreach_to_lcs_injective(g);
    auto str = [&](int j) {
        std::string s;
        for (int sym : out.strings[j]) s += out.alphabet[sym];
        return s;
    };
    bool ok = out.strings.size() == 4 && out.l == 2 && str(0) == "abcdefgihj" &&
              str(1) == "edcbajhigf" && str(2) == "abfgchdeij" && str(3) == "edjichbagf" &&
              lcs_injective_decide(out);
    report("1c layered-reach example yields the four worked strings, l = 2, decided yes", ok);
}

// --- criterion 1d: the two-layer pebble figure ----------------------------------------

void criterion_1d() {
    CellularAutomaton ca;
    ca.state_count = 2;
    ca.deterministic = true;
    ca.dag = true;
    ca.accepting = {1};
    ca.left.push_back({0, 0, 1});
    ca.right.push_back({0, 0, 1});
    ca.interior.push_back({0, 0, 0, 1});
    CellularInstance inst{ca, {0, 0, 0}, {1, 1, 1}};
    ThresholdPebbleGame game = dagca_to_tpg(inst, 2);

    const int main_size = 6, aux_size = 16;
    bool ok = game.graph.n() == 2 * main_size + aux_size;
    for (int i = 0; ok && i < main_size; ++i) ok = game.thresholds[i] == 1;
    for (int i = 0; ok && i < 4; ++i) ok = game.thresholds[main_size + i] == 2;
    for (int i = 4; ok && i < 12; ++i) ok = game.thresholds[main_size + i] == 3;
    for (int i = 12; ok && i < 16; ++i) ok = game.thresholds[main_size + i] == 2;
    for (int i = 0; ok && i < main_size; ++i)
        ok = game.thresholds[main_size + aux_size + i] == 1;
    report("1d two-state three-cell game has 16 auxiliary vertices with thresholds 2/3/2", ok);
}

// --- criterion 3: structural invariants -----------------------------------------------

void criterion_3() {
    bool dag_bounds = true;
    {
        Rng rng(301);
        for (int round = 0; round < 50 && dag_bounds; ++round) {
            CellularInstance inst = gen_ca(rng, rng.range(2, 4), rng.range(1, 3),
                                           rng.chance(50), true, 90);
            Budget b;
            try {
                run_ca(inst, inst.automaton.deterministic ? RunMode::Det : RunMode::Nondet, b);
            } catch (const std::logic_error&) {
                dag_bounds = false;
            }
        }
        for (int round = 0; round < 30 && dag_bounds; ++round) {
            MultiHeadAutomaton a = gen_mfa(rng, rng.range(2, 4), rng.range(1, 2),
                                           rng.range(1, 3), rng.chance(50), true);
            Budget b;
            try {
                run_mfa(a, b);
            } catch (const std::logic_error&) {
                dag_bounds = false;
            }
        }
    }
    report("3 dag automata halt within |Q| steps (asserted on every run)", dag_bounds);

    bool agen_bound = true;
    {
        Rng rng(303);
        for (int round = 0; round < 25 && agen_bound; ++round) {
            FamilyUnionInstance fam =
                gen_family_union_agen(rng, rng.range(2, 4), rng.range(1, 2), 2);
            try {
                family_to_subset_agen(fam);  // asserts count <= 1 + |U'|(k^2+1)
            } catch (const std::logic_error&) {
                agen_bound = false;
            }
        }
    }
    report("3 generator representative systems stay within 1 + |U'|(k^2+1) classes",
           agen_bound);

    bool thm9_shape = true;
    {
        Rng rng(305);
        for (int round = 0; round < 50 && thm9_shape; ++round) {
            Graph g = gen_layered_graph(rng, rng.range(2, 5), rng.range(1, 4), 55);
            LcsInstance out = layeredreach_to_lcs_injective(g);
            thm9_shape = out.strings.size() == 4 && out.injective();
        }
    }
    report("3 layered-reach outputs are p-sequence instances with exactly 4 strings",
           thm9_shape);

    bool lcs_shape = true;
    {
        Rng rng(307);
        for (int round = 0; round < 20 && lcs_shape; ++round) {
            int k = rng.range(1, 3);
            CellularInstance inst = gen_ca(rng, rng.range(2, 3), k, true, true, 100);
            int t = inst.automaton.state_count;
            SeqcaLcs out = nca_to_lcs_pipeline(inst, t);
            lcs_shape = static_cast<int>(out.lcs.strings.size()) == 4 * k &&
                        out.lcs.l == static_cast<long long>(t + k + 2) * k;
        }
    }
    report("3 sequential-automaton outputs have 4k strings and target horizon*k", lcs_shape);

    bool laws = true;
    {
        Rng rng(309);
        for (int round = 0; round < 1000 && laws; ++round) {
            int len = rng.range(1, 8);
            std::string pattern;
            for (int i = 0; i < len; ++i) pattern += rng.chance(60) ? '?' : 'a';
            auto t = std::make_shared<TemplateWord>("a", pattern);
            auto draw = [&] {
                std::string w = pattern;
                for (auto& c : w)
                    if (c == '?') c = rng.chance(50) ? '1' : '0';
                return InstantiationWord(t, w);
            };
            InstantiationWord x = draw(), y = draw(), z = draw();
            std::vector<InstantiationWord> xy{x, y}, yx{y, x}, xx{x, x};
            std::vector<InstantiationWord> xy_z{union_instantiations(xy), z};
            std::vector<InstantiationWord> yz{y, z};
            std::vector<InstantiationWord> x_yz{x, union_instantiations(yz)};
            laws = union_instantiations(xy) == union_instantiations(yx) &&
                   union_instantiations(xx) == x &&
                   union_instantiations(xy_z) == union_instantiations(x_yz);
        }
    }
    report("3 union algebra laws hold over 1000 random instantiation triples", laws);
}

// --- criterion 4: cross-oracle agreement ------------------------------------------------

void criterion_4() {
    bool lcs_agree = true;
    {
        Rng rng(401);
        for (int round = 0; round < 500 && lcs_agree; ++round) {
            LcsInstance inst =
                gen_lcs(rng, rng.range(1, 4), rng.range(2, 6), rng.range(1, 6), true);
            Budget b;
            Outcome full = lcs_decide(inst, b);
            lcs_agree = full != Outcome::BudgetExceeded &&
                        (full == Outcome::Yes) == lcs_injective_decide(inst);
        }
    }
    report("4 lcs_injective_decide = lcs_decide on 500 random injective instances",
           lcs_agree);

    bool confluent = true;
    int tested = 0;
    {
        Rng rng(403);
        while (tested < 200 && confluent) {
            // alternate between the two generator constructions' systems
            ReplacementSystem rules;
            int letters;
            if (tested % 2 == 0) {
                GeneratorInstance gi = gen_generator(rng, rng.range(2, 4), 3, 0, true);
                rules = agen_family_rules(gi, rng.range(1, 2));
                letters = static_cast<int>(rules.alphabet.size());
            } else {
                GeneratorInstance gi = gen_generator(rng, rng.range(2, 3), 3, 0, true);
                std::vector<std::vector<int>> selections;
                int n = rng.range(1, 3);
                for (int i = 0; i < n; ++i) {
                    std::vector<int> sel;
                    for (int c : gi.candidates)
                        if (rng.chance(50) && sel.size() < 2) sel.push_back(c);
                    selections.push_back(sel);
                }
                rules = agen_selector_rules(gi, selections);
                letters = static_cast<int>(rules.alphabet.size());
            }
            for (int w = 0; w < 5 && confluent; ++w, ++tested) {
                std::vector<int> word;
                int len = rng.range(1, 7);
                for (int i = 0; i < len; ++i) word.push_back(rng.below(letters));
                auto leftmost = rs_normalize(rules, word, 100000);
                for (int variant = 0; variant < 4 && confluent; ++variant) {
                    std::uint64_t salt = rng.engine();
                    auto shuffled = rs_normalize_with_order(
                        rules, word, 100000, [salt, v = 0](std::size_t n) mutable {
                            v = static_cast<int>((v * 6364136223846793005ull + salt) >> 33);
                            return static_cast<std::size_t>(v < 0 ? -v : v) % n;
                        });
                    confluent = shuffled == leftmost;
                }
            }
        }
    }
    report("4 rs_normalize reaches one normal form under any order (200 words)",
           confluent, std::to_string(tested) + " words tested");
}

}  // namespace

int main() {
    criterion_1a();
    criterion_1b();
    criterion_1c();
    criterion_1d();

    struct Suite {
        const char* label;
        const char* name;
        int cases;
    };
    const Suite suites[] = {
        {"2 bf family->subset->weighted chain", "bf_union_chain", 200},
        {"2 graph family->subset (reach)", "family_to_subset_graph_reach", 200},
        {"2 graph family->subset (dag-reach)", "family_to_subset_graph_dag-reach", 200},
        {"2 graph family->subset (cycle)", "family_to_subset_graph_cycle", 200},
        {"2 graph family->subset (undirected-reach)",
         "family_to_subset_graph_undirected-reach", 200},
        {"2 graph family->subset (tree)", "family_to_subset_graph_tree", 200},
        {"2 graph family->subset (forest)", "family_to_subset_graph_forest", 200},
        {"2 graph family->subset (undirected-cycle)",
         "family_to_subset_graph_undirected-cycle", 200},
        {"2 generator family->subset", "family_to_subset_agen", 100},
        {"2 generator subset->weighted (k+3)", "subset_to_weighted_agen", 100},
        {"2 bounded-run composition (det+nondet)", "dtsc_from_parameterized_run", 50},
        {"2 machine->cellular (deterministic)", "tm_to_ca", 50},
        {"2 machine->cellular (tagged nondeterministic)", "tm_to_nca", 50},
        {"2 clock layering", "ca_to_dag_ca", 50},
        {"2 dag game (max)", "dagca_to_tpg", 50},
        {"2 dag game (nondet, cap = cells)", "dagca_to_tpg_nondet", 50},
        {"2 cyclic game (max)", "ca_to_tpg_cyclic", 50},
        {"2 cyclic game (nondet)", "ca_to_tpg_cyclic_nondet", 50},
        {"2 layered-reach -> injective lcs", "layeredreach_to_lcs_injective", 200},
        {"2 sequentialization + lcs strings", "seqca_to_lcs", 100},
    };
    for (const Suite& s : suites) {
        std::string detail;
        bool ok = run_suite(s.name, s.cases, detail);
        report(s.label, ok, detail);
    }

    criterion_3();
    criterion_4();

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
