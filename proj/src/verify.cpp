#include "parared/verify.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "parared/io.hpp"
#include "parared/machine_reductions.hpp"
#include "parared/oracles.hpp"
#include "parared/union_reductions.hpp"

namespace parared {

bool fnv_word_oracle(const std::string& word, std::uint64_t salt) {
    std::uint64_t h = 1469598103934665603ull ^ salt;
    for (unsigned char c : word) {
        h ^= c;
        h *= 1099511628211ull;
    }
    // fold, then take a middle bit for balance
    h ^= h >> 32;
    return ((h >> 7) & 1) == 1;
}

namespace {

long long identity_bound(long long k) { return k; }

// --- transform helpers for the reduce CLI -----------------------------------------

template <typename T>
const T& expect(const ProblemInstance& inst, const char* what) {
    const T* p = std::get_if<T>(&inst);
    if (!p) throw PreconditionError(std::string("reduce: expected a ") + what + " instance");
    return *p;
}

long long derive_steps(const ReduceOptions& opts, int fallback) {
    return opts.steps > 0 ? opts.steps : fallback;
}

// --- suite helpers ------------------------------------------------------------------

Outcome union_family(const FamilyUnionInstance& inst, Budget& b) {
    return solve_union(inst, base_oracle(inst.base), b);
}
Outcome union_subset(const SubsetUnionInstance& inst, Budget& b) {
    return solve_union(inst, base_oracle(inst.base), b);
}
Outcome union_weighted(const WeightedUnionInstance& inst, Budget& b) {
    return solve_union(inst, base_oracle(inst.base), b);
}

CaseResult graph_union_case(Rng& rng, Budget& budget, BaseKind base) {
    FamilyUnionInstance fam = gen_family_union_graph(rng, base, rng.range(2, 4), rng.range(1, 3), 2);
    SubsetUnionInstance sub = family_to_subset_graph(fam);
    CaseResult r;
    r.kappa1 = fam.k();
    r.kappa2 = sub.k;
    r.source = union_family(fam, budget);
    r.target = union_subset(sub, budget);
    return r;
}

std::vector<ReductionDescriptor> build_registry() {
    std::vector<ReductionDescriptor> reg;

    reg.push_back({
        "identity", "bf", "bf", "k", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) { return inst; },
        [](Rng& rng, Budget&) {
            BfInstance inst;
            inst.formula = gen_formula(rng, 3, 8);
            for (int v = 0; v < 3; ++v) inst.assignment += rng.chance(50) ? '1' : '0';
            CaseResult r;
            bool ans = inst.formula.evaluate(inst.assignment);
            r.source = r.target = outcome_of(ans);
            return r;
        },
    });

    reg.push_back({
        "projection_to_family_union", "projection", "family-union", "f_x (block count)",
        identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return projection_to_family_union(expect<CompatibleProjection>(inst, "projection"));
        },
        [](Rng& rng, Budget& budget) {
            CompatibleProjection p = gen_projection(rng, rng.range(2, 4), rng.range(1, 2), 12);
            std::uint64_t salt = rng.engine();
            FamilyUnionInstance fam = projection_to_family_union(p);
            CaseResult r;
            r.kappa1 = p.blocks;
            r.kappa2 = fam.k();
            // source: brute force over all choice-bit strings
            int bits = p.blocks * p.block_width;
            bool any = false;
            for (int v = 0; v < (1 << bits); ++v) {
                std::string bstr;
                for (int i = bits - 1; i >= 0; --i) bstr += ((v >> i) & 1) ? '1' : '0';
                if (fnv_word_oracle(p.apply(bstr), salt)) { any = true; break; }
            }
            r.source = outcome_of(any);
            r.target = solve_union(
                fam, [salt](const std::string& w) { return fnv_word_oracle(w, salt); }, budget);
            return r;
        },
    });

    reg.push_back({
        "family_to_subset_bf", "family-union", "subset-union", "k", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return family_to_subset_bf(expect<FamilyUnionInstance>(inst, "family-union"));
        },
        [](Rng& rng, Budget& budget) {
            FamilyUnionInstance fam = gen_family_union_bf(rng, rng.range(1, 4), rng.range(1, 3), 3);
            SubsetUnionInstance sub = family_to_subset_bf(fam);
            CaseResult r;
            r.kappa1 = fam.k();
            r.kappa2 = sub.k;
            r.source = union_family(fam, budget);
            r.target = union_subset(sub, budget);
            return r;
        },
    });

    reg.push_back({
        "subset_to_weighted_bf", "subset-union", "weighted-union", "k", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return subset_to_weighted_bf(expect<SubsetUnionInstance>(inst, "subset-union"));
        },
        [](Rng& rng, Budget& budget) {
            SubsetUnionInstance sub =
                gen_subset_union_bf(rng, rng.range(1, 4), rng.range(1, 4), rng.range(1, 3));
            WeightedUnionInstance w = subset_to_weighted_bf(sub);
            CaseResult r;
            r.kappa1 = sub.k;
            r.kappa2 = w.k;
            r.source = union_subset(sub, budget);
            r.target = union_weighted(w, budget);
            return r;
        },
    });

    reg.push_back({
        "bf_union_chain", "family-union", "weighted-union", "k", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return subset_to_weighted_bf(
                family_to_subset_bf(expect<FamilyUnionInstance>(inst, "family-union")));
        },
        [](Rng& rng, Budget& budget) {
            FamilyUnionInstance fam = gen_family_union_bf(rng, rng.range(1, 4), rng.range(1, 3), 3);
            SubsetUnionInstance sub = family_to_subset_bf(fam);
            WeightedUnionInstance w = subset_to_weighted_bf(sub);
            CaseResult r;
            r.kappa1 = fam.k();
            r.kappa2 = w.k;
            r.source = union_family(fam, budget);
            Outcome mid = union_subset(sub, budget);
            r.target = union_weighted(w, budget);
            if (mid != r.target &&
                mid != Outcome::BudgetExceeded && r.target != Outcome::BudgetExceeded)
                r.note = "middle hop disagrees";
            if (mid == Outcome::BudgetExceeded) r.target = Outcome::BudgetExceeded;
            return r;
        },
    });

    const std::pair<const char*, BaseKind> graph_kinds[] = {
        {"reach", BaseKind::Reach},
        {"dag-reach", BaseKind::DagReach},
        {"cycle", BaseKind::Cycle},
        {"undirected-reach", BaseKind::UndirectedReach},
        {"tree", BaseKind::Tree},
        {"forest", BaseKind::Forest},
        {"undirected-cycle", BaseKind::UndirectedCycle},
    };
    for (auto [suffix, base] : graph_kinds) {
        reg.push_back({
            std::string("family_to_subset_graph_") + suffix, "family-union", "subset-union", "k",
            identity_bound,
            [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
                return family_to_subset_graph(expect<FamilyUnionInstance>(inst, "family-union"));
            },
            [base](Rng& rng, Budget& budget) { return graph_union_case(rng, budget, base); },
        });
    }
    reg.push_back({
        "family_to_subset_graph", "family-union", "subset-union", "k", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return family_to_subset_graph(expect<FamilyUnionInstance>(inst, "family-union"));
        },
        nullptr,  // per-kind suites above
    });

    reg.push_back({
        "family_to_subset_agen", "family-union", "subset-union", "k", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return family_to_subset_agen(expect<FamilyUnionInstance>(inst, "family-union"));
        },
        [](Rng& rng, Budget& budget) {
            FamilyUnionInstance fam =
                gen_family_union_agen(rng, rng.range(2, 4), rng.range(1, 2), 2);
            SubsetUnionInstance sub = family_to_subset_agen(fam);
            CaseResult r;
            r.kappa1 = fam.k();
            r.kappa2 = sub.k;
            r.source = union_family(fam, budget);
            r.target = union_subset(sub, budget);
            return r;
        },
    });

    reg.push_back({
        "subset_to_weighted_agen", "subset-union", "weighted-union", "k+3",
        [](long long k) { return k + 3; },
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return subset_to_weighted_agen(expect<SubsetUnionInstance>(inst, "subset-union"));
        },
        [](Rng& rng, Budget& budget) {
            SubsetUnionInstance sub =
                gen_subset_union_agen(rng, rng.range(2, 3), rng.range(1, 3), rng.range(1, 2));
            WeightedUnionInstance w = subset_to_weighted_agen(sub);
            CaseResult r;
            r.kappa1 = sub.k;
            r.kappa2 = w.k;
            if (w.k != sub.k + 3) r.note = "k' != k+3";
            r.source = union_subset(sub, budget);
            r.target = union_weighted(w, budget);
            return r;
        },
    });

    reg.push_back({
        "tm_hardwire_input", "tm2", "dtsc", "s (declared)", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            BoundedTMInstance out;
            out.machine = tm_hardwire_input(expect<TwoTapeTM>(inst, "tm2"));
            out.steps = derive_steps(opts, 100);
            out.cells = opts.cells > 0 ? opts.cells : 4;
            out.validate();
            return out;
        },
        [](Rng& rng, Budget& budget) {
            TwoTapeTM m = gen_tm2(rng, rng.range(2, 4), rng.range(2, 3), rng.chance(50),
                                  rng.range(0, 3));
            long long t = rng.range(0, 25);
            int s = rng.range(1, 4);
            CaseResult r;
            r.kappa1 = s;
            r.kappa2 = s;
            r.source = run_tm2_bounded(m, t, s, budget);
            BoundedTMInstance out{tm_hardwire_input(m), t, s};
            r.target = run_tm_bounded(out, budget);
            return r;
        },
    });

    reg.push_back({
        "tm_space_compress", "dtsc", "dtsc", "ceil(s/b) <= s", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            const auto& b = expect<BoundedTMInstance>(inst, "dtsc/ntsc");
            BoundedTMInstance out;
            out.machine = tm_space_compress(b.machine, opts.block);
            out.steps = b.steps;
            out.cells = (b.cells + opts.block - 1) / opts.block;
            out.validate();
            return out;
        },
        [](Rng& rng, Budget& budget) {
            int block = rng.range(1, 3);
            int blocks_used = rng.range(1, 2);
            int s = block * blocks_used;  // multiple of the block size
            SingleTapeTM m = gen_tm(rng, rng.range(2, 4), rng.range(2, 3), rng.chance(60));
            long long t = rng.range(0, 25);
            CaseResult r;
            r.kappa1 = s;
            r.kappa2 = blocks_used;
            r.source = run_tm_bounded({m, t, s}, budget);
            r.target = run_tm_bounded({tm_space_compress(m, block), t, blocks_used}, budget);
            return r;
        },
    });

    reg.push_back({
        "dtsc_from_parameterized_run", "tm2", "dtsc", "ceil(s/b) <= s", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            return dtsc_from_parameterized_run(expect<TwoTapeTM>(inst, "tm2"),
                                               derive_steps(opts, 100),
                                               opts.cells > 0 ? opts.cells : 4, opts.block);
        },
        [](Rng& rng, Budget& budget) {
            bool det = rng.chance(50);
            TwoTapeTM m = gen_tm2(rng, rng.range(2, 4), rng.range(2, 3), det, rng.range(0, 3));
            int block = rng.range(1, 3);
            int s = block * rng.range(1, 6 / block);  // s <= 6, multiple of block
            long long t = rng.range(0, 30);
            CaseResult r;
            r.kappa1 = s;
            BoundedTMInstance out = dtsc_from_parameterized_run(m, t, s, block);
            r.kappa2 = out.cells;
            r.source = run_tm2_bounded(m, t, s, budget);
            r.target = run_tm_bounded(out, budget);
            return r;
        },
    });

    reg.push_back({
        "tm_to_ca", "dtsc", "ca", "s (cells)", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            const auto& b = expect<BoundedTMInstance>(inst, "dtsc");
            return tm_to_ca(b.machine, b.cells);
        },
        [](Rng& rng, Budget& budget) {
            SingleTapeTM m = gen_tm(rng, rng.range(2, 4), rng.range(2, 3), true);
            int s = rng.range(1, 4);
            // enough steps to cover the whole configuration space
            long long horizon = m.state_count * s + 10;
            for (int i = 0; i < s; ++i) horizon *= static_cast<long long>(m.alphabet.size());
            CaseResult r;
            r.kappa1 = s;
            r.kappa2 = s;
            r.source = run_tm_bounded({m, horizon, s}, budget);
            r.target = run_ca(tm_to_ca(m, s), RunMode::Det, budget);
            return r;
        },
    });

    reg.push_back({
        "tm_to_nca", "ntsc", "ca", "s (cells)", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            const auto& b = expect<BoundedTMInstance>(inst, "ntsc");
            return tm_to_nca(b.machine, b.cells);
        },
        [](Rng& rng, Budget& budget) {
            SingleTapeTM m = gen_tm(rng, rng.range(2, 3), 2, false);
            int s = rng.range(1, 3);
            long long horizon = m.state_count * s + 10;
            for (int i = 0; i < s; ++i) horizon *= static_cast<long long>(m.alphabet.size());
            CaseResult r;
            r.kappa1 = s;
            r.kappa2 = s;
            r.source = run_tm_bounded({m, horizon, s}, budget);
            r.target = run_ca(tm_to_nca(m, s), RunMode::Nondet, budget);
            return r;
        },
    });

    reg.push_back({
        "ca_to_dag_ca", "ca", "ca", "cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            const auto& c = expect<CellularInstance>(inst, "ca");
            return ca_to_dag_ca(c, static_cast<int>(derive_steps(opts, c.automaton.state_count)));
        },
        [](Rng& rng, Budget& budget) {
            bool det = rng.chance(60);
            CellularInstance inst =
                gen_ca(rng, rng.range(2, 3), rng.range(1, 3), det, false, 80);
            int t = rng.range(1, 4);
            RunMode mode = det ? RunMode::Det : RunMode::Nondet;
            CaseResult r;
            r.kappa1 = inst.cells();
            CellularInstance out = ca_to_dag_ca(inst, t);
            r.kappa2 = out.cells();
            r.source = run_ca_bounded(inst, mode, t, budget);
            r.target = run_ca(out, mode, budget);
            return r;
        },
    });

    reg.push_back({
        "mfa_to_dag_mfa", "mfa", "mfa", "heads", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            const auto& a = expect<MultiHeadAutomaton>(inst, "mfa");
            return mfa_to_dag_mfa(a, static_cast<int>(derive_steps(opts, a.state_count)));
        },
        [](Rng& rng, Budget& budget) {
            MultiHeadAutomaton a = gen_mfa(rng, rng.range(2, 4), rng.range(1, 2),
                                           rng.range(1, 4), rng.chance(60), true);
            CaseResult r;
            r.kappa1 = a.heads;
            MultiHeadAutomaton out = mfa_to_dag_mfa(a, a.state_count);
            r.kappa2 = out.heads;
            r.source = run_mfa(a, budget);
            r.target = run_mfa(out, budget);
            return r;
        },
    });

    reg.push_back({
        "ca_unique_accept_dag", "ca", "ca", "cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            const auto& c = expect<CellularInstance>(inst, "ca");
            return ca_normalize_unique_accept_dag(
                c, static_cast<int>(derive_steps(opts, c.automaton.state_count)));
        },
        [](Rng& rng, Budget& budget) {
            // total below the top state, so a stalled cell implies an
            // accepting (or hopeless) configuration and the freeze rules
            // preserve the answer
            bool det = rng.chance(60);
            CellularInstance inst = gen_ca(rng, rng.range(2, 3), rng.range(1, 2), det, true, 100);
            if (rng.chance(30)) inst.automaton.accepting.clear();
            int t = inst.automaton.state_count;
            RunMode mode = det ? RunMode::Det : RunMode::Nondet;
            CaseResult r;
            r.kappa1 = inst.cells();
            CellularInstance out = ca_normalize_unique_accept_dag(inst, t);
            r.kappa2 = out.cells();
            r.source = run_ca(inst, mode, budget);
            r.target = run_ca(out, mode, budget);
            return r;
        },
    });

    reg.push_back({
        "dagca_to_tpg", "ca", "tpg", "pebbles = cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            const auto& c = expect<CellularInstance>(inst, "ca");
            int layers = opts.layers > 0 ? opts.layers : c.automaton.state_count;
            return dagca_to_tpg(c, layers);
        },
        [](Rng& rng, Budget& budget) {
            // the reduction's input is the normalized instance (the one
            // satisfying the unique-accepting-configuration precondition)
            CellularInstance inst = gen_ca(rng, rng.range(2, 3), rng.range(1, 2), true, true, 80);
            int t = inst.automaton.state_count;
            CellularInstance norm = ca_normalize_unique_accept_dag(inst, t);
            ThresholdPebbleGame game = dagca_to_tpg(norm, t + inst.cells() + 1);
            CaseResult r;
            r.kappa1 = norm.cells();
            r.kappa2 = game.cap;
            r.source = run_ca(norm, RunMode::Det, budget);
            r.target = run_tpg(game, TpgMode::Max, budget);
            return r;
        },
    });

    reg.push_back({
        "dagca_to_tpg_nondet", "ca", "tpg", "pebbles = cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            const auto& c = expect<CellularInstance>(inst, "ca");
            int layers = opts.layers > 0 ? opts.layers : c.automaton.state_count;
            return dagca_to_tpg(c, layers);
        },
        [](Rng& rng, Budget& budget) {
            CellularInstance inst = gen_ca(rng, rng.range(2, 3), rng.range(1, 2), false, true, 70);
            int t = inst.automaton.state_count;
            CellularInstance norm = ca_normalize_unique_accept_dag(inst, t);
            ThresholdPebbleGame game = dagca_to_tpg(norm, t + inst.cells() + 1);
            CaseResult r;
            r.kappa1 = norm.cells();
            r.kappa2 = game.cap;
            r.source = run_ca(norm, RunMode::Nondet, budget);
            r.target = run_tpg(game, TpgMode::Nondet, budget);
            return r;
        },
    });

    reg.push_back({
        "ca_unique_accept_cyclic", "ca", "ca", "cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return ca_normalize_unique_accept_cyclic(expect<CellularInstance>(inst, "ca"));
        },
        [](Rng& rng, Budget& budget) {
            // total automata: the wave to the all-sink configuration can
            // never be blocked by a stalled cell
            bool det = rng.chance(60);
            CellularInstance inst = gen_ca(rng, rng.range(2, 3), rng.range(1, 3), det, false, 100);
            if (rng.chance(30)) inst.automaton.accepting.clear();
            RunMode mode = det ? RunMode::Det : RunMode::Nondet;
            CaseResult r;
            r.kappa1 = inst.cells();
            CellularInstance out = ca_normalize_unique_accept_cyclic(inst);
            r.kappa2 = out.cells();
            r.source = run_ca(inst, mode, budget);
            r.target = run_ca(out, mode, budget);
            return r;
        },
    });

    reg.push_back({
        "ca_to_tpg_cyclic", "ca", "tpg", "pebbles = cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return ca_to_tpg_cyclic(expect<CellularInstance>(inst, "ca"));
        },
        [](Rng& rng, Budget& budget) {
            CellularInstance inst = gen_ca(rng, rng.range(2, 3), rng.range(1, 3), true, false, 85);
            CellularInstance norm = ca_normalize_unique_accept_cyclic(inst);
            ThresholdPebbleGame game = ca_to_tpg_cyclic(norm);
            CaseResult r;
            r.kappa1 = norm.cells();
            r.kappa2 = game.cap;
            r.source = run_ca(norm, RunMode::Det, budget);
            r.target = run_tpg(game, TpgMode::Max, budget);
            return r;
        },
    });

    reg.push_back({
        "ca_to_tpg_cyclic_nondet", "ca", "tpg", "pebbles = cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return ca_to_tpg_cyclic(expect<CellularInstance>(inst, "ca"));
        },
        [](Rng& rng, Budget& budget) {
            CellularInstance inst = gen_ca(rng, rng.range(2, 3), rng.range(1, 2), false, false, 75);
            CellularInstance norm = ca_normalize_unique_accept_cyclic(inst);
            ThresholdPebbleGame game = ca_to_tpg_cyclic(norm);
            CaseResult r;
            r.kappa1 = norm.cells();
            r.kappa2 = game.cap;
            r.source = run_ca(norm, RunMode::Nondet, budget);
            r.target = run_tpg(game, TpgMode::Nondet, budget);
            return r;
        },
    });

    reg.push_back({
        "layeredreach_to_lcs_injective", "graph", "lcs", "4 strings",
        [](long long) { return 4ll; },
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return layeredreach_to_lcs_injective(expect<Graph>(inst, "graph"));
        },
        [](Rng& rng, Budget&) {
            Graph g = gen_layered_graph(rng, rng.range(2, 5), rng.range(1, 4), rng.range(30, 70));
            LcsInstance out = layeredreach_to_lcs_injective(g);
            CaseResult r;
            r.kappa1 = 0;
            r.kappa2 = static_cast<long long>(out.strings.size());
            r.source = outcome_of(graph_property(GraphPropertyKind::LayeredReach, g));
            r.target = outcome_of(lcs_injective_decide(out));
            return r;
        },
    });

    reg.push_back({
        "nca_to_sequential", "ca", "seqca", "cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions&) -> ProblemInstance {
            return nca_to_sequential(expect<CellularInstance>(inst, "ca"));
        },
        nullptr,  // covered by the trace-projection unit test and the lcs pipeline suite
    });

    reg.push_back({
        "seqca_pad_to_horizon", "seqca", "seqca", "cells", identity_bound,
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            const auto& c = expect<SequentialCellularInstance>(inst, "seqca");
            return seqca_pad_to_horizon(c, static_cast<int>(derive_steps(
                                               opts, c.automaton.state_count)))
                .instance;
        },
        nullptr,
    });

    reg.push_back({
        "seqca_to_lcs", "ca", "lcs", "4k strings", [](long long k) { return 4 * k; },
        [](const ProblemInstance& inst, const ReduceOptions& opts) -> ProblemInstance {
            if (const auto* seq = std::get_if<SequentialCellularInstance>(&inst))
                return seqca_to_lcs(*seq,
                                    static_cast<int>(derive_steps(opts, seq->automaton.state_count)))
                    .lcs;
            const auto& c = expect<CellularInstance>(inst, "ca or seqca");
            return nca_to_lcs_pipeline(c, static_cast<int>(derive_steps(
                                              opts, c.automaton.state_count)))
                .lcs;
        },
        [](Rng& rng, Budget& budget) {
            // total below the top state: a stalled cell then implies the
            // configuration already holds the (only) accepting state, so the
            // stall-pads of the horizon normalization preserve the answer
            int k = rng.chance(45) ? 1 : rng.chance(70) ? 2 : 3;
            int states = rng.range(2, 3);
            bool det = rng.chance(70);
            CellularInstance inst = gen_ca(rng, states, k, det, true, 100);
            if (rng.chance(30)) inst.automaton.accepting.clear();
            int t = inst.automaton.state_count;
            CaseResult r;
            r.kappa1 = inst.cells();
            SeqcaLcs out = nca_to_lcs_pipeline(inst, t);
            r.kappa2 = static_cast<long long>(out.lcs.strings.size());
            r.source = run_ca(inst, RunMode::Nondet, budget);
            r.target = lcs_decide(out.lcs, budget);
            return r;
        },
    });

    return reg;
}

}  // namespace

const std::vector<ReductionDescriptor>& reduction_registry() {
    static const std::vector<ReductionDescriptor> reg = build_registry();
    return reg;
}

const ReductionDescriptor* find_reduction(const std::string& name) {
    for (const auto& d : reduction_registry())
        if (d.name == name) return &d;
    return nullptr;
}

std::vector<VerificationReport> verify_reduction(const ReductionDescriptor& desc, int cases,
                                                 std::uint64_t base_seed,
                                                 std::uint64_t budget_nodes) {
    if (!desc.verifiable())
        throw PreconditionError("reduction " + desc.name + " has no verification suite");
    std::vector<VerificationReport> reports;
    for (int i = 0; i < cases; ++i) {
        VerificationReport rep;
        rep.case_id = i;
        rep.seed = base_seed * 1000003ull + static_cast<std::uint64_t>(i);
        Rng rng(rep.seed);
        Budget budget(budget_nodes);
        auto t0 = std::chrono::steady_clock::now();
        try {
            CaseResult res = desc.verify_case(rng, budget);
            rep.source = res.source;
            rep.target = res.target;
            rep.kappa1 = res.kappa1;
            rep.kappa2 = res.kappa2;
            rep.g_kappa1 = desc.bound(res.kappa1);
            rep.note = res.note;
            if (res.source == Outcome::BudgetExceeded || res.target == Outcome::BudgetExceeded) {
                rep.skipped = true;
            } else {
                rep.agreement = res.source == res.target && rep.kappa2 <= rep.g_kappa1 &&
                                res.note.empty();
            }
        } catch (const ConstructionBudgetExceeded& e) {
            rep.skipped = true;
            rep.note = e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        reports.push_back(std::move(rep));
    }
    return reports;
}

VerifySummary summarize(const std::vector<VerificationReport>& reports) {
    VerifySummary s;
    s.cases = static_cast<int>(reports.size());
    for (const auto& r : reports) {
        if (r.skipped) ++s.skipped;
        else if (r.agreement) ++s.agreed;
        else ++s.disagreed;
    }
    return s;
}

std::string reports_to_jsonl(const std::string& reduction,
                             const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        nlohmann::json j{
            {"reduction", reduction},
            {"case", r.case_id},
            {"seed", r.seed},
            {"source", to_string(r.source)},
            {"target", to_string(r.target)},
            {"kappa1", r.kappa1},
            {"kappa2", r.kappa2},
            {"g_kappa1", r.g_kappa1},
            {"agreement", r.agreement},
            {"skipped", r.skipped},
            {"wall_ms", r.wall_ms},
        };
        if (!r.note.empty()) j["note"] = r.note;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string summary_table(const std::string& reduction,
                          const std::vector<VerificationReport>& reports) {
    VerifySummary s = summarize(reports);
    double total_ms = 0;
    for (const auto& r : reports) total_ms += r.wall_ms;
    std::ostringstream out;
    out << "reduction            cases  agreed  skipped  disagreed  wall_ms\n";
    out << reduction;
    for (std::size_t i = reduction.size(); i < 21; ++i) out << ' ';
    out << s.cases << "      " << s.agreed << "      " << s.skipped << "        " << s.disagreed
        << "         " << static_cast<long long>(total_ms) << "\n";
    return out.str();
}

}  // namespace parared
