#include "parared/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "parared/io.hpp"
#include "parared/machine_reductions.hpp"
#include "parared/oracles.hpp"
#include "parared/verify.hpp"

namespace parared {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

int exit_of(Outcome o) {
    std::cout << to_string(o) << "\n";
    switch (o) {
        case Outcome::Yes: return kExitYes;
        case Outcome::No: return kExitNo;
        case Outcome::BudgetExceeded: return kExitBudget;
    }
    return kExitUsage;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("PARARED_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

int do_solve(const std::string& kind, const std::string& file, const std::string& mode,
             std::uint64_t budget_nodes) {
    ProblemInstance inst = load_instance_file(file);
    Budget budget(budget_nodes);

    if (kind == "bf") {
        const auto& b = std::get<BfInstance>(inst);
        if (b.assignment.empty()) throw PreconditionError("bf instance has no assignment");
        return exit_of(outcome_of(eval_bf(b.formula, b.assignment)));
    }
    if (kind == "dtsc" || kind == "ntsc")
        return exit_of(run_tm_bounded(std::get<BoundedTMInstance>(inst), budget));
    if (kind == "mfa") return exit_of(run_mfa(std::get<MultiHeadAutomaton>(inst), budget));
    if (kind == "ca") {
        const auto& c = std::get<CellularInstance>(inst);
        RunMode m = mode.empty() ? (c.automaton.deterministic ? RunMode::Det : RunMode::Nondet)
                                 : (mode == "det" ? RunMode::Det : RunMode::Nondet);
        return exit_of(run_ca(c, m, budget));
    }
    if (kind == "seqca") {
        const auto& c = std::get<SequentialCellularInstance>(inst);
        RunMode m = mode.empty() ? (c.automaton.deterministic ? RunMode::Det : RunMode::Nondet)
                                 : (mode == "det" ? RunMode::Det : RunMode::Nondet);
        return exit_of(run_seqca(c, m, budget));
    }
    if (kind == "tpg") {
        TpgMode m = mode == "nondet" ? TpgMode::Nondet : TpgMode::Max;
        return exit_of(run_tpg(std::get<ThresholdPebbleGame>(inst), m, budget));
    }
    if (kind == "lcs") return exit_of(lcs_decide(std::get<LcsInstance>(inst), budget));
    if (kind == "lcs-injective")
        return exit_of(outcome_of(lcs_injective_decide(std::get<LcsInstance>(inst))));
    if (kind == "gen" || kind == "agen") {
        const auto& g = std::get<GeneratorInstance>(inst);
        if (kind == "agen" && !g.associative)
            throw PreconditionError("agen requires the associative flag");
        return exit_of(agen_decide(g, budget));
    }
    if (kind == "union" || kind == "family-union" || kind == "subset-union" ||
        kind == "weighted-union") {
        if (const auto* f = std::get_if<FamilyUnionInstance>(&inst))
            return exit_of(solve_union(*f, base_oracle(f->base), budget));
        if (const auto* s = std::get_if<SubsetUnionInstance>(&inst))
            return exit_of(solve_union(*s, base_oracle(s->base), budget));
        if (const auto* w = std::get_if<WeightedUnionInstance>(&inst))
            return exit_of(solve_union(*w, base_oracle(w->base), budget));
        throw PreconditionError("file does not hold a union instance");
    }
    // graph property kinds
    GraphPropertyKind prop = graph_property_from_string(kind);
    return exit_of(outcome_of(graph_property(prop, std::get<Graph>(inst))));
}

void set_if(std::optional<int>& slot, int v) {
    if (v >= 0) slot = v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"parared: union problems, reference solvers and verified reductions"};
    app.require_subcommand(0, 1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded pseudo-random instance");
    std::string gen_kind, gen_out;
    std::uint64_t gen_seed = 1;
    int g_n = -1, g_k = -1, g_states = -1, g_cells = -1, g_heads = -1, g_strings = -1,
        g_vars = -1, g_layers = -1, g_width = -1, g_length = -1, g_alpha = -1, g_det = -1;
    long long g_steps = -1;
    gen->add_option("kind", gen_kind, "instance kind (see docs/formats.md)")->required();
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out", gen_out, "output file (stdout when omitted)");
    gen->add_option("--n", g_n);
    gen->add_option("--k", g_k);
    gen->add_option("--states", g_states);
    gen->add_option("--cells", g_cells);
    gen->add_option("--heads", g_heads);
    gen->add_option("--strings", g_strings);
    gen->add_option("--vars", g_vars);
    gen->add_option("--layers", g_layers);
    gen->add_option("--width", g_width);
    gen->add_option("--length", g_length);
    gen->add_option("--alphabet-size", g_alpha);
    gen->add_option("--steps", g_steps);
    gen->add_option("--deterministic", g_det);

    // solve
    auto* solve = app.add_subcommand("solve", "decide an instance with the reference oracle");
    std::string solve_kind, solve_file, solve_mode;
    std::uint64_t solve_budget = default_budget();
    solve->add_option("kind", solve_kind)->required();
    solve->add_option("file", solve_file)->required();
    solve->add_option("--mode", solve_mode, "det|nondet|max");
    solve->add_option("--budget", solve_budget, "node budget");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "apply a reduction (or a+b+c pipeline)");
    std::string red_name, red_in, red_out;
    bool red_list = false;
    ReduceOptions red_opts;
    reduce->add_option("name", red_name);
    reduce->add_option("in", red_in);
    reduce->add_option("out", red_out);
    reduce->add_flag("--list", red_list, "list registered reductions");
    reduce->add_option("--block", red_opts.block, "block size for tm_space_compress");
    reduce->add_option("--steps", red_opts.steps, "time horizon for layering/padding");
    reduce->add_option("--layers", red_opts.layers, "main layer count for dagca_to_tpg");
    reduce->add_option("--cells", red_opts.cells, "space bound for tm_hardwire_input");

    // verify
    auto* verify = app.add_subcommand("verify", "run a seeded oracle round-trip suite");
    std::string ver_name, ver_out;
    int ver_cases = 50;
    std::uint64_t ver_seed = 1, ver_budget = default_budget();
    verify->add_option("--reduction", ver_name)->required();
    verify->add_option("--cases", ver_cases);
    verify->add_option("--seed", ver_seed);
    verify->add_option("--budget", ver_budget);
    verify->add_option("--out", ver_out, "report file (default verify-<name>.jsonl)");

    // normalize
    auto* normalize = app.add_subcommand("normalize", "normalize a word with a rewrite system");
    std::string norm_file;
    std::vector<std::string> norm_word;
    long long norm_budget = 100000;
    normalize->add_option("file", norm_file)->required();
    normalize->add_option("word", norm_word, "word tokens");
    normalize->add_option("--budget", norm_budget, "rewrite step budget");

    std::vector<const char*> argv;
    argv.push_back("parared");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            GenProfile profile;
            set_if(profile.n, g_n);
            set_if(profile.k, g_k);
            set_if(profile.states, g_states);
            set_if(profile.cells, g_cells);
            set_if(profile.heads, g_heads);
            set_if(profile.strings, g_strings);
            set_if(profile.vars, g_vars);
            set_if(profile.layers, g_layers);
            set_if(profile.width, g_width);
            set_if(profile.length, g_length);
            set_if(profile.alphabet, g_alpha);
            set_if(profile.deterministic, g_det);
            if (g_steps >= 0) profile.steps = g_steps;
            ProblemInstance inst = gen_instance(gen_kind, profile, gen_seed);
            std::string text = serialize_instance(inst);
            if (gen_out.empty()) std::cout << text;
            else {
                std::ofstream out(gen_out);
                if (!out) throw ParseError("cannot write " + gen_out);
                out << text;
            }
            return kExitYes;
        }
        if (solve->parsed()) return do_solve(solve_kind, solve_file, solve_mode, solve_budget);
        if (reduce->parsed()) {
            if (red_list) {
                for (const auto& d : reduction_registry())
                    std::cout << d.name << ": " << d.source_kind << " -> " << d.target_kind
                              << " (bound " << d.bound_description << ")"
                              << (d.verifiable() ? "" : " [transform only]") << "\n";
                return kExitYes;
            }
            if (red_name.empty() || red_in.empty() || red_out.empty()) {
                std::cerr << "reduce needs <name> <in> <out>\n";
                return kExitUsage;
            }
            // pipelines: a+b+c
            std::vector<std::string> names;
            std::size_t pos = 0;
            while (pos <= red_name.size()) {
                std::size_t plus = red_name.find('+', pos);
                if (plus == std::string::npos) plus = red_name.size();
                names.push_back(red_name.substr(pos, plus - pos));
                pos = plus + 1;
            }
            ProblemInstance inst = load_instance_file(red_in);
            for (const auto& name : names) {
                const ReductionDescriptor* desc = find_reduction(name);
                if (!desc) {
                    std::cerr << "unknown reduction: " << name << "\n";
                    return kExitUsage;
                }
                inst = desc->transform(inst, red_opts);
            }
            save_instance_file(red_out, inst);
            return kExitYes;
        }
        if (verify->parsed()) {
            const ReductionDescriptor* desc = find_reduction(ver_name);
            if (!desc || !desc->verifiable()) {
                std::cerr << "unknown or transform-only reduction: " << ver_name << "\n";
                return kExitUsage;
            }
            auto reports = verify_reduction(*desc, ver_cases, ver_seed, ver_budget);
            std::string path = ver_out.empty() ? "verify-" + ver_name + ".jsonl" : ver_out;
            std::ofstream out(path);
            if (!out) throw ParseError("cannot write " + path);
            out << reports_to_jsonl(ver_name, reports);
            std::cout << summary_table(ver_name, reports);
            return summarize(reports).all_ok() ? kExitYes : kExitNo;
        }
        if (normalize->parsed()) {
            ProblemInstance inst = load_instance_file(norm_file);
            const auto& rs = std::get<ReplacementSystem>(inst);
            std::vector<int> word;
            for (const auto& tok : norm_word) {
                int t = rs.token(tok);
                if (t < 0) throw PreconditionError("unknown token " + tok);
                word.push_back(t);
            }
            try {
                std::vector<int> nf = rs_normalize(rs, std::move(word), norm_budget);
                std::cout << rs.render(nf) << "\n";
                return kExitYes;
            } catch (const NonterminationSuspected&) {
                std::cout << "budget-exceeded\n";
                return kExitBudget;
            }
        }
        std::cerr << app.help();
        return kExitUsage;
    } catch (const ConstructionBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        std::cout << "budget-exceeded\n";
        return kExitBudget;
    } catch (const std::bad_variant_access&) {
        std::cerr << "instance kind does not match the requested operation\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace parared
