#include "parared/union_reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parared/oracles.hpp"

namespace parared {

// --- Theorem: projection -> family union -------------------------------------

FamilyUnionInstance projection_to_family_union(const CompatibleProjection& p) {
    p.validate();
    if (p.block_width > 20) throw PreconditionError("projection: block width too large");
    auto tmpl = std::make_shared<TemplateWord>(p.template_word());

    FamilyUnionInstance out;
    out.base = BaseKind::Word;
    out.tmpl = tmpl;

    const int w = p.block_width;
    std::string base = tmpl->symbols();
    for (int block = 0; block < p.blocks; ++block) {
        std::vector<InstantiationWord> set;
        for (int val = 0; val < (1 << w); ++val) {
            std::string word = base;
            for (std::size_t r = 0; r < p.positions.size(); ++r) {
                const auto& pos = p.positions[r];
                if (pos.kind != CompatibleProjection::Position::FromBit) continue;
                int b = pos.index / w;
                if (b != block) {
                    word[r] = '0';
                } else {
                    int offset = pos.index % w;  // offset 0 = most significant bit
                    int bit = (val >> (w - 1 - offset)) & 1;
                    word[r] = bit ? pos.when1 : pos.when0;
                }
            }
            set.emplace_back(tmpl, std::move(word));
        }
        out.families.push_back(std::move(set));
    }
    if (out.k() != p.blocks) throw std::logic_error("projection reduction: parameter drift");
    return out;
}

// --- Theorem: bf chain ---------------------------------------------------------

SubsetUnionInstance family_to_subset_bf(const FamilyUnionInstance& inst) {
    inst.validate();
    if (inst.base != BaseKind::Bf) throw PreconditionError("family_to_subset_bf: base must be bf");
    auto [phi, tmpl_assignment] = decode_bf_word(inst.tmpl->symbols());
    const int m = phi.variable_count();

    int total_tags = 0;
    for (const auto& fam : inst.families) total_tags += static_cast<int>(fam.size());

    // psi = /\_i \/_j v_ij with tags numbered family by family after the
    // original variables
    std::vector<BooleanFormula> conjuncts;
    int tag = m;
    for (const auto& fam : inst.families) {
        std::vector<BooleanFormula> alts;
        for (std::size_t j = 0; j < fam.size(); ++j) alts.push_back(BooleanFormula::var(tag++));
        conjuncts.push_back(BooleanFormula::bor_all(std::move(alts)));
    }
    BooleanFormula phi_ext =
        BooleanFormula::parse_prefix(phi.to_prefix(), m + total_tags);
    BooleanFormula phi2 =
        BooleanFormula::band(phi_ext, BooleanFormula::band_all(std::move(conjuncts)));

    SubsetUnionInstance out;
    out.base = BaseKind::Bf;
    out.tmpl = bf_template(phi2);
    out.k = inst.k();
    int offset = 0;
    for (const auto& fam : inst.families) {
        for (const auto& member : fam) {
            std::string a = member.symbols().substr(member.symbols().size() - m);
            std::string tags(total_tags, '0');
            tags[offset] = '1';
            out.elements.emplace_back(out.tmpl, encode_bf_word(phi2, a + tags));
            ++offset;
        }
    }
    if (out.k != inst.k()) throw std::logic_error("family_to_subset_bf: parameter drift");
    return out;
}

WeightedUnionInstance subset_to_weighted_bf(const SubsetUnionInstance& inst) {
    inst.validate();
    if (inst.base != BaseKind::Bf)
        throw PreconditionError("subset_to_weighted_bf: base must be bf");
    auto [phi, tmpl_assignment] = decode_bf_word(inst.tmpl->symbols());
    const int m = phi.variable_count();
    const int n = static_cast<int>(inst.elements.size());

    // selector variables of the elements setting x, as 1-based indices
    std::vector<std::vector<int>> setters(m);
    for (int i = 0; i < n; ++i) {
        const std::string& w = inst.elements[i].symbols();
        std::string a = w.substr(w.size() - m);
        for (int x = 0; x < m; ++x)
            if (a[x] == '1') setters[x].push_back(i);
    }
    BooleanFormula phi2 = phi.substitute(
        [&](int x) {
            std::vector<BooleanFormula> alts;
            for (int i : setters[x]) alts.push_back(BooleanFormula::var(i));
            return BooleanFormula::bor_all(std::move(alts));
        },
        n);

    WeightedUnionInstance out;
    out.base = BaseKind::Bf;
    out.tmpl = bf_template(phi2);
    out.k = inst.k;
    return out;
}

// --- Theorem: graph gadgets -------------------------------------------------------

SubsetUnionInstance family_to_subset_graph(const FamilyUnionInstance& inst) {
    inst.validate();
    if (!is_graph_base(inst.base))
        throw PreconditionError("family_to_subset_graph: unsupported base kind");
    Graph shape = decode_graph_word(inst.tmpl->symbols());
    const int n = shape.n();
    const int k = inst.k();

    SubsetUnionInstance out;
    out.base = inst.base;
    out.k = k;

    if (inst.base == BaseKind::Forest) {
        // triangle gadget: one fresh triple per same-family element pair
        int triples = 0;
        for (const auto& fam : inst.families) {
            int sz = static_cast<int>(fam.size());
            triples += sz * (sz - 1) / 2;
        }
        int n2 = n + 3 * triples;
        out.tmpl = graph_template(n2, shape.directed(), shape.s, shape.t);
        // gadget vertex base per (family, i<j) pair, in that order
        int next_triple = 0;
        std::vector<std::map<std::pair<int, int>, int>> bases(inst.families.size());
        for (std::size_t f = 0; f < inst.families.size(); ++f) {
            int sz = static_cast<int>(inst.families[f].size());
            for (int i = 0; i < sz; ++i)
                for (int j = i + 1; j < sz; ++j) bases[f][{i, j}] = n + 3 * (next_triple++);
        }
        for (std::size_t f = 0; f < inst.families.size(); ++f) {
            int sz = static_cast<int>(inst.families[f].size());
            for (int i = 0; i < sz; ++i) {
                Graph g = decode_graph_word(inst.families[f][i].symbols());
                Graph g2(n2, g.directed());
                g2.s = g.s;
                g2.t = g.t;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (g.has_edge(a, b)) g2.add_edge(a, b);
                for (int j = 0; j < sz; ++j) {
                    if (j == i) continue;
                    int lo = std::min(i, j), hi = std::max(i, j);
                    int base = bases[f][{lo, hi}];
                    if (i == lo) {
                        g2.add_edge(base, base + 1);      // (a,b)
                        g2.add_edge(base + 1, base + 2);  // (b,c)
                    } else {
                        g2.add_edge(base + 2, base);  // (c,a)
                    }
                }
                out.elements.emplace_back(out.tmpl, encode_graph_word(g2));
            }
        }
        return out;
    }

    // chain gadget: vertices v_ab^1..v_ab^k per vertex pair. Ordered pairs
    // for directed graphs; unordered for undirected ones (two parallel
    // chains per edge would create cycles and break the tree/cycle bases).
    const bool directed = shape.directed();
    const int pair_count = directed ? n * n : n * (n + 1) / 2;
    const int n2 = n + k * pair_count;
    out.tmpl = graph_template(n2, directed, shape.s, shape.t);
    auto pair_index = [&](int a, int b) {
        if (directed) return a * n + b;
        // a <= b in the unordered case
        return a * n - a * (a - 1) / 2 + (b - a);
    };
    auto chain_vertex = [&](int a, int b, int i) {  // i in 1..k
        return n + pair_index(a, b) * k + (i - 1);
    };
    for (std::size_t f = 0; f < inst.families.size(); ++f) {
        int fam_index = static_cast<int>(f) + 1;
        for (const auto& member : inst.families[f]) {
            Graph g = decode_graph_word(member.symbols());
            Graph g2(n2, g.directed());
            g2.s = g.s;
            g2.t = g.t;
            for (int a = 0; a < n; ++a)
                for (int b = directed ? 0 : a; b < n; ++b) {
                    int from = fam_index == 1 ? a : chain_vertex(a, b, fam_index - 1);
                    g2.add_edge(from, chain_vertex(a, b, fam_index));
                    if (g.has_edge(a, b)) g2.add_edge(chain_vertex(a, b, k), b);
                }
            out.elements.emplace_back(out.tmpl, encode_graph_word(g2));
        }
    }
    return out;
}

// --- Theorem: generator constructions ------------------------------------------------

namespace {

// Quotient monoid of a terminating confluent replacement system, materialized
// from an explicit list of irreducible representatives.
struct Quotient {
    ReplacementSystem rules;
    std::vector<std::vector<int>> reps;
    std::map<std::vector<int>, int> index;

    static constexpr long long kNormalizeBudget = 100000;

    void build_index() {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            // representative must be genuinely irreducible, rule by rule
            for (const auto& [lhs, rhs] : rules.rules) {
                (void)rhs;
                for (std::size_t pos = 0; pos + lhs.size() <= reps[i].size(); ++pos)
                    if (std::equal(lhs.begin(), lhs.end(), reps[i].begin() + pos))
                        throw std::logic_error("agen reduction: reducible representative");
            }
            if (!index.emplace(reps[i], static_cast<int>(i)).second)
                throw std::logic_error("agen reduction: duplicate representative");
        }
    }

    int class_of(std::vector<int> word) const {
        auto nf = rs_normalize(rules, std::move(word), kNormalizeBudget);
        auto it = index.find(nf);
        if (it == index.end())
            throw std::logic_error("agen reduction: normal form outside the representative system");
        return it->second;
    }

    GeneratorInstance to_generator_instance(const std::vector<int>& target_word,
                                            const std::vector<std::vector<int>>& candidate_words,
                                            int k) const {
        GeneratorInstance gi;
        int u = static_cast<int>(reps.size());
        gi.names.reserve(u);
        for (const auto& w : reps) {
            if (w.empty()) {
                gi.names.push_back("eps");
                continue;
            }
            std::string name;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) name += '.';
                name += rules.alphabet[w[i]];
            }
            gi.names.push_back(std::move(name));
        }
        gi.table.assign(u, std::vector<int>(u, 0));
        for (int a = 0; a < u; ++a)
            for (int b = 0; b < u; ++b) {
                std::vector<int> concat = reps[a];
                concat.insert(concat.end(), reps[b].begin(), reps[b].end());
                gi.table[a][b] = class_of(std::move(concat));
            }
        gi.target = class_of(target_word);
        for (const auto& w : candidate_words) gi.candidates.push_back(class_of(w));
        std::sort(gi.candidates.begin(), gi.candidates.end());
        gi.candidates.erase(std::unique(gi.candidates.begin(), gi.candidates.end()),
                            gi.candidates.end());
        gi.k = k;
        gi.associative = true;
        gi.validate();
        return gi;
    }
};

}  // namespace

ReplacementSystem agen_family_rules(const GeneratorInstance& gi, int k) {
    const int u = gi.size();
    ReplacementSystem rs;
    rs.alphabet = gi.names;
    for (int i = 1; i <= k; ++i) rs.alphabet.push_back("e" + std::to_string(i));
    rs.alphabet.push_back("x'");
    rs.alphabet.push_back("err");
    const int e0 = u;  // e_i = e0 + i - 1
    const int xp = u + k;
    const int err = u + k + 1;
    const int total = u + k + 2;

    // 1. products of the original universe
    for (int a = 0; a < u; ++a)
        for (int b = 0; b < u; ++b)
            rs.rules.push_back({{a, b}, {gi.table[a][b]}});
    // 2. x e_1 .. e_k -> x'
    {
        std::vector<int> lhs{gi.target};
        for (int i = 0; i < k; ++i) lhs.push_back(e0 + i);
        rs.rules.push_back({lhs, {xp}});
    }
    // 3. e_i followed by anything but e_{i+1} is a dead end
    for (int i = 0; i < k; ++i)
        for (int g = 0; g < total; ++g) {
            if (g == err) continue;
            if (i + 1 < k && g == e0 + i + 1) continue;
            rs.rules.push_back({{e0 + i, g}, {err}});
        }
    // 4. x' followed by anything is a dead end
    for (int g = 0; g < total; ++g) {
        if (g == err) continue;
        rs.rules.push_back({{xp, g}, {err}});
    }
    // 5. u x' evaluates the pending expression u x e_1..e_k
    for (int a = 0; a < u; ++a) {
        std::vector<int> rhs{gi.table[a][gi.target]};
        for (int i = 0; i < k; ++i) rhs.push_back(e0 + i);
        rs.rules.push_back({{a, xp}, rhs});
    }
    // 6. error absorption
    for (int g = 0; g < total; ++g) {
        rs.rules.push_back({{err, g}, {err}});
        if (g != err) rs.rules.push_back({{g, err}, {err}});
    }
    rs.validate();
    return rs;
}

std::vector<std::vector<int>> agen_family_representatives(const ReplacementSystem& rules,
                                                          const GeneratorInstance& gi, int k) {
    const int u = gi.size();
    const int e0 = u;
    const int xp = u + k;
    const int err = u + k + 1;

    std::vector<std::vector<int>> reps;
    reps.push_back({});  // identity class
    for (int a = 0; a < u; ++a) reps.push_back({a});
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) {
            std::vector<int> run;
            for (int t = i; t <= j; ++t) run.push_back(e0 + t - 1);
            reps.push_back(std::move(run));
        }
    reps.push_back({xp});
    for (int a = 0; a < u; ++a)
        for (int i = 1; i <= k; ++i)
            for (int j = i; j <= k; ++j) {
                if (a == gi.target && i == 1 && j == k) continue;  // that word is [x']
                std::vector<int> w{a};
                for (int t = i; t <= j; ++t) w.push_back(e0 + t - 1);
                reps.push_back(std::move(w));
            }
    reps.push_back({err});

    // class-count bound from the construction
    long long bound = 1 + static_cast<long long>(u + k) * (static_cast<long long>(k) * k + 1);
    if (static_cast<long long>(reps.size()) > bound)
        throw std::logic_error("agen reduction: representative count exceeds the class bound");
    (void)rules;
    return reps;
}

SubsetUnionInstance family_to_subset_agen(const FamilyUnionInstance& inst) {
    inst.validate();
    if (inst.base != BaseKind::Agen)
        throw PreconditionError("family_to_subset_agen: base must be agen");
    const int k = inst.k();
    if (k < 1) throw PreconditionError("family_to_subset_agen: needs at least one family");
    auto [gi, none] = decode_agen_word([&] {
        std::string w = inst.tmpl->symbols();
        for (int p : inst.tmpl->holes()) w[p] = '0';
        return w;
    }());
    (void)none;
    if (!gi.associative) throw PreconditionError("family_to_subset_agen: operation not associative");

    Quotient q;
    q.rules = agen_family_rules(gi, k);
    q.reps = agen_family_representatives(q.rules, gi, k);
    q.build_index();

    const int u = gi.size();
    const int e0 = u;
    const int xp = u + k;

    std::vector<std::vector<int>> candidate_words;
    for (int c : gi.candidates) candidate_words.push_back({c});
    for (int i = 0; i < k; ++i) candidate_words.push_back({e0 + i});

    GeneratorInstance quotient_gi = q.to_generator_instance({xp}, candidate_words, k);

    SubsetUnionInstance out;
    out.base = BaseKind::Agen;
    out.k = k;
    out.tmpl = agen_template(quotient_gi);
    for (std::size_t f = 0; f < inst.families.size(); ++f) {
        for (const auto& member : inst.families[f]) {
            auto [mgi, selected] = decode_agen_word(member.symbols());
            (void)mgi;
            std::vector<int> chosen;
            for (int g : selected) chosen.push_back(q.class_of({g}));
            chosen.push_back(q.class_of({e0 + static_cast<int>(f)}));
            std::sort(chosen.begin(), chosen.end());
            out.elements.emplace_back(out.tmpl, encode_agen_word(quotient_gi, chosen));
        }
    }
    if (out.k != inst.k()) throw std::logic_error("family_to_subset_agen: parameter drift");
    return out;
}

ReplacementSystem agen_selector_rules(const GeneratorInstance& gi,
                                      const std::vector<std::vector<int>>& selections) {
    const int u = gi.size();
    const int n = static_cast<int>(selections.size());
    ReplacementSystem rs;
    rs.alphabet = gi.names;
    const int end = u;
    const int tick = u + 1;
    const int seal = u + 2;
    const int err = u + 3;
    const int sel0 = u + 4;  // sel_i = sel0 + i - 1
    rs.alphabet.push_back("end");
    rs.alphabet.push_back("tick");
    rs.alphabet.push_back("seal");
    rs.alphabet.push_back("err");
    for (int i = 1; i <= n; ++i) rs.alphabet.push_back("sel" + std::to_string(i));
    const int total = u + 4 + n;

    int max_len = 1;
    for (const auto& sel : selections) max_len = std::max(max_len, static_cast<int>(sel.size()));

    // 1. products of the original universe
    for (int a = 0; a < u; ++a)
        for (int b = 0; b < u; ++b)
            rs.rules.push_back({{a, b}, {gi.table[a][b]}});
    // 2. selector evaluation: sel_i tick^j gamma -> u_{i,j} gamma
    for (int i = 0; i < n; ++i) {
        const auto& sel = selections[i];
        for (int j = 1; j <= static_cast<int>(sel.size()); ++j)
            for (int g = 0; g < total; ++g) {
                if (g == tick || g == err) continue;
                std::vector<int> lhs{sel0 + i};
                lhs.insert(lhs.end(), j, tick);
                lhs.push_back(g);
                rs.rules.push_back({lhs, {sel[j - 1], g}});
            }
        // over-run
        std::vector<int> lhs{sel0 + i};
        lhs.insert(lhs.end(), sel.size() + 1, tick);
        rs.rules.push_back({lhs, {err}});
        // selector with no counters
        for (int g = 0; g < total; ++g) {
            if (g == tick || g == err) continue;
            rs.rules.push_back({{sel0 + i, g}, {err}});
        }
    }
    // 3. the end marker may only be followed by the seal
    for (int g = 0; g < total; ++g) {
        if (g == seal || g == err) continue;
        rs.rules.push_back({{end, g}, {err}});
    }
    // 4. the seal may not be followed by anything, nor preceded except by end
    for (int g = 0; g < total; ++g) {
        if (g == err) continue;
        rs.rules.push_back({{seal, g}, {err}});
    }
    for (int g = 0; g < total; ++g) {
        if (g == end || g == seal || g == err) continue;
        rs.rules.push_back({{g, seal}, {err}});
    }
    // 5. counters after universe letters and overlong counter runs are junk
    for (int a = 0; a < u; ++a) rs.rules.push_back({{a, tick}, {err}});
    {
        std::vector<int> lhs(static_cast<std::size_t>(max_len) + 1, tick);
        rs.rules.push_back({lhs, {err}});
    }
    // 6. error absorption
    for (int g = 0; g < total; ++g) {
        rs.rules.push_back({{err, g}, {err}});
        if (g != err) rs.rules.push_back({{g, err}, {err}});
    }
    rs.validate();
    return rs;
}

WeightedUnionInstance subset_to_weighted_agen(const SubsetUnionInstance& inst) {
    inst.validate();
    if (inst.base != BaseKind::Agen)
        throw PreconditionError("subset_to_weighted_agen: base must be agen");
    auto [gi, none] = decode_agen_word([&] {
        std::string w = inst.tmpl->symbols();
        for (int p : inst.tmpl->holes()) w[p] = '0';
        return w;
    }());
    (void)none;
    if (!gi.associative) throw PreconditionError("subset_to_weighted_agen: operation not associative");

    const int n = static_cast<int>(inst.elements.size());
    std::vector<std::vector<int>> selections;
    for (const auto& member : inst.elements) {
        auto [mgi, selected] = decode_agen_word(member.symbols());
        (void)mgi;
        std::sort(selected.begin(), selected.end());
        selections.push_back(std::move(selected));
    }

    Quotient q;
    q.rules = agen_selector_rules(gi, selections);
    const int u = gi.size();
    const int end = u, tick = u + 1, seal = u + 2, err = u + 3, sel0 = u + 4;

    int max_len = 1;
    for (const auto& sel : selections) max_len = std::max(max_len, static_cast<int>(sel.size()));

    // normal forms: err | seal | tick^a [u] [tail] with tail empty, "end",
    // "end seal" or a selector with a legal counter run
    q.reps.push_back({});
    auto push = [&](std::vector<int> w) { q.reps.push_back(std::move(w)); };
    for (int a = 0; a <= max_len; ++a) {
        for (int uopt = -1; uopt < u; ++uopt) {
            std::vector<int> stem;
            stem.insert(stem.end(), a, tick);
            if (uopt >= 0) stem.push_back(uopt);
            if (!stem.empty()) push(stem);
            {
                std::vector<int> w = stem;
                w.push_back(end);
                push(w);
                w.push_back(seal);
                push(w);
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= static_cast<int>(selections[i].size()); ++j) {
                    std::vector<int> w = stem;
                    w.push_back(sel0 + i);
                    w.insert(w.end(), j, tick);
                    push(std::move(w));
                }
        }
    }
    push({seal});
    push({err});
    q.build_index();

    std::vector<std::vector<int>> candidate_words;
    for (int i = 0; i < n; ++i) candidate_words.push_back({sel0 + i});
    candidate_words.push_back({end});
    candidate_words.push_back({tick});
    candidate_words.push_back({seal});

    GeneratorInstance quotient_gi =
        q.to_generator_instance({gi.target, end, seal}, candidate_words, inst.k + 3);

    WeightedUnionInstance out;
    out.base = BaseKind::Agen;
    out.k = inst.k + 3;
    out.tmpl = agen_template(quotient_gi);
    if (out.k != inst.k + 3) throw std::logic_error("subset_to_weighted_agen: parameter drift");
    (void)err;
    return out;
}

}  // namespace parared
