#include "parared/io.hpp"

#include <fstream>
#include <sstream>

namespace parared {

// --- kind / parameter dispatch ----------------------------------------------

namespace {

struct KindVisitor {
    std::string operator()(const Graph&) const { return "graph"; }
    std::string operator()(const BfInstance&) const { return "bf"; }
    std::string operator()(const BoundedTMInstance& b) const {
        return b.machine.deterministic ? "dtsc" : "ntsc";
    }
    std::string operator()(const TwoTapeTM&) const { return "tm2"; }
    std::string operator()(const MultiHeadAutomaton&) const { return "mfa"; }
    std::string operator()(const CellularInstance&) const { return "ca"; }
    std::string operator()(const SequentialCellularInstance&) const { return "seqca"; }
    std::string operator()(const ThresholdPebbleGame&) const { return "tpg"; }
    std::string operator()(const LcsInstance&) const { return "lcs"; }
    std::string operator()(const GeneratorInstance&) const { return "gen"; }
    std::string operator()(const ReplacementSystem&) const { return "rs"; }
    std::string operator()(const CompatibleProjection&) const { return "projection"; }
    std::string operator()(const FamilyUnionInstance&) const { return "family-union"; }
    std::string operator()(const SubsetUnionInstance&) const { return "subset-union"; }
    std::string operator()(const WeightedUnionInstance&) const { return "weighted-union"; }
};

struct ParamVisitor {
    long long operator()(const Graph&) const { return 0; }
    long long operator()(const BfInstance&) const { return 0; }
    long long operator()(const BoundedTMInstance& b) const { return b.cells; }
    long long operator()(const TwoTapeTM&) const { return 0; }
    long long operator()(const MultiHeadAutomaton& a) const { return a.heads; }
    long long operator()(const CellularInstance& c) const { return c.cells(); }
    long long operator()(const SequentialCellularInstance& c) const { return c.cells(); }
    long long operator()(const ThresholdPebbleGame& g) const { return g.cap; }
    long long operator()(const LcsInstance& l) const {
        return static_cast<long long>(l.strings.size());
    }
    long long operator()(const GeneratorInstance& g) const { return g.k; }
    long long operator()(const ReplacementSystem&) const { return 0; }
    long long operator()(const CompatibleProjection& p) const { return p.kappa; }
    long long operator()(const FamilyUnionInstance& f) const { return f.k(); }
    long long operator()(const SubsetUnionInstance& s) const { return s.k; }
    long long operator()(const WeightedUnionInstance& w) const { return w.k; }
};

}  // namespace

std::string kind_of(const ProblemInstance& inst) { return std::visit(KindVisitor{}, inst); }
long long parameter_of(const ProblemInstance& inst) { return std::visit(ParamVisitor{}, inst); }

// --- line reader --------------------------------------------------------------

namespace {

struct Reader {
    std::vector<std::string> lines;
    std::size_t next = 0;
    const ParseOptions& opts;

    Reader(const std::string& text, const ParseOptions& o) : opts(o) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(next) + ": " + msg);
    }

    bool done() const { return next >= lines.size(); }

    const std::string& peek() const {
        if (done()) throw ParseError("unexpected end of file");
        return lines[next];
    }

    std::string take() {
        std::string s = peek();
        ++next;
        return s;
    }

    std::string peek_key() const {
        if (done()) return "";
        std::istringstream in(peek());
        std::string key;
        in >> key;
        return key;
    }

    // "key v1 v2 ..." -> rest of line after the key
    std::string take_line(const std::string& key) {
        std::istringstream in(take());
        std::string got;
        in >> got;
        if (got != key) fail("expected '" + key + "', found '" + got + "'");
        std::string rest;
        std::getline(in, rest);
        if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
        return rest;
    }

    long long take_int(const std::string& key) {
        std::string rest = take_line(key);
        try {
            std::size_t pos = 0;
            long long v = std::stoll(rest, &pos);
            if (pos != rest.size()) fail("trailing characters after " + key);
            return v;
        } catch (const std::logic_error&) {
            fail("expected an integer after " + key);
        }
    }

    std::vector<int> take_int_list(const std::string& key) {
        std::istringstream in(take_line(key));
        std::vector<int> out;
        long long v;
        while (in >> v) out.push_back(static_cast<int>(v));
        if (!in.eof()) fail("bad integer list after " + key);
        return out;
    }

    long long take_unary(const std::string& key) {
        std::string rest = take_line(key);
        for (char c : rest)
            if (c != '1') fail(key + " must be a run of 1s");
        if (static_cast<long long>(rest.size()) > opts.unary_cap)
            fail(key + " exceeds the unary cap");
        return static_cast<long long>(rest.size());
    }
};

std::string kv(const std::string& key, const std::string& value) {
    return value.empty() ? key + "\n" : key + " " + value + "\n";
}

std::vector<int> parse_ints(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    long long v;
    while (in >> v) out.push_back(static_cast<int>(v));
    return out;
}

std::string join_ints(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vs[i]);
    }
    return out;
}

std::string join_tokens(const std::vector<std::string>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += vs[i];
    }
    return out;
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// --- graph ---------------------------------------------------------------------

Graph parse_graph_body(Reader& r) {
    bool directed = r.take_int("directed") != 0;
    int n = static_cast<int>(r.take_int("vertices"));
    if (n < 0) r.fail("negative vertex count");
    r.take_line("matrix");
    Graph g(n, directed);
    for (int a = 0; a < n; ++a) {
        std::string row = r.take();
        if (static_cast<int>(row.size()) != n) r.fail("matrix row of wrong width");
        for (int b = 0; b < n; ++b) {
            std::uint8_t v;
            switch (row[b]) {
                case '0': v = 0; break;
                case '1': v = 1; break;
                case '?': v = Graph::Hole; break;
                default: r.fail("matrix cell must be 0, 1 or ?");
            }
            if (!directed && b < a && g.at(a, b) != v) r.fail("asymmetric undirected matrix");
            g.set(a, b, v);
        }
    }
    while (!r.done()) {
        std::string key = r.peek_key();
        if (key == "s") g.s = static_cast<int>(r.take_int("s"));
        else if (key == "t") g.t = static_cast<int>(r.take_int("t"));
        else if (key == "layers") g.layers = r.take_int_list("layers");
        else break;
    }
    if ((g.s && (*g.s < 0 || *g.s >= n)) || (g.t && (*g.t < 0 || *g.t >= n)))
        r.fail("s/t out of range");
    if (!g.layers.empty() && static_cast<int>(g.layers.size()) != n)
        r.fail("layer list of wrong length");
    return g;
}

void serialize_graph_body(std::string& out, const Graph& g) {
    out += "directed " + std::to_string(g.directed() ? 1 : 0) + "\n";
    out += "vertices " + std::to_string(g.n()) + "\n";
    out += "matrix\n";
    for (int a = 0; a < g.n(); ++a) {
        for (int b = 0; b < g.n(); ++b) {
            std::uint8_t v = g.at(a, b);
            out += v == Graph::Hole ? '?' : static_cast<char>('0' + v);
        }
        out += '\n';
    }
    if (g.s) out += "s " + std::to_string(*g.s) + "\n";
    if (g.t) out += "t " + std::to_string(*g.t) + "\n";
    if (!g.layers.empty()) out += kv("layers", join_ints(g.layers));
}

// --- machines --------------------------------------------------------------------

SingleTapeTM parse_tm_body(Reader& r, bool deterministic) {
    SingleTapeTM m;
    m.deterministic = deterministic;
    m.state_count = static_cast<int>(r.take_int("states"));
    m.initial = static_cast<int>(r.take_int("initial"));
    m.accepting = r.take_int_list("accepting");
    m.alphabet = r.take_line("alphabet");
    if (m.alphabet.empty()) r.fail("empty tape alphabet");
    long long count = r.take_int("transitions");
    auto sym = [&](const std::string& tok) {
        if (tok.size() != 1) r.fail("tape symbols are single characters");
        auto p = m.alphabet.find(tok[0]);
        if (p == std::string::npos) r.fail("symbol outside the alphabet");
        return static_cast<int>(p);
    };
    for (long long i = 0; i < count; ++i) {
        std::istringstream in(r.take());
        long long q, q2;
        std::string a, b, mv;
        if (!(in >> q >> a >> q2 >> b >> mv) || mv.size() != 1)
            r.fail("transition line must be 'q sym q' sym' move'");
        m.transitions.push_back({static_cast<int>(q), sym(a), static_cast<int>(q2), sym(b),
                                 parse_move(mv[0])});
    }
    return m;
}

void serialize_tm_body(std::string& out, const SingleTapeTM& m) {
    out += "states " + std::to_string(m.state_count) + "\n";
    out += "initial " + std::to_string(m.initial) + "\n";
    out += kv("accepting", join_ints(m.accepting));
    out += "alphabet " + m.alphabet + "\n";
    out += "transitions " + std::to_string(m.transitions.size()) + "\n";
    for (const auto& tr : m.transitions) {
        out += std::to_string(tr.state);
        out += ' ';
        out += m.alphabet[tr.read];
        out += ' ';
        out += std::to_string(tr.next);
        out += ' ';
        out += m.alphabet[tr.write];
        out += ' ';
        out += move_char(tr.move);
        out += '\n';
    }
}

BoundedTMInstance parse_bounded_tm(Reader& r, bool deterministic) {
    BoundedTMInstance b;
    b.machine = parse_tm_body(r, deterministic);
    b.steps = r.take_unary("steps");
    b.cells = static_cast<int>(r.take_unary("cells"));
    b.validate();
    return b;
}

TwoTapeTM parse_tm2_body(Reader& r) {
    TwoTapeTM m;
    m.state_count = static_cast<int>(r.take_int("states"));
    m.initial = static_cast<int>(r.take_int("initial"));
    m.accepting = r.take_int_list("accepting");
    m.deterministic = r.take_int("deterministic") != 0;
    m.input_alphabet = r.take_line("input-alphabet");
    m.work_alphabet = r.take_line("work-alphabet");
    m.input = r.take_line("input");
    long long count = r.take_int("transitions");
    auto isym = [&](const std::string& tok) {
        if (tok.size() != 1) r.fail("symbols are single characters");
        auto p = m.input_alphabet.find(tok[0]);
        if (p == std::string::npos) r.fail("input symbol outside the alphabet");
        return static_cast<int>(p);
    };
    auto wsym = [&](const std::string& tok) {
        if (tok.size() != 1) r.fail("symbols are single characters");
        auto p = m.work_alphabet.find(tok[0]);
        if (p == std::string::npos) r.fail("work symbol outside the alphabet");
        return static_cast<int>(p);
    };
    for (long long i = 0; i < count; ++i) {
        std::istringstream in(r.take());
        long long q, q2;
        std::string a, w, w2, mi, mw;
        if (!(in >> q >> a >> w >> q2 >> w2 >> mi >> mw) || mi.size() != 1 || mw.size() != 1)
            r.fail("transition line must be 'q in work q' work' movein movework'");
        m.transitions.push_back({static_cast<int>(q), isym(a), wsym(w), static_cast<int>(q2),
                                 wsym(w2), parse_move(mi[0]), parse_move(mw[0])});
    }
    m.validate();
    return m;
}

void serialize_tm2_body(std::string& out, const TwoTapeTM& m) {
    out += "states " + std::to_string(m.state_count) + "\n";
    out += "initial " + std::to_string(m.initial) + "\n";
    out += kv("accepting", join_ints(m.accepting));
    out += "deterministic " + std::to_string(m.deterministic ? 1 : 0) + "\n";
    out += "input-alphabet " + m.input_alphabet + "\n";
    out += "work-alphabet " + m.work_alphabet + "\n";
    out += kv("input", m.input);
    out += "transitions " + std::to_string(m.transitions.size()) + "\n";
    for (const auto& tr : m.transitions) {
        out += std::to_string(tr.state);
        out += ' ';
        out += m.input_alphabet[tr.input_read];
        out += ' ';
        out += m.work_alphabet[tr.work_read];
        out += ' ';
        out += std::to_string(tr.next);
        out += ' ';
        out += m.work_alphabet[tr.work_write];
        out += ' ';
        out += move_char(tr.input_move);
        out += ' ';
        out += move_char(tr.work_move);
        out += '\n';
    }
}

MultiHeadAutomaton parse_mfa_body(Reader& r, long long heads_param) {
    MultiHeadAutomaton a;
    a.state_count = static_cast<int>(r.take_int("states"));
    a.heads = static_cast<int>(r.take_int("heads"));
    if (a.heads != heads_param) r.fail("header parameter disagrees with heads");
    a.initial = static_cast<int>(r.take_int("initial"));
    a.accepting = r.take_int_list("accepting");
    a.deterministic = r.take_int("deterministic") != 0;
    a.dag = r.take_int("dag") != 0;
    a.input = r.take_line("input");
    long long count = r.take_int("transitions");
    for (long long i = 0; i < count; ++i) {
        std::istringstream in(r.take());
        long long q, q2;
        std::string obs, moves;
        if (!(in >> q >> obs >> q2 >> moves))
            r.fail("transition line must be 'q observed q' moves'");
        MultiHeadAutomaton::Transition tr;
        tr.state = static_cast<int>(q);
        tr.observed = obs;
        tr.next = static_cast<int>(q2);
        for (char c : moves) tr.moves.push_back(parse_move(c));
        a.transitions.push_back(std::move(tr));
    }
    a.validate();
    return a;
}

void serialize_mfa_body(std::string& out, const MultiHeadAutomaton& a) {
    out += "states " + std::to_string(a.state_count) + "\n";
    out += "heads " + std::to_string(a.heads) + "\n";
    out += "initial " + std::to_string(a.initial) + "\n";
    out += kv("accepting", join_ints(a.accepting));
    out += "deterministic " + std::to_string(a.deterministic ? 1 : 0) + "\n";
    out += "dag " + std::to_string(a.dag ? 1 : 0) + "\n";
    out += kv("input", a.input);
    out += "transitions " + std::to_string(a.transitions.size()) + "\n";
    for (const auto& tr : a.transitions) {
        out += std::to_string(tr.state) + " " + tr.observed + " " + std::to_string(tr.next) + " ";
        for (Move m : tr.moves) out += move_char(m);
        out += '\n';
    }
}

// --- cellular ----------------------------------------------------------------------

CellularAutomaton parse_ca_automaton(Reader& r) {
    CellularAutomaton ca;
    ca.state_count = static_cast<int>(r.take_int("states"));
    ca.accepting = r.take_int_list("accepting");
    ca.deterministic = r.take_int("deterministic") != 0;
    ca.dag = r.take_int("dag") != 0;
    long long n3 = r.take_int("interior");
    for (long long i = 0; i < n3; ++i) {
        auto vs = parse_ints(r.take());
        if (vs.size() != 4) r.fail("interior rule needs 4 states");
        ca.interior.push_back({vs[0], vs[1], vs[2], vs[3]});
    }
    long long nl = r.take_int("left");
    for (long long i = 0; i < nl; ++i) {
        auto vs = parse_ints(r.take());
        if (vs.size() != 3) r.fail("left rule needs 3 states");
        ca.left.push_back({vs[0], vs[1], vs[2]});
    }
    long long nr = r.take_int("right");
    for (long long i = 0; i < nr; ++i) {
        auto vs = parse_ints(r.take());
        if (vs.size() != 3) r.fail("right rule needs 3 states");
        ca.right.push_back({vs[0], vs[1], vs[2]});
    }
    long long n1 = r.take_int("single");
    for (long long i = 0; i < n1; ++i) {
        auto vs = parse_ints(r.take());
        if (vs.size() != 2) r.fail("single rule needs 2 states");
        ca.single.push_back({vs[0], vs[1]});
    }
    return ca;
}

void serialize_ca_automaton(std::string& out, const CellularAutomaton& ca) {
    out += "states " + std::to_string(ca.state_count) + "\n";
    out += kv("accepting", join_ints(ca.accepting));
    out += "deterministic " + std::to_string(ca.deterministic ? 1 : 0) + "\n";
    out += "dag " + std::to_string(ca.dag ? 1 : 0) + "\n";
    out += "interior " + std::to_string(ca.interior.size()) + "\n";
    for (const auto& t : ca.interior)
        out += std::to_string(t.left) + " " + std::to_string(t.own) + " " +
               std::to_string(t.right) + " " + std::to_string(t.next) + "\n";
    out += "left " + std::to_string(ca.left.size()) + "\n";
    for (const auto& t : ca.left)
        out += std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.next) +
               "\n";
    out += "right " + std::to_string(ca.right.size()) + "\n";
    for (const auto& t : ca.right)
        out += std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.next) +
               "\n";
    out += "single " + std::to_string(ca.single.size()) + "\n";
    for (const auto& t : ca.single)
        out += std::to_string(t.own) + " " + std::to_string(t.next) + "\n";
}

// --- union instances ------------------------------------------------------------------

std::shared_ptr<const TemplateWord> parse_template(Reader& r) {
    std::string alphabet = r.take_line("alphabet");
    std::string word = r.take_line("template");
    try {
        return std::make_shared<TemplateWord>(alphabet, word);
    } catch (const BadWord& e) {
        r.fail(e.what());
    }
}

InstantiationWord parse_member(Reader& r, const std::shared_ptr<const TemplateWord>& t) {
    std::string w = r.take();
    try {
        return InstantiationWord(t, w);
    } catch (const BadWord& e) {
        r.fail(e.what());
    }
}

// --- whole instances ---------------------------------------------------------------

ProblemInstance parse_body(Reader& r, const std::string& kind, long long param) {
    if (kind == "graph") return parse_graph_body(r);
    if (kind == "bf") {
        int m = static_cast<int>(r.take_int("variables"));
        std::string prefix = r.take_line("formula");
        BfInstance inst;
        try {
            inst.formula = BooleanFormula::parse_prefix(prefix, m);
        } catch (const PreconditionError& e) {
            r.fail(e.what());
        }
        if (!r.done() && r.peek_key() == "assignment") {
            inst.assignment = r.take_line("assignment");
            if (static_cast<int>(inst.assignment.size()) != m)
                r.fail("assignment arity mismatch");
        }
        return inst;
    }
    if (kind == "dtsc" || kind == "ntsc") {
        BoundedTMInstance b = parse_bounded_tm(r, kind == "dtsc");
        if (b.cells != param) r.fail("header parameter disagrees with cells");
        return b;
    }
    if (kind == "tm2") return parse_tm2_body(r);
    if (kind == "mfa") return parse_mfa_body(r, param);
    if (kind == "ca" || kind == "seqca") {
        CellularAutomaton ca = parse_ca_automaton(r);
        std::vector<int> initial = r.take_int_list("initial");
        std::vector<int> accepting_config;
        if (!r.done() && r.peek_key() == "accepting-config")
            accepting_config = r.take_int_list("accepting-config");
        if (static_cast<long long>(initial.size()) != param)
            r.fail("header parameter disagrees with the initial string length");
        if (kind == "ca") {
            CellularInstance inst{std::move(ca), std::move(initial), std::move(accepting_config)};
            inst.validate();
            return inst;
        }
        SequentialCellularInstance inst{std::move(ca), std::move(initial),
                                        std::move(accepting_config)};
        inst.validate();
        return inst;
    }
    if (kind == "tpg") {
        ThresholdPebbleGame g;
        g.graph = parse_graph_body(r);
        g.thresholds = r.take_int_list("thresholds");
        g.start = r.take_int_list("start");
        g.target = r.take_int_list("target");
        g.dag = r.take_int("dag") != 0;
        g.cap = static_cast<int>(param);
        g.validate();
        return g;
    }
    if (kind == "lcs") {
        LcsInstance inst;
        inst.l = r.take_int("l");
        inst.alphabet = split_tokens(r.take_line("alphabet"));
        long long count = r.take_int("strings");
        if (count != param) r.fail("header parameter disagrees with the string count");
        for (long long i = 0; i < count; ++i) {
            std::vector<int> word;
            for (const std::string& tok : split_tokens(r.take())) {
                auto it = std::find(inst.alphabet.begin(), inst.alphabet.end(), tok);
                if (it == inst.alphabet.end()) r.fail("string symbol outside the alphabet");
                word.push_back(static_cast<int>(it - inst.alphabet.begin()));
            }
            inst.strings.push_back(std::move(word));
        }
        inst.validate();
        return inst;
    }
    if (kind == "gen") {
        GeneratorInstance gi;
        int u = static_cast<int>(r.take_int("elements"));
        if (u <= 0) r.fail("empty universe");
        gi.names.resize(u);
        for (int i = 0; i < u; ++i) gi.names[i] = "u" + std::to_string(i);
        if (r.peek_key() == "names") {
            auto toks = split_tokens(r.take_line("names"));
            if (static_cast<int>(toks.size()) != u) r.fail("names list of wrong length");
            gi.names = toks;
        }
        r.take_line("table");
        for (int a = 0; a < u; ++a) {
            auto row = parse_ints(r.take());
            if (static_cast<int>(row.size()) != u) r.fail("table row of wrong width");
            gi.table.push_back(std::move(row));
        }
        gi.target = static_cast<int>(r.take_int("target"));
        gi.candidates = r.take_int_list("candidates");
        gi.associative = r.take_int("associative") != 0;
        gi.k = static_cast<int>(param);
        gi.validate();
        return gi;
    }
    if (kind == "rs") {
        ReplacementSystem rs;
        rs.alphabet = split_tokens(r.take_line("alphabet"));
        long long count = r.take_int("rules");
        for (long long i = 0; i < count; ++i) {
            auto toks = split_tokens(r.take());
            auto arrow = std::find(toks.begin(), toks.end(), "->");
            if (arrow == toks.end()) r.fail("rule line needs '->'");
            std::vector<int> lhs, rhs;
            for (auto it = toks.begin(); it != arrow; ++it) {
                int t = rs.token(*it);
                if (t < 0) r.fail("unknown token " + *it);
                lhs.push_back(t);
            }
            for (auto it = arrow + 1; it != toks.end(); ++it) {
                int t = rs.token(*it);
                if (t < 0) r.fail("unknown token " + *it);
                rhs.push_back(t);
            }
            rs.rules.emplace_back(std::move(lhs), std::move(rhs));
        }
        rs.validate();
        return rs;
    }
    if (kind == "projection") {
        CompatibleProjection p;
        p.kappa = static_cast<int>(param);
        p.alphabet = r.take_line("sigma");
        p.blocks = static_cast<int>(r.take_int("blocks"));
        p.block_width = static_cast<int>(r.take_int("blockwidth"));
        p.input = r.take_line("input");
        p.advice = r.take_line("advice");
        long long count = r.take_int("outputs");
        auto index_of = [&](const std::string& tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) r.fail("bad position index");
                return v;
            } catch (const std::logic_error&) {
                r.fail("bad position index");
            }
        };
        for (long long i = 0; i < count; ++i) {
            auto toks = split_tokens(r.take());
            CompatibleProjection::Position pos;
            if (toks.size() == 2 && toks[0] == "const" && toks[1].size() == 1) {
                pos.kind = CompatibleProjection::Position::Const;
                pos.constant = toks[1][0];
            } else if (toks.size() == 2 && toks[0] == "in") {
                pos.kind = CompatibleProjection::Position::FromInput;
                pos.index = index_of(toks[1]);
            } else if (toks.size() == 4 && toks[0] == "bit" && toks[2].size() == 1 &&
                       toks[3].size() == 1) {
                pos.kind = CompatibleProjection::Position::FromBit;
                pos.index = index_of(toks[1]);
                pos.when0 = toks[2][0];
                pos.when1 = toks[3][0];
            } else {
                r.fail("output position must be 'const c', 'in j' or 'bit j c0 c1'");
            }
            p.positions.push_back(pos);
        }
        p.validate();
        return p;
    }
    if (kind == "family-union" || kind == "subset-union" || kind == "weighted-union") {
        BaseKind base;
        try {
            base = base_kind_from_string(r.take_line("base"));
        } catch (const PreconditionError& e) {
            r.fail(e.what());
        }
        auto tmpl = parse_template(r);
        if (kind == "family-union") {
            FamilyUnionInstance inst;
            inst.base = base;
            inst.tmpl = tmpl;
            while (!r.done() && r.peek_key() == "family") {
                long long count = r.take_int("family");
                std::vector<InstantiationWord> fam;
                for (long long i = 0; i < count; ++i) fam.push_back(parse_member(r, tmpl));
                inst.families.push_back(std::move(fam));
            }
            if (inst.k() != param) r.fail("header parameter disagrees with the family count");
            inst.validate();
            return inst;
        }
        if (kind == "subset-union") {
            SubsetUnionInstance inst;
            inst.base = base;
            inst.tmpl = tmpl;
            inst.k = static_cast<int>(param);
            long long count = r.take_int("elements");
            for (long long i = 0; i < count; ++i) inst.elements.push_back(parse_member(r, tmpl));
            inst.validate();
            return inst;
        }
        WeightedUnionInstance inst;
        inst.base = base;
        inst.tmpl = tmpl;
        inst.k = static_cast<int>(param);
        inst.validate();
        return inst;
    }
    throw ParseError("unknown instance kind: " + kind);
}

}  // namespace

ProblemInstance parse_instance(const std::string& text, const ParseOptions& opts) {
    Reader r(text, opts);
    if (r.done()) throw ParseError("empty instance file");
    std::istringstream head(r.take());
    std::string kind;
    long long param;
    if (!(head >> kind >> param)) throw ParseError("header must be '<kind> <parameter>'");
    ProblemInstance inst = parse_body(r, kind, param);
    if (!r.done()) r.fail("trailing content");
    return inst;
}

namespace {

struct SerializeVisitor {
    std::string out;

    void header(const ProblemInstance& inst) {
        out = kind_of(inst) + " " + std::to_string(parameter_of(inst)) + "\n";
    }

    void operator()(const Graph& g) { serialize_graph_body(out, g); }

    void operator()(const BfInstance& b) {
        out += "variables " + std::to_string(b.formula.variable_count()) + "\n";
        out += "formula " + b.formula.to_prefix() + "\n";
        if (!b.assignment.empty()) out += "assignment " + b.assignment + "\n";
    }

    void operator()(const BoundedTMInstance& b) {
        serialize_tm_body(out, b.machine);
        out += kv("steps", std::string(static_cast<std::size_t>(b.steps), '1'));
        out += "cells " + std::string(static_cast<std::size_t>(b.cells), '1') + "\n";
    }

    void operator()(const TwoTapeTM& m) { serialize_tm2_body(out, m); }
    void operator()(const MultiHeadAutomaton& a) { serialize_mfa_body(out, a); }

    void operator()(const CellularInstance& c) {
        serialize_ca_automaton(out, c.automaton);
        out += "initial " + join_ints(c.initial) + "\n";
        if (!c.accepting_config.empty())
            out += "accepting-config " + join_ints(c.accepting_config) + "\n";
    }

    void operator()(const SequentialCellularInstance& c) {
        serialize_ca_automaton(out, c.automaton);
        out += "initial " + join_ints(c.initial) + "\n";
        if (!c.accepting_config.empty())
            out += "accepting-config " + join_ints(c.accepting_config) + "\n";
    }

    void operator()(const ThresholdPebbleGame& g) {
        serialize_graph_body(out, g.graph);
        out += kv("thresholds", join_ints(g.thresholds));
        out += kv("start", join_ints(g.start));
        out += kv("target", join_ints(g.target));
        out += "dag " + std::to_string(g.dag ? 1 : 0) + "\n";
    }

    void operator()(const LcsInstance& l) {
        out += "l " + std::to_string(l.l) + "\n";
        out += "alphabet " + join_tokens(l.alphabet) + "\n";
        out += "strings " + std::to_string(l.strings.size()) + "\n";
        for (const auto& w : l.strings) {
            std::string line;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) line += ' ';
                line += l.alphabet[w[i]];
            }
            out += line + "\n";
        }
    }

    void operator()(const GeneratorInstance& gi) {
        out += "elements " + std::to_string(gi.size()) + "\n";
        out += "names " + join_tokens(gi.names) + "\n";
        out += "table\n";
        for (const auto& row : gi.table) out += join_ints(row) + "\n";
        out += "target " + std::to_string(gi.target) + "\n";
        out += kv("candidates", join_ints(gi.candidates));
        out += "associative " + std::to_string(gi.associative ? 1 : 0) + "\n";
    }

    void operator()(const ReplacementSystem& rs) {
        out += "alphabet " + join_tokens(rs.alphabet) + "\n";
        out += "rules " + std::to_string(rs.rules.size()) + "\n";
        for (const auto& [lhs, rhs] : rs.rules) {
            std::string line;
            for (int t : lhs) line += rs.alphabet[t] + " ";
            line += "->";
            for (int t : rhs) line += " " + rs.alphabet[t];
            out += line + "\n";
        }
    }

    void operator()(const CompatibleProjection& p) {
        out += "sigma " + p.alphabet + "\n";
        out += "blocks " + std::to_string(p.blocks) + "\n";
        out += "blockwidth " + std::to_string(p.block_width) + "\n";
        out += "input " + p.input + "\n";
        out += kv("advice", p.advice);
        out += "outputs " + std::to_string(p.positions.size()) + "\n";
        for (const auto& pos : p.positions) {
            switch (pos.kind) {
                case CompatibleProjection::Position::Const:
                    out += std::string("const ") + pos.constant + "\n";
                    break;
                case CompatibleProjection::Position::FromInput:
                    out += "in " + std::to_string(pos.index) + "\n";
                    break;
                case CompatibleProjection::Position::FromBit:
                    out += "bit " + std::to_string(pos.index) + " " + pos.when0 + " " +
                           pos.when1 + "\n";
                    break;
            }
        }
    }

    void union_header(BaseKind base, const TemplateWord& t) {
        out += std::string("base ") + to_string(base) + "\n";
        out += "alphabet " + t.alphabet() + "\n";
        out += "template " + t.symbols() + "\n";
    }

    void operator()(const FamilyUnionInstance& inst) {
        union_header(inst.base, *inst.tmpl);
        for (const auto& fam : inst.families) {
            out += "family " + std::to_string(fam.size()) + "\n";
            for (const auto& w : fam) out += w.symbols() + "\n";
        }
    }

    void operator()(const SubsetUnionInstance& inst) {
        union_header(inst.base, *inst.tmpl);
        out += "elements " + std::to_string(inst.elements.size()) + "\n";
        for (const auto& w : inst.elements) out += w.symbols() + "\n";
    }

    void operator()(const WeightedUnionInstance& inst) { union_header(inst.base, *inst.tmpl); }
};

}  // namespace

std::string serialize_instance(const ProblemInstance& inst) {
    SerializeVisitor v;
    v.header(inst);
    std::visit(v, inst);
    return v.out;
}

ProblemInstance load_instance_file(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), opts);
}

void save_instance_file(const std::string& path, const ProblemInstance& inst) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << serialize_instance(inst);
}

}  // namespace parared
