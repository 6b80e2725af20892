#include "parared/unions.hpp"

#include <algorithm>
#include <map>

namespace parared {

const char* to_string(BaseKind k) {
    switch (k) {
        case BaseKind::Word: return "word";
        case BaseKind::Bf: return "bf";
        case BaseKind::Reach: return "reach";
        case BaseKind::DagReach: return "dag-reach";
        case BaseKind::Cycle: return "cycle";
        case BaseKind::UndirectedReach: return "undirected-reach";
        case BaseKind::Tree: return "tree";
        case BaseKind::Forest: return "forest";
        case BaseKind::UndirectedCycle: return "undirected-cycle";
        case BaseKind::Agen: return "agen";
        case BaseKind::Gen: return "gen";
    }
    return "?";
}

BaseKind base_kind_from_string(const std::string& s) {
    static const std::map<std::string, BaseKind> table = {
        {"word", BaseKind::Word},
        {"bf", BaseKind::Bf},
        {"reach", BaseKind::Reach},
        {"dag-reach", BaseKind::DagReach},
        {"cycle", BaseKind::Cycle},
        {"undirected-reach", BaseKind::UndirectedReach},
        {"tree", BaseKind::Tree},
        {"forest", BaseKind::Forest},
        {"undirected-cycle", BaseKind::UndirectedCycle},
        {"agen", BaseKind::Agen},
        {"gen", BaseKind::Gen},
    };
    auto it = table.find(s);
    if (it == table.end()) throw PreconditionError("unknown base kind: " + s);
    return it->second;
}

bool is_graph_base(BaseKind k) {
    switch (k) {
        case BaseKind::Reach:
        case BaseKind::DagReach:
        case BaseKind::Cycle:
        case BaseKind::UndirectedReach:
        case BaseKind::Tree:
        case BaseKind::Forest:
        case BaseKind::UndirectedCycle:
            return true;
        default:
            return false;
    }
}

void FamilyUnionInstance::validate() const {
    if (!tmpl) throw PreconditionError("family union: missing template");
    for (const auto& fam : families)
        for (const auto& w : fam)
            if (!(w.tmpl() == *tmpl))
                throw PreconditionError("family union: member of foreign template");
}

void SubsetUnionInstance::validate() const {
    if (!tmpl) throw PreconditionError("subset union: missing template");
    if (k < 0) throw PreconditionError("subset union: negative k");
    for (const auto& w : elements)
        if (!(w.tmpl() == *tmpl))
            throw PreconditionError("subset union: member of foreign template");
}

void WeightedUnionInstance::validate() const {
    if (!tmpl) throw PreconditionError("weighted union: missing template");
    if (k < 0) throw PreconditionError("weighted union: negative k");
}

const std::string kBfWordAlphabet = "AONITFv.=";
const std::string kGraphWordAlphabet = "gdun.stm";
const std::string kAgenWordAlphabet = "asgn.o,xc-";

// --- bf ------------------------------------------------------------------

std::string encode_bf_word(const BooleanFormula& f, const std::string& assignment) {
    if (static_cast<int>(assignment.size()) != f.variable_count())
        throw PreconditionError("bf word: assignment arity mismatch");
    return f.to_prefix() + "=" + assignment;
}

std::shared_ptr<const TemplateWord> bf_template(const BooleanFormula& f) {
    std::string w = f.to_prefix() + "=" + std::string(f.variable_count(), '?');
    return std::make_shared<TemplateWord>(kBfWordAlphabet, w);
}

std::pair<BooleanFormula, std::string> decode_bf_word(const std::string& word) {
    auto eq = word.rfind('=');
    if (eq == std::string::npos) throw PreconditionError("bf word: missing '='");
    std::string assignment = word.substr(eq + 1);
    BooleanFormula f =
        BooleanFormula::parse_prefix(word.substr(0, eq), static_cast<int>(assignment.size()));
    return {std::move(f), std::move(assignment)};
}

// --- unary helpers ---------------------------------------------------------

namespace {

void put_unary(std::string& out, char tag, int value) {
    out += tag;
    out.append(static_cast<std::size_t>(value) + 1, '.');
}

struct Cursor {
    const std::string& w;
    std::size_t pos = 0;
    explicit Cursor(const std::string& s) : w(s) {}

    char peek() const { return pos < w.size() ? w[pos] : '\0'; }
    void expect(char c) {
        if (pos >= w.size() || w[pos] != c)
            throw PreconditionError(std::string("word: expected '") + c + "'");
        ++pos;
    }
    int unary(char tag) {
        expect(tag);
        int dots = 0;
        while (pos < w.size() && w[pos] == '.') { ++dots; ++pos; }
        if (dots == 0) throw PreconditionError("word: empty unary run");
        return dots - 1;
    }
    std::string take(std::size_t n) {
        if (pos + n > w.size()) throw PreconditionError("word: truncated");
        std::string r = w.substr(pos, n);
        pos += n;
        return r;
    }
    void done() const {
        if (pos != w.size()) throw PreconditionError("word: trailing characters");
    }
};

}  // namespace

// --- graph -----------------------------------------------------------------

std::string encode_graph_word(const Graph& g) {
    std::string out = "g";
    out += g.directed() ? 'd' : 'u';
    put_unary(out, 'n', g.n());
    if (g.s) put_unary(out, 's', *g.s);
    if (g.t) put_unary(out, 't', *g.t);
    out += 'm';
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b) {
            std::uint8_t v = g.at(a, b);
            out += v == Graph::Hole ? '?' : static_cast<char>('0' + v);
        }
    return out;
}

std::shared_ptr<const TemplateWord> graph_template(int n, bool directed,
                                                   std::optional<int> s,
                                                   std::optional<int> t) {
    Graph g(n, directed);
    g.s = s;
    g.t = t;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.set(a, b, Graph::Hole);
    return std::make_shared<TemplateWord>(kGraphWordAlphabet, encode_graph_word(g));
}

Graph decode_graph_word(const std::string& word) {
    Cursor c(word);
    c.expect('g');
    char dir = c.peek();
    if (dir != 'd' && dir != 'u') throw PreconditionError("graph word: bad direction flag");
    ++c.pos;
    int n = c.unary('n');
    Graph g(n, dir == 'd');
    if (c.peek() == 's') g.s = c.unary('s');
    if (c.peek() == 't') g.t = c.unary('t');
    c.expect('m');
    std::string cells = c.take(static_cast<std::size_t>(n) * n);
    c.done();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            char ch = cells[static_cast<std::size_t>(a) * n + b];
            std::uint8_t v = ch == '?' ? Graph::Hole : ch == '1' ? 1 : ch == '0' ? 0 : 3;
            if (v == 3) throw PreconditionError("graph word: bad matrix cell");
            g.set(a, b, v);
        }
    if (!g.directed()) {
        // symmetry check: set() mirrored cells, so re-decode row-major
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                char ch = cells[static_cast<std::size_t>(a) * n + b];
                std::uint8_t v = ch == '?' ? Graph::Hole : static_cast<std::uint8_t>(ch - '0');
                if (g.at(a, b) != v)
                    throw PreconditionError("graph word: asymmetric undirected matrix");
            }
    }
    if ((g.s && *g.s >= n) || (g.t && *g.t >= n))
        throw PreconditionError("graph word: s/t out of range");
    return g;
}

// --- agen ------------------------------------------------------------------

std::string encode_agen_word(const GeneratorInstance& gi, const std::vector<int>& chosen) {
    std::string out = "a";
    out += gi.associative ? 's' : 'g';
    int u = gi.size();
    put_unary(out, 'n', u);
    out += 'o';
    for (int a = 0; a < u; ++a)
        for (int b = 0; b < u; ++b) {
            out.append(static_cast<std::size_t>(gi.table[a][b]) + 1, '.');
            out += ',';
        }
    put_unary(out, 'x', gi.target);
    out += 'c';
    std::string marks(u, '-');
    for (int cand : gi.candidates) marks[cand] = '0';
    for (int g : chosen) {
        if (marks[g] == '-') throw PreconditionError("agen word: chosen element not a candidate");
        marks[g] = '1';
    }
    out += marks;
    return out;
}

std::shared_ptr<const TemplateWord> agen_template(const GeneratorInstance& gi) {
    std::string w = encode_agen_word(gi, {});
    // candidate marks become holes
    std::size_t marks_at = w.size() - gi.size();
    for (std::size_t i = marks_at; i < w.size(); ++i)
        if (w[i] == '0') w[i] = '?';
    return std::make_shared<TemplateWord>(kAgenWordAlphabet, w);
}

std::pair<GeneratorInstance, std::vector<int>> decode_agen_word(const std::string& word) {
    Cursor c(word);
    c.expect('a');
    char flag = c.peek();
    if (flag != 's' && flag != 'g') throw PreconditionError("agen word: bad flag");
    ++c.pos;
    GeneratorInstance gi;
    gi.associative = flag == 's';
    int u = c.unary('n');
    c.expect('o');
    gi.table.assign(u, std::vector<int>(u, 0));
    for (int a = 0; a < u; ++a)
        for (int b = 0; b < u; ++b) {
            int dots = 0;
            while (c.peek() == '.') { ++dots; ++c.pos; }
            if (dots == 0) throw PreconditionError("agen word: empty table entry");
            c.expect(',');
            gi.table[a][b] = dots - 1;
        }
    gi.target = c.unary('x');
    c.expect('c');
    std::string marks = c.take(static_cast<std::size_t>(u));
    c.done();
    gi.names.resize(u);
    for (int i = 0; i < u; ++i) gi.names[i] = "u" + std::to_string(i);
    std::vector<int> chosen;
    for (int i = 0; i < u; ++i) {
        char m = marks[i];
        if (m == '-') continue;
        if (m == '?' || m == '0' || m == '1') {
            gi.candidates.push_back(i);
            if (m == '1') chosen.push_back(i);
        } else {
            throw PreconditionError("agen word: bad candidate mark");
        }
    }
    gi.validate();
    return {std::move(gi), std::move(chosen)};
}

}  // namespace parared
