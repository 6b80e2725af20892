#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "parared/generators.hpp"
#include "parared/lcs.hpp"
#include "parared/projection.hpp"
#include "parared/rewriting.hpp"

namespace parared {

void LcsInstance::validate() const {
    if (l < 0) throw PreconditionError("lcs: negative target length");
    std::set<std::string> names(alphabet.begin(), alphabet.end());
    if (names.size() != alphabet.size()) throw PreconditionError("lcs: duplicate symbol");
    for (const auto& s : alphabet) {
        if (s.empty()) throw PreconditionError("lcs: empty symbol");
        for (char c : s)
            if (isspace(static_cast<unsigned char>(c)))
                throw PreconditionError("lcs: symbol contains whitespace");
    }
    for (const auto& w : strings)
        for (int sym : w)
            if (sym < 0 || sym >= static_cast<int>(alphabet.size()))
                throw PreconditionError("lcs: symbol index out of range");
}

bool LcsInstance::injective() const {
    for (const auto& w : strings) {
        std::set<int> seen;
        for (int sym : w)
            if (!seen.insert(sym).second) return false;
    }
    return true;
}

void ReplacementSystem::validate() const {
    std::set<std::string> names(alphabet.begin(), alphabet.end());
    if (names.size() != alphabet.size()) throw PreconditionError("rs: duplicate symbol");
    for (const auto& s : alphabet)
        if (s.empty()) throw PreconditionError("rs: empty symbol");
    for (const auto& [lhs, rhs] : rules) {
        if (lhs.empty()) throw PreconditionError("rs: empty rule lhs");
        for (int t : lhs)
            if (t < 0 || t >= static_cast<int>(alphabet.size()))
                throw PreconditionError("rs: rule symbol out of range");
        for (int t : rhs)
            if (t < 0 || t >= static_cast<int>(alphabet.size()))
                throw PreconditionError("rs: rule symbol out of range");
    }
}

int ReplacementSystem::token(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return static_cast<int>(i);
    return -1;
}

std::string ReplacementSystem::render(const std::vector<int>& word) const {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += alphabet.at(word[i]);
    }
    return out;
}

std::vector<int> ReplacementSystem::parse_word(const std::string& text) const {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int t = token(tok);
        if (t < 0) throw PreconditionError("rs: unknown token " + tok);
        out.push_back(t);
    }
    return out;
}

void GeneratorInstance::validate() const {
    int u = size();
    if (u <= 0) throw PreconditionError("gen: empty universe");
    if (static_cast<int>(table.size()) != u) throw PreconditionError("gen: table rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != u) throw PreconditionError("gen: table cols");
        for (int v : row)
            if (v < 0 || v >= u) throw PreconditionError("gen: table entry out of range");
    }
    if (target < 0 || target >= u) throw PreconditionError("gen: target out of range");
    std::set<int> cs;
    for (int c : candidates) {
        if (c < 0 || c >= u) throw PreconditionError("gen: candidate out of range");
        if (!cs.insert(c).second) throw PreconditionError("gen: duplicate candidate");
    }
    if (k < 0) throw PreconditionError("gen: negative k");
    if (associative) {
        if (u <= 32) {
            for (int a = 0; a < u; ++a)
                for (int b = 0; b < u; ++b)
                    for (int c = 0; c < u; ++c)
                        if (table[table[a][b]][c] != table[a][table[b][c]])
                            throw PreconditionError("gen: operation not associative");
        } else {
            std::mt19937_64 rng(0x5eed);
            for (int i = 0; i < 100000; ++i) {
                int a = static_cast<int>(rng() % u), b = static_cast<int>(rng() % u),
                    c = static_cast<int>(rng() % u);
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw PreconditionError("gen: operation not associative");
            }
        }
    }
}

void CompatibleProjection::validate() const {
    for (char c : alphabet)
        if (is_reserved_symbol(c)) throw PreconditionError("projection: reserved symbol in alphabet");
    if (blocks < 1 || block_width < 1)
        throw PreconditionError("projection: block/width mismatch");
    for (char c : input)
        if (alphabet.find(c) == std::string::npos)
            throw PreconditionError("projection: input outside alphabet");
    for (char c : advice)
        if (alphabet.find(c) == std::string::npos)
            throw PreconditionError("projection: advice outside alphabet");
    int fixed = static_cast<int>(input.size() + advice.size());
    int bits = blocks * block_width;
    for (const auto& p : positions) {
        switch (p.kind) {
            case Position::Const:
                if (alphabet.find(p.constant) == std::string::npos)
                    throw PreconditionError("projection: constant outside alphabet");
                break;
            case Position::FromInput:
                if (p.index < 0 || p.index >= fixed)
                    throw PreconditionError("projection: input index out of range");
                break;
            case Position::FromBit:
                if (p.index < 0 || p.index >= bits)
                    throw PreconditionError("projection: block/width mismatch");
                if ((p.when0 != '0' && p.when0 != '1') || (p.when1 != '0' && p.when1 != '1'))
                    throw PreconditionError("projection: bit map must produce 0/1");
                break;
        }
    }
}

std::string CompatibleProjection::apply(const std::string& bits) const {
    if (static_cast<int>(bits.size()) != blocks * block_width)
        throw PreconditionError("projection: bit string length mismatch");
    std::string fixed = input + advice;
    std::string out;
    out.reserve(positions.size());
    for (const auto& p : positions) {
        switch (p.kind) {
            case Position::Const: out += p.constant; break;
            case Position::FromInput: out += fixed[p.index]; break;
            case Position::FromBit: out += bits[p.index] == '1' ? p.when1 : p.when0; break;
        }
    }
    return out;
}

TemplateWord CompatibleProjection::template_word() const {
    std::string fixed = input + advice;
    std::string out;
    out.reserve(positions.size());
    for (const auto& p : positions) {
        switch (p.kind) {
            case Position::Const: out += p.constant; break;
            case Position::FromInput: out += fixed[p.index]; break;
            case Position::FromBit: out += '?'; break;
        }
    }
    return TemplateWord(alphabet, out);
}

}  // namespace parared
