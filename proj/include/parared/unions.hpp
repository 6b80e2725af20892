#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "parared/formula.hpp"
#include "parared/generators.hpp"
#include "parared/graph.hpp"
#include "parared/words.hpp"

namespace parared {

// Base language a union problem is built over. Word is an opaque language
// whose oracle must be supplied by the caller.
enum class BaseKind {
    Word,
    Bf,
    Reach,
    DagReach,
    Cycle,
    UndirectedReach,
    Tree,
    Forest,
    UndirectedCycle,
    Agen,
    Gen,
};

const char* to_string(BaseKind k);
BaseKind base_kind_from_string(const std::string& s);
bool is_graph_base(BaseKind k);

// Choose one instantiation from each of the k families; is their union in
// the base language?
struct FamilyUnionInstance {
    BaseKind base = BaseKind::Word;
    std::shared_ptr<const TemplateWord> tmpl;
    std::vector<std::vector<InstantiationWord>> families;

    int k() const { return static_cast<int>(families.size()); }
    void validate() const;
};

// Choose a k-element subset of `elements`; is its union in the base
// language?
struct SubsetUnionInstance {
    BaseKind base = BaseKind::Word;
    std::shared_ptr<const TemplateWord> tmpl;
    std::vector<InstantiationWord> elements;
    int k = 0;

    void validate() const;
};

// Is some instantiation of weight exactly k in the base language?
struct WeightedUnionInstance {
    BaseKind base = BaseKind::Word;
    std::shared_ptr<const TemplateWord> tmpl;
    int k = 0;

    void validate() const;
};

// --- canonical word encodings of the union base problems ---------------
//
// bf     PREFIX=ASSIGNMENT        assignment slots carry ?/0/1
// graph  g d|u n... [s...] [t...] m CELLS   row-major matrix cells ?/0/1
// agen   a s|g n... o ENTRIES x... c MARKS  candidate marks ?/0/1, '-' other
//
// Unary runs use '.' (count = value+1 for indices). None of the structural
// characters collide with the reserved ?01.

extern const std::string kBfWordAlphabet;
extern const std::string kGraphWordAlphabet;
extern const std::string kAgenWordAlphabet;

std::string encode_bf_word(const BooleanFormula& f, const std::string& assignment);
std::shared_ptr<const TemplateWord> bf_template(const BooleanFormula& f);
std::pair<BooleanFormula, std::string> decode_bf_word(const std::string& word);

std::string encode_graph_word(const Graph& g);
std::shared_ptr<const TemplateWord> graph_template(int n, bool directed,
                                                   std::optional<int> s,
                                                   std::optional<int> t);
Graph decode_graph_word(const std::string& word);

// Marks: '?' (template) at candidate elements and '-' elsewhere; an
// instantiation replaces '?' by 0/1 and the 1-marked elements form G.
std::string encode_agen_word(const GeneratorInstance& gi, const std::vector<int>& chosen);
std::shared_ptr<const TemplateWord> agen_template(const GeneratorInstance& gi);
std::pair<GeneratorInstance, std::vector<int>> decode_agen_word(const std::string& word);

}  // namespace parared
