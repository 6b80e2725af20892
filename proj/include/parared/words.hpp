#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parared {

// '?' marks holes in templates; '0'/'1' fill holes in instantiations.
// Base alphabets must avoid all three.
inline bool is_reserved_symbol(char c) { return c == '?' || c == '0' || c == '1'; }

struct IncompatibleInstantiations : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A word over Sigma ∪ {?}. Sigma is the declared base alphabet of the
// instance the template belongs to.
class TemplateWord {
public:
    TemplateWord() = default;

    TemplateWord(std::string alphabet, std::string symbols)
        : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
        for (char c : alphabet_)
            if (is_reserved_symbol(c))
                throw BadWord("base alphabet contains reserved symbol");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            char c = symbols_[i];
            if (c == '0' || c == '1') throw BadWord("template contains 0/1");
            if (c == '?')
                holes_.push_back(static_cast<int>(i));
            else if (alphabet_.find(c) == std::string::npos)
                throw BadWord(std::string("template symbol outside alphabet: ") + c);
        }
    }

    const std::string& alphabet() const { return alphabet_; }
    const std::string& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    const std::vector<int>& holes() const { return holes_; }

    bool operator==(const TemplateWord& o) const {
        return alphabet_ == o.alphabet_ && symbols_ == o.symbols_;
    }

private:
    std::string alphabet_;
    std::string symbols_;
    std::vector<int> holes_;
};

// True iff s fills exactly the holes of t with 0/1 and copies t elsewhere.
bool is_instantiation_of(const std::string& s, const TemplateWord& t);

// An instantiation keeps a handle on its template; many instantiations of
// one union instance share the same template object.
class InstantiationWord {
public:
    InstantiationWord() = default;

    InstantiationWord(std::shared_ptr<const TemplateWord> tmpl, std::string symbols)
        : tmpl_(std::move(tmpl)), symbols_(std::move(symbols)) {
        if (!tmpl_) throw BadWord("instantiation without template");
        if (!is_instantiation_of(symbols_, *tmpl_))
            throw BadWord("word does not instantiate the template");
    }

    const TemplateWord& tmpl() const { return *tmpl_; }
    const std::shared_ptr<const TemplateWord>& tmpl_ptr() const { return tmpl_; }
    const std::string& symbols() const { return symbols_; }

    bool operator==(const InstantiationWord& o) const {
        return symbols_ == o.symbols_ && tmpl() == o.tmpl();
    }

private:
    std::shared_ptr<const TemplateWord> tmpl_;
    std::string symbols_;
};

// Bitwise or over the hole positions; non-hole positions come from the
// shared template. Throws IncompatibleInstantiations on mixed templates,
// or when the list is empty.
InstantiationWord union_instantiations(std::span<const InstantiationWord> items);

// Count of '1' symbols (all of which sit at hole positions).
int weight(const InstantiationWord& s);

// Every instantiation of t with exactly one '1', in ascending lexicographic
// word order.
std::vector<InstantiationWord> all_weight_one_instantiations(
    const std::shared_ptr<const TemplateWord>& t);

}  // namespace parared
