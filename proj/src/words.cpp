#include "parared/words.hpp"

#include <algorithm>

namespace parared {

bool is_instantiation_of(const std::string& s, const TemplateWord& t) {
    if (s.size() != t.size()) return false;
    const std::string& ts = t.symbols();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (ts[i] == '?') {
            if (s[i] != '0' && s[i] != '1') return false;
        } else if (s[i] != ts[i]) {
            return false;
        }
    }
    return true;
}

InstantiationWord union_instantiations(std::span<const InstantiationWord> items) {
    if (items.empty()) throw IncompatibleInstantiations("union of empty list");
    const InstantiationWord& first = items.front();
    for (const auto& it : items)
        if (!(it.tmpl() == first.tmpl()))
            throw IncompatibleInstantiations("instantiations of different templates");
    std::string out = first.tmpl().symbols();
    for (int p : first.tmpl().holes()) {
        char c = '0';
        for (const auto& it : items)
            if (it.symbols()[p] == '1') { c = '1'; break; }
        out[p] = c;
    }
    return InstantiationWord(first.tmpl_ptr(), std::move(out));
}

int weight(const InstantiationWord& s) {
    int w = 0;
    for (int p : s.tmpl().holes())
        if (s.symbols()[p] == '1') ++w;
    return w;
}

std::vector<InstantiationWord> all_weight_one_instantiations(
    const std::shared_ptr<const TemplateWord>& t) {
    std::vector<InstantiationWord> out;
    std::string base = t->symbols();
    for (int p : t->holes()) base[p] = '0';
    for (int p : t->holes()) {
        std::string w = base;
        w[p] = '1';
        out.emplace_back(t, std::move(w));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.symbols() < b.symbols();
    });
    return out;
}

}  // namespace parared
