#include "parared/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "parared/budget.hpp"

namespace parared {

int BooleanFormula::add(BfNode n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
}

int BooleanFormula::append_subtree(const BooleanFormula& src, int node) {
    const BfNode& n = src.nodes_[node];
    BfNode copy = n;
    if (n.left >= 0) copy.left = append_subtree(src, n.left);
    if (n.right >= 0) copy.right = append_subtree(src, n.right);
    return add(copy);
}

BooleanFormula BooleanFormula::constant(bool b) {
    BooleanFormula f;
    f.root_ = f.add({BfOp::Const, -1, b, -1, -1});
    return f;
}

BooleanFormula BooleanFormula::var(int index) {
    if (index < 0) throw PreconditionError("negative variable index");
    BooleanFormula f;
    f.root_ = f.add({BfOp::Var, index, false, -1, -1});
    f.variable_count_ = index + 1;
    return f;
}

BooleanFormula BooleanFormula::negate(BooleanFormula a) {
    BooleanFormula f;
    f.variable_count_ = a.variable_count_;
    int l = f.append_subtree(a, a.root_);
    f.root_ = f.add({BfOp::Not, -1, false, l, -1});
    return f;
}

static BooleanFormula make_binary(BfOp op, const BooleanFormula& a, const BooleanFormula& b);

BooleanFormula BooleanFormula::band(BooleanFormula a, BooleanFormula b) {
    return make_binary(BfOp::And, a, b);
}
BooleanFormula BooleanFormula::bor(BooleanFormula a, BooleanFormula b) {
    return make_binary(BfOp::Or, a, b);
}
BooleanFormula BooleanFormula::implies(BooleanFormula a, BooleanFormula b) {
    return make_binary(BfOp::Implies, a, b);
}

static BooleanFormula make_binary(BfOp op, const BooleanFormula& a, const BooleanFormula& b) {
    char head;
    switch (op) {
        case BfOp::And: head = 'A'; break;
        case BfOp::Or: head = 'O'; break;
        case BfOp::Implies: head = 'I'; break;
        default: throw PreconditionError("not a binary op");
    }
    int m = std::max(a.variable_count(), b.variable_count());
    return BooleanFormula::parse_prefix(head + a.to_prefix() + b.to_prefix(), m);
}

BooleanFormula BooleanFormula::bor_all(std::vector<BooleanFormula> parts) {
    if (parts.empty()) return constant(false);
    BooleanFormula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = bor(acc, parts[i]);
    return acc;
}

BooleanFormula BooleanFormula::band_all(std::vector<BooleanFormula> parts) {
    if (parts.empty()) return constant(true);
    BooleanFormula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = band(acc, parts[i]);
    return acc;
}

void BooleanFormula::set_variable_count(int m) {
    for (const BfNode& n : nodes_)
        if (n.op == BfOp::Var && n.var >= m)
            throw PreconditionError("variable index out of range");
    variable_count_ = m;
}

bool BooleanFormula::evaluate(const std::string& assignment) const {
    if (static_cast<int>(assignment.size()) != variable_count_)
        throw PreconditionError("assignment arity mismatch");
    if (root_ < 0) throw PreconditionError("empty formula");
    auto rec = [&](auto&& self, int idx) -> bool {
        const BfNode& n = nodes_[idx];
        switch (n.op) {
            case BfOp::Const: return n.value;
            case BfOp::Var: {
                char c = assignment[n.var];
                if (c != '0' && c != '1') throw PreconditionError("assignment has a hole");
                return c == '1';
            }
            case BfOp::Not: return !self(self, n.left);
            case BfOp::And: return self(self, n.left) && self(self, n.right);
            case BfOp::Or: return self(self, n.left) || self(self, n.right);
            case BfOp::Implies: return !self(self, n.left) || self(self, n.right);
        }
        throw std::logic_error("bad op");
    };
    return rec(rec, root_);
}

BooleanFormula BooleanFormula::substitute(const std::function<BooleanFormula(int)>& map,
                                          int new_variable_count) const {
    if (root_ < 0) throw PreconditionError("empty formula");
    auto rec = [&](auto&& self, int idx) -> std::string {
        const BfNode& n = nodes_[idx];
        switch (n.op) {
            case BfOp::Const: return n.value ? "T" : "F";
            case BfOp::Var: return map(n.var).to_prefix();
            case BfOp::Not: return "N" + self(self, n.left);
            case BfOp::And: return "A" + self(self, n.left) + self(self, n.right);
            case BfOp::Or: return "O" + self(self, n.left) + self(self, n.right);
            case BfOp::Implies: return "I" + self(self, n.left) + self(self, n.right);
        }
        throw std::logic_error("bad op");
    };
    return parse_prefix(rec(rec, root_), new_variable_count);
}

std::string BooleanFormula::to_prefix() const {
    if (root_ < 0) return "";
    auto rec = [&](auto&& self, int idx) -> std::string {
        const BfNode& n = nodes_[idx];
        switch (n.op) {
            case BfOp::Const: return n.value ? "T" : "F";
            case BfOp::Var: return "v" + std::string(n.var + 1, '.');
            case BfOp::Not: return "N" + self(self, n.left);
            case BfOp::And: return "A" + self(self, n.left) + self(self, n.right);
            case BfOp::Or: return "O" + self(self, n.left) + self(self, n.right);
            case BfOp::Implies: return "I" + self(self, n.left) + self(self, n.right);
        }
        throw std::logic_error("bad op");
    };
    return rec(rec, root_);
}

BooleanFormula BooleanFormula::parse_prefix(const std::string& text, int variable_count) {
    BooleanFormula f;
    std::size_t pos = 0;
    auto rec = [&](auto&& self) -> int {
        if (pos >= text.size()) throw PreconditionError("truncated formula");
        char c = text[pos++];
        switch (c) {
            case 'T': return f.add({BfOp::Const, -1, true, -1, -1});
            case 'F': return f.add({BfOp::Const, -1, false, -1, -1});
            case 'N': {
                int l = self(self);
                return f.add({BfOp::Not, -1, false, l, -1});
            }
            case 'A':
            case 'O':
            case 'I': {
                int l = self(self);
                int r = self(self);
                BfOp op = c == 'A' ? BfOp::And : c == 'O' ? BfOp::Or : BfOp::Implies;
                return f.add({op, -1, false, l, r});
            }
            case 'v': {
                int dots = 0;
                while (pos < text.size() && text[pos] == '.') { ++dots; ++pos; }
                if (dots == 0) throw PreconditionError("variable without index dots");
                return f.add({BfOp::Var, dots - 1, false, -1, -1});
            }
            default:
                throw PreconditionError(std::string("bad formula character: ") + c);
        }
    };
    f.root_ = rec(rec);
    if (pos != text.size()) throw PreconditionError("trailing formula text");
    int maxvar = -1;
    for (const BfNode& n : f.nodes_)
        if (n.op == BfOp::Var) maxvar = std::max(maxvar, n.var);
    if (variable_count < maxvar + 1)
        throw PreconditionError("variable index out of range");
    f.variable_count_ = variable_count;
    return f;
}

}  // namespace parared
