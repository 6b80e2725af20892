#pragma once

#include <functional>
#include <string>
#include <vector>

namespace parared {

// Propositional formulas as binary trees over and/or/not/implies, variable
// leaves and boolean constants. n-ary connectives are left-folded.
enum class BfOp { And, Or, Not, Implies, Var, Const };

struct BfNode {
    BfOp op;
    int var = -1;      // Var
    bool value = false;  // Const
    int left = -1;
    int right = -1;
};

class BooleanFormula {
public:
    BooleanFormula() = default;

    static BooleanFormula constant(bool b);
    static BooleanFormula var(int index);
    static BooleanFormula negate(BooleanFormula a);
    static BooleanFormula band(BooleanFormula a, BooleanFormula b);
    static BooleanFormula bor(BooleanFormula a, BooleanFormula b);
    static BooleanFormula implies(BooleanFormula a, BooleanFormula b);

    // Left-folded disjunction; an empty list is the constant false.
    static BooleanFormula bor_all(std::vector<BooleanFormula> parts);
    // Left-folded conjunction; an empty list is the constant true.
    static BooleanFormula band_all(std::vector<BooleanFormula> parts);

    int variable_count() const { return variable_count_; }
    void set_variable_count(int m);
    bool empty() const { return root_ < 0; }

    // assignment[i] ∈ {'0','1'} gives the value of variable i.
    bool evaluate(const std::string& assignment) const;

    // Replace each variable leaf by map(index); the result's variable count
    // is new_variable_count.
    BooleanFormula substitute(const std::function<BooleanFormula(int)>& map,
                              int new_variable_count) const;

    // Compact prefix encoding over {A,O,N,I,T,F,v,.}: A/O/N/I head their
    // operands, T/F are constants, a variable is 'v' followed by index+1
    // dots. Unambiguous and free of the reserved symbols ?01.
    std::string to_prefix() const;
    static BooleanFormula parse_prefix(const std::string& text, int variable_count);

    bool operator==(const BooleanFormula& o) const {
        return variable_count_ == o.variable_count_ && to_prefix() == o.to_prefix();
    }

private:
    int add(BfNode n);
    int append_subtree(const BooleanFormula& src, int node);

    std::vector<BfNode> nodes_;
    int root_ = -1;
    int variable_count_ = 0;
};

}  // namespace parared
