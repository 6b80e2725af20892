#pragma once

#include <string>
#include <variant>

#include "parared/cellular.hpp"
#include "parared/formula.hpp"
#include "parared/generators.hpp"
#include "parared/graph.hpp"
#include "parared/lcs.hpp"
#include "parared/machines.hpp"
#include "parared/pebble.hpp"
#include "parared/projection.hpp"
#include "parared/rewriting.hpp"
#include "parared/unions.hpp"
#include "parared/words.hpp"

namespace parared {

// A formula optionally paired with an assignment (which may contain holes
// when the instance is a template).
struct BfInstance {
    BooleanFormula formula;
    std::string assignment;
};

using ProblemInstance =
    std::variant<Graph, BfInstance, BoundedTMInstance, TwoTapeTM, MultiHeadAutomaton,
                 CellularInstance, SequentialCellularInstance, ThresholdPebbleGame,
                 LcsInstance, GeneratorInstance, ReplacementSystem, CompatibleProjection,
                 FamilyUnionInstance, SubsetUnionInstance, WeightedUnionInstance>;

// File-format kind tag of an instance ("graph", "bf", "dtsc", ...).
std::string kind_of(const ProblemInstance& inst);

// The parameter value kappa(x) an instance declares (0 for unparameterized
// kinds).
long long parameter_of(const ProblemInstance& inst);

}  // namespace parared
