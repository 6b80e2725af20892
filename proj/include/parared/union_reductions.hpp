#pragma once

#include "parared/projection.hpp"
#include "parared/rewriting.hpp"
#include "parared/unions.hpp"

namespace parared {

// Constructions turning compatible projections and union problems into one
// another. Each transform records/asserts its parameter bound.

// Builds the family-union instance whose template is the projection's output
// word with '?' at the choice-bit positions, and whose i-th set ranges over
// the i-th block's values: positions fed by other blocks are set to 0,
// positions fed by block i follow the bit map. Block values are enumerated
// as width-bit strings in increasing binary order.
FamilyUnionInstance projection_to_family_union(const CompatibleProjection& p);

// Adds one fresh tag variable per family member and conjoins the
// one-per-family constraint: phi' = phi ∧ ⋀_i ⋁_j v_ij. Tag variables are
// numbered family by family after the original variables; each output
// element sets exactly its own tag. k is unchanged.
SubsetUnionInstance family_to_subset_bf(const FamilyUnionInstance& inst);

// Replaces each variable occurrence by the disjunction of the fresh
// selector variables of the elements setting it (empty disjunction =
// false); the output asks for a weight-k instantiation of the n selector
// variables. k is unchanged.
WeightedUnionInstance subset_to_weighted_bf(const SubsetUnionInstance& inst);

// Chain gadget: k new vertices per ordered vertex pair; each element
// contributes its family's chain link everywhere and closes chains only for
// its own edges. Forests use the triangle gadget instead. k is unchanged.
// New vertices are numbered n + (a*n + b)*k + (i-1); forest triples follow
// the originals grouped by (family, i<j) pairs.
SubsetUnionInstance family_to_subset_graph(const FamilyUnionInstance& inst);

// The replacement system of the family->subset generator construction, over
// tokens: original elements, e1..ek, x', error.
ReplacementSystem agen_family_rules(const GeneratorInstance& gi, int k);

// Irreducible representatives of the system, in the documented order:
// empty, single letters of U, e-runs e_i..e_j by (i,j), x', u-runs by
// (u, i, j), error. Validated rule-by-rule; count asserted against
// 1 + |U'|(k^2+1).
std::vector<std::vector<int>> agen_family_representatives(const ReplacementSystem& rules,
                                                          const GeneratorInstance& gi, int k);

SubsetUnionInstance family_to_subset_agen(const FamilyUnionInstance& inst);

// Selector construction: candidates are the selectors plus end, counter and
// seal; the target is x·end·seal; the parameter becomes k+3.
WeightedUnionInstance subset_to_weighted_agen(const SubsetUnionInstance& inst);

// The replacement system of the subset->weighted construction (exposed for
// the confluence tests).
ReplacementSystem agen_selector_rules(const GeneratorInstance& gi,
                                      const std::vector<std::vector<int>>& selections);

}  // namespace parared
