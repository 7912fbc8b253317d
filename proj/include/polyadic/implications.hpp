#pragma once

#include "polyadic/context.hpp"

#include <string>
#include <vector>

namespace polyadic {

/// Restrict dimension `dim` to the tuples present for every element of `keep`.
struct SliceStep {
  std::size_t dim = 0;
  std::vector<std::size_t> keep;
};

/// Recipe turning an n-context into the 2-context an implication is stated
/// over: slice first, then flatten with `left` as the object side. Dimension
/// indices refer to the original context. The default is objects vs. rest.
struct Scope {
  std::vector<SliceStep> slices;
  std::vector<std::size_t> left{0};

  bool is_objects_vs_rest() const { return slices.empty() && left == std::vector<std::size_t>{0}; }
  Context apply(const Context& ctx) const;
};

struct Implication {
  CellSet premise;
  CellSet conclusion;
  Scope scope;
};

/// X'' in a 2-context; every attribute when no object has all of X.
CellSet closure2(const Context& ctx2, const CellSet& attributes);
/// Objects whose row contains every attribute of `attributes`.
CellSet support(const Context& ctx2, const CellSet& attributes);

bool holds(const Context& ctx2, const CellSet& premise, const CellSet& conclusion);
/// Applies the implication's scope to `ctx` first.
bool holds(const Context& ctx, const Implication& implication);

inline constexpr std::size_t kDefaultBaseAttributeCap = 20;

/// Duquenne-Guigues base of a 2-context, premises in lectic order. Each
/// conclusion is the closure of its premise minus the premise.
std::vector<Implication> dg_base(const Context& ctx2, std::size_t attribute_cap = kDefaultBaseAttributeCap);

/// Closure of cell sets over dimensions 2..n under the box implications
/// fixed by the concept features. For every nonempty box B inside the
/// current set, the intersection of all features with nonempty extent that
/// contain B is added (every cell when no such feature exists). Only the
/// feature set is consulted, so the result is the same for every context
/// with the same features.
class StructuralClosure {
 public:
  explicit StructuralClosure(const Context& ctx);

  CellSet operator()(const CellSet& cells) const;
  const std::vector<Feature>& supported_features() const { return supported_; }

 private:
  Shape feature_shape_;
  std::vector<Feature> supported_;
};

CellSet struct_closure(const Context& ctx, const CellSet& cells);

enum class Classification { structural, contextual, not_holding };

std::string to_string(Classification c);

struct ClassificationResult {
  Classification kind = Classification::not_holding;
  CellSet support;  // objects whose description contains the premise
};

/// The implication must use the objects-vs-rest scope.
ClassificationResult classify(const Context& ctx, const Implication& implication);
ClassificationResult classify(const Context& ctx, const StructuralClosure& closure, const Implication& implication);

/// A context with the same concept features whose objects are the classes
/// of features that must share an object: two features are linked when the
/// cells they have in common are not the cells of any feature. When those
/// classes lose a feature, the objects of `ctx` are split along the same
/// links and redundant ones dropped while the features stay unchanged.
Context canonical_context(const Context& ctx);

/// True iff both contexts produce the same set of concept features.
/// Throws std::invalid_argument unless dimensions 2..n carry the same labels.
bool lattice_equivalent(const Context& first, const Context& second);

}  // namespace polyadic
