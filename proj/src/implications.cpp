#include "polyadic/implications.hpp"

#include "polyadic/enumeration.hpp"
#include "polyadic/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace polyadic {

Context Scope::apply(const Context& ctx) const {
  std::vector<bool> sliced(ctx.arity(), false);
  for (const auto& step : slices) {
    if (step.dim >= ctx.arity()) throw std::invalid_argument("scope slices a nonexistent dimension");
    if (sliced[step.dim]) throw std::invalid_argument("scope slices a dimension twice");
    sliced[step.dim] = true;
  }
  auto steps = slices;
  std::sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) { return a.dim > b.dim; });
  Context out = ctx;
  for (const auto& step : steps) out = slice(out, step.dim, step.keep);
  // Renumber the object side after removing sliced dimensions.
  std::vector<std::size_t> left;
  for (std::size_t d : this->left) {
    if (d >= ctx.arity() || sliced[d]) throw std::invalid_argument("scope object side names a sliced or missing dimension");
    left.push_back(d - static_cast<std::size_t>(std::count(sliced.begin(), sliced.begin() + d, true)));
  }
  if (out.arity() < 2) throw std::invalid_argument("scope leaves fewer than two dimensions");
  return flatten(out, Bipartition::from_left(out.arity(), std::move(left)));
}

namespace {

std::vector<CellSet> rows_of(const Context& ctx2) {
  std::vector<CellSet> rows;
  rows.reserve(ctx2.size(0));
  for (std::size_t o = 0; o < ctx2.size(0); ++o) rows.push_back(ctx2.description(o));
  return rows;
}

void require_dyadic(const Context& ctx2, const CellSet& attributes) {
  if (ctx2.arity() != 2) throw std::invalid_argument("expected a 2-context");
  if (attributes.size() != ctx2.size(1)) {
    throw std::invalid_argument("attribute set has " + std::to_string(attributes.size()) +
                                " entries, the context has " + std::to_string(ctx2.size(1)) + " attributes");
  }
}

}  // namespace

CellSet support(const Context& ctx2, const CellSet& attributes) {
  require_dyadic(ctx2, attributes);
  CellSet objects(ctx2.size(0));
  for (std::size_t o = 0; o < ctx2.size(0); ++o) {
    if (attributes.is_subset_of(ctx2.description(o))) objects.set(o);
  }
  return objects;
}

CellSet closure2(const Context& ctx2, const CellSet& attributes) {
  require_dyadic(ctx2, attributes);
  CellSet result(ctx2.size(1));
  result.set();
  for (std::size_t o = 0; o < ctx2.size(0); ++o) {
    CellSet row = ctx2.description(o);
    if (attributes.is_subset_of(row)) result &= row;
  }
  return result;
}

bool holds(const Context& ctx2, const CellSet& premise, const CellSet& conclusion) {
  require_dyadic(ctx2, conclusion);
  return conclusion.is_subset_of(closure2(ctx2, premise));
}

bool holds(const Context& ctx, const Implication& implication) {
  return holds(implication.scope.apply(ctx), implication.premise, implication.conclusion);
}

std::vector<Implication> dg_base(const Context& ctx2, std::size_t attribute_cap) {
  if (ctx2.arity() != 2) throw std::invalid_argument("expected a 2-context");
  const std::size_t m = ctx2.size(1);
  if (m > attribute_cap || m >= 63) {
    throw ResourceLimitError("implication base limited to " + std::to_string(attribute_cap) + " attributes, context has " +
                             std::to_string(m));
  }
  const ElementSet all = full_set(m);
  std::vector<ElementSet> rows;
  for (const auto& row : rows_of(ctx2)) {
    ElementSet mask = 0;
    for (std::size_t a = row.find_first(); a != CellSet::npos; a = row.find_next(a)) mask |= ElementSet{1} << a;
    rows.push_back(mask);
  }
  auto closure = [&](ElementSet x) {
    ElementSet c = all;
    for (ElementSet r : rows) {
      if ((x & r) == x) c &= r;
    }
    return c;
  };
  std::vector<std::pair<ElementSet, ElementSet>> base;
  // Closure under the implications found so far, firing only on proper subsets.
  auto pseudo_closure = [&](ElementSet x) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [premise, concl] : base) {
        if ((premise & x) == premise && premise != x && (concl & x) != concl) {
          x |= concl;
          changed = true;
        }
      }
    }
    return x;
  };
  auto next = [&](ElementSet a) -> std::optional<ElementSet> {
    for (std::size_t i = m; i-- > 0;) {
      const ElementSet bit = ElementSet{1} << i;
      if (a & bit) {
        a &= ~bit;
        continue;
      }
      const ElementSet b = pseudo_closure(a | bit);
      if (((b & ~a) & (bit - 1)) == 0) return b;
    }
    return std::nullopt;
  };

  ElementSet a = 0;
  while (true) {
    const ElementSet c = closure(a);
    if (c != a) base.emplace_back(a, c);
    if (a == all) break;
    auto n = next(a);
    if (!n) break;
    a = *n;
  }

  std::vector<Implication> out;
  for (const auto& [premise, concl] : base) {
    Implication imp;
    imp.premise = CellSet(m);
    imp.conclusion = CellSet(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (has_element(premise, i)) imp.premise.set(i);
      if (has_element(concl & ~premise, i)) imp.conclusion.set(i);
    }
    out.push_back(std::move(imp));
  }
  return out;
}

StructuralClosure::StructuralClosure(const Context& ctx) {
  if (ctx.arity() < 2) throw std::invalid_argument("structural closure needs a context of arity at least 2");
  feature_shape_ = ctx.feature_shape();
  const auto cs = enumerate_concepts(ctx);
  for (const auto& c : cs) {
    if (c.components.front() == 0) continue;
    Feature f = feature_of(c);
    const bool nonempty_cells = std::all_of(f.components.begin(), f.components.end(), [](ElementSet e) { return e; });
    if (nonempty_cells) supported_.push_back(std::move(f));
  }
}

CellSet StructuralClosure::operator()(const CellSet& cells) const {
  if (cells.size() != feature_shape_.cell_count()) {
    throw std::invalid_argument("cell set does not match the feature space of the context");
  }
  CellSet current = cells;
  CellSet all(current.size());
  all.set();
  while (true) {
    CellSet grown = current;
    for_each_concept(feature_shape_, current, [&](std::span<const ElementSet> box) {
      if (std::any_of(box.begin(), box.end(), [](ElementSet e) { return e == 0; })) return;
      std::vector<ElementSet> hull(box.size(), ~ElementSet{0});
      bool any = false;
      for (const auto& f : supported_) {
        bool contains = true;
        for (std::size_t k = 0; k < box.size() && contains; ++k) contains = (box[k] & f.components[k]) == box[k];
        if (!contains) continue;
        any = true;
        for (std::size_t k = 0; k < box.size(); ++k) hull[k] &= f.components[k];
      }
      if (!any) {
        grown = all;
        return;
      }
      grown |= feature_shape_.box_cells(hull);
    });
    if (grown == current) return current;
    current = std::move(grown);
  }
}

CellSet struct_closure(const Context& ctx, const CellSet& cells) { return StructuralClosure(ctx)(cells); }

std::string to_string(Classification c) {
  switch (c) {
    case Classification::structural:
      return "structural";
    case Classification::contextual:
      return "contextual";
    case Classification::not_holding:
      return "not-holding";
  }
  return "unknown";
}

ClassificationResult classify(const Context& ctx, const Implication& implication) {
  return classify(ctx, StructuralClosure(ctx), implication);
}

ClassificationResult classify(const Context& ctx, const StructuralClosure& closure, const Implication& implication) {
  if (!implication.scope.is_objects_vs_rest()) {
    throw std::invalid_argument("classification needs an implication over the objects-vs-rest flattening");
  }
  const Context ctx2 = implication.scope.apply(ctx);
  ClassificationResult result;
  result.support = support(ctx2, implication.premise);
  if (!holds(ctx2, implication.premise, implication.conclusion)) {
    result.kind = Classification::not_holding;
  } else if (implication.conclusion.is_subset_of(closure(implication.premise))) {
    result.kind = Classification::structural;
  } else {
    result.kind = Classification::contextual;
  }
  return result;
}

namespace {

// Descriptions become objects o1, o2, ... in descending bit string order.
Context from_descriptions(const Context& ctx, std::vector<CellSet> descriptions) {
  const Shape fshape = ctx.feature_shape();
  if (descriptions.empty()) descriptions.emplace_back(fshape.cell_count());
  auto bitstring = [](const CellSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += s.test(i) ? '1' : '0';
    return out;
  };
  std::sort(descriptions.begin(), descriptions.end(),
            [&](const CellSet& a, const CellSet& b) { return bitstring(a) > bitstring(b); });

  std::vector<std::vector<std::string>> labels = ctx.all_labels();
  labels[0].clear();
  for (std::size_t i = 1; i <= descriptions.size(); ++i) labels[0].push_back("o" + std::to_string(i));
  const std::size_t width = fshape.cell_count();
  CellSet relation(descriptions.size() * width);
  for (std::size_t o = 0; o < descriptions.size(); ++o) {
    for (std::size_t i = descriptions[o].find_first(); i != CellSet::npos; i = descriptions[o].find_next(i)) {
      relation.set(o * width + i);
    }
  }
  return Context(std::move(labels), std::move(relation));
}

struct FeatureCells {
  std::set<CellSet> all;      // cells of every feature, including empty ones
  std::vector<CellSet> placed;  // features with a nonempty extent and at least one cell
};

FeatureCells feature_cells(const Context& ctx, const ConceptSet& cs) {
  const Shape fshape = ctx.feature_shape();
  FeatureCells out;
  for (const auto& c : cs) {
    CellSet cells = fshape.box_cells(feature_of(c).components);
    out.all.insert(cells);
    // Features with an empty extent or no cells never show up in a description.
    if (c.components.front() != 0 && cells.any()) out.placed.push_back(std::move(cells));
  }
  return out;
}

// Unions of the classes of `boxes` under "the common cells are not a feature".
std::vector<CellSet> linked_unions(const std::vector<CellSet>& boxes, const std::set<CellSet>& feature_set,
                                   std::size_t width) {
  std::vector<std::size_t> parent(boxes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (!feature_set.count(boxes[i] & boxes[j])) parent[find(i)] = find(j);
    }
  }
  std::vector<CellSet> unions(boxes.size(), CellSet(width));
  std::vector<bool> used(boxes.size(), false);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    unions[find(i)] |= boxes[i];
    used[find(i)] = true;
  }
  std::vector<CellSet> out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (used[i]) out.push_back(std::move(unions[i]));
  }
  return out;
}

void sort_unique(std::vector<CellSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

Context canonical_context(const Context& ctx) {
  if (ctx.arity() < 2) throw std::invalid_argument("canonical context needs arity at least 2");
  const std::size_t width = ctx.feature_shape().cell_count();
  const auto cs = enumerate_concepts(ctx);
  const auto target = features(cs);
  const FeatureCells fc = feature_cells(ctx, cs);

  Context linked = from_descriptions(ctx, linked_unions(fc.placed, fc.all, width));
  if (features(enumerate_concepts(linked)) == target) return linked;

  // Linking over the whole feature set can merge features that no object
  // holds together and lose some of them. Refine the given objects instead:
  // split an object along the links among its own features, or drop it,
  // whenever the features stay the same, until nothing changes.
  auto keeps_features = [&](const std::vector<CellSet>& descriptions) {
    return features(enumerate_concepts(from_descriptions(ctx, descriptions))) == target;
  };
  std::vector<CellSet> objects;
  for (std::size_t o = 0; o < ctx.size(0); ++o) objects.push_back(ctx.description(o));
  sort_unique(objects);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < objects.size() && !changed; ++i) {
      std::vector<CellSet> inside;
      for (const auto& f : fc.placed) {
        if (f.is_subset_of(objects[i])) inside.push_back(f);
      }
      const auto parts = linked_unions(inside, fc.all, width);
      // a part equal to the whole object would make the split a no-op
      if (std::find(parts.begin(), parts.end(), objects[i]) != parts.end()) continue;
      std::vector<CellSet> trial = objects;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      trial.insert(trial.end(), parts.begin(), parts.end());
      sort_unique(trial);
      if (keeps_features(trial)) {
        objects = std::move(trial);
        changed = true;
      }
    }
    for (std::size_t i = 0; i < objects.size() && !changed && objects.size() > 1; ++i) {
      std::vector<CellSet> trial = objects;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (keeps_features(trial)) {
        objects = std::move(trial);
        changed = true;
      }
    }
  }
  return from_descriptions(ctx, std::move(objects));
}

bool lattice_equivalent(const Context& first, const Context& second) {
  if (first.arity() != second.arity()) throw std::invalid_argument("contexts have different arity");
  for (std::size_t d = 1; d < first.arity(); ++d) {
    if (first.labels(d) != second.labels(d)) {
      throw std::invalid_argument("dimension " + std::to_string(d + 1) + " differs between the contexts");
    }
  }
  return features(enumerate_concepts(first)) == features(enumerate_concepts(second));
}

}  // namespace polyadic
