#include "polyadic/transforms.hpp"

#include <algorithm>
#include <set>

namespace polyadic {

Bipartition Bipartition::from_left(std::size_t arity, std::vector<std::size_t> left) {
  Bipartition split;
  std::sort(left.begin(), left.end());
  split.left = std::move(left);
  for (std::size_t d = 0; d < arity; ++d) {
    if (!std::binary_search(split.left.begin(), split.left.end(), d)) split.right.push_back(d);
  }
  split.validate(arity);
  return split;
}

void Bipartition::validate(std::size_t arity) const {
  if (left.empty() || right.empty()) throw std::invalid_argument("both sides of a bipartition must be nonempty");
  std::vector<bool> seen(arity, false);
  for (const auto* side : {&left, &right}) {
    for (std::size_t d : *side) {
      if (d >= arity) throw std::invalid_argument("bipartition names dimension " + std::to_string(d + 1) +
                                                  " of a " + std::to_string(arity) + "-context");
      if (seen[d]) throw std::invalid_argument("dimension " + std::to_string(d + 1) + " listed twice");
      seen[d] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("bipartition does not cover every dimension");
  }
}

std::string tuple_label(const std::vector<std::string>& parts) {
  if (parts.size() == 1) return parts.front();
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + ')';
}

namespace {

// Labels and the sub-tuples they stand for, for the product over `dims`.
std::vector<std::string> product_labels(const Context& ctx, const std::vector<std::size_t>& dims,
                                        std::vector<Tuple>& tuples) {
  std::vector<std::size_t> sizes;
  for (std::size_t d : dims) sizes.push_back(ctx.size(d));
  const Shape shape(sizes);
  std::vector<std::string> labels;
  labels.reserve(shape.cell_count());
  tuples.clear();
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    Tuple t = shape.tuple_of(i);
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < dims.size(); ++k) parts.push_back(ctx.label(dims[k], t[k]));
    labels.push_back(tuple_label(parts));
    tuples.push_back(std::move(t));
  }
  return labels;
}

}  // namespace

Context flatten(const Context& ctx, const Bipartition& split) {
  split.validate(ctx.arity());
  std::vector<Tuple> left_tuples;
  std::vector<Tuple> right_tuples;
  auto left_labels = product_labels(ctx, split.left, left_tuples);
  auto right_labels = product_labels(ctx, split.right, right_tuples);
  const std::size_t rows = left_labels.size();
  const std::size_t cols = right_labels.size();
  CellSet relation(rows * cols);
  Tuple full(ctx.arity());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < split.left.size(); ++k) full[split.left[k]] = left_tuples[r][k];
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t k = 0; k < split.right.size(); ++k) full[split.right[k]] = right_tuples[c][k];
      if (ctx.contains_cell(ctx.shape().index_of(full))) relation.set(r * cols + c);
    }
  }
  return Context({std::move(left_labels), std::move(right_labels)}, std::move(relation));
}

Context slice(const Context& ctx, std::size_t dim, const std::vector<std::size_t>& keep) {
  if (dim >= ctx.arity()) throw std::invalid_argument("slice dimension " + std::to_string(dim + 1) + " out of range");
  if (ctx.arity() < 2) throw std::invalid_argument("cannot slice a 1-context");
  for (std::size_t x : keep) {
    if (x >= ctx.size(dim)) throw std::invalid_argument("slice element out of range");
  }
  std::vector<std::vector<std::string>> labels;
  std::vector<std::size_t> sizes;
  for (std::size_t d = 0; d < ctx.arity(); ++d) {
    if (d == dim) continue;
    labels.push_back(ctx.labels(d));
    sizes.push_back(ctx.size(d));
  }
  const Shape shape(sizes);
  CellSet relation(shape.cell_count());
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    Tuple t = shape.tuple_of(i);
    t.insert(t.begin() + static_cast<std::ptrdiff_t>(dim), 0);
    bool all = true;
    for (std::size_t x : keep) {
      t[dim] = x;
      if (!ctx.contains_cell(ctx.shape().index_of(t))) {
        all = false;
        break;
      }
    }
    if (all) relation.set(i);
  }
  return Context(std::move(labels), std::move(relation));
}

Context direct_sum(const Context& first, const Context& second) {
  if (first.arity() != second.arity()) {
    throw std::invalid_argument("direct sum needs equal arity, got " + std::to_string(first.arity()) + " and " +
                                std::to_string(second.arity()));
  }
  const std::size_t n = first.arity();
  std::vector<std::vector<std::string>> labels(n);
  for (std::size_t d = 0; d < n; ++d) {
    const auto& a = first.labels(d);
    const auto& b = second.labels(d);
    const std::set<std::string> in_a(a.begin(), a.end());
    bool collision = false;
    for (const auto& l : b) collision = collision || in_a.count(l);
    for (const auto& l : a) labels[d].push_back(collision ? l + "#1" : l);
    for (const auto& l : b) labels[d].push_back(collision ? l + "#2" : l);
  }
  std::vector<std::size_t> sizes;
  for (std::size_t d = 0; d < n; ++d) sizes.push_back(first.size(d) + second.size(d));
  const Shape shape(sizes);
  CellSet relation(shape.cell_count());
  Tuple local(n);
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    const Tuple t = shape.tuple_of(i);
    std::size_t from_first = 0;
    for (std::size_t d = 0; d < n; ++d) from_first += t[d] < first.size(d);
    bool present;
    if (from_first == n) {
      present = first.contains(t);
    } else if (from_first == 0) {
      for (std::size_t d = 0; d < n; ++d) local[d] = t[d] - first.size(d);
      present = second.contains(local);
    } else {
      present = true;
    }
    if (present) relation.set(i);
  }
  return Context(std::move(labels), std::move(relation));
}

}  // namespace polyadic
