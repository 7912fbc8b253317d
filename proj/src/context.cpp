#include "polyadic/context.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace polyadic {

Shape::Shape(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)), strides_(sizes_.size()) {
  std::size_t stride = 1;
  for (std::size_t d = sizes_.size(); d-- > 0;) {
    if (sizes_[d] == 0) throw std::invalid_argument("dimension sizes must be at least 1");
    strides_[d] = stride;
    if (stride > (std::size_t{1} << 40) / sizes_[d]) {
      throw ResourceLimitError("context has too many cells");
    }
    stride *= sizes_[d];
  }
  cell_count_ = stride;
}

std::size_t Shape::index_of(std::span<const std::size_t> tuple) const {
  if (tuple.size() != sizes_.size()) {
    throw std::invalid_argument("tuple arity " + std::to_string(tuple.size()) +
                                " does not match context arity " + std::to_string(sizes_.size()));
  }
  std::size_t index = 0;
  for (std::size_t d = 0; d < tuple.size(); ++d) {
    if (tuple[d] >= sizes_[d]) {
      throw std::invalid_argument("index " + std::to_string(tuple[d]) + " out of range in dimension " +
                                  std::to_string(d + 1));
    }
    index += tuple[d] * strides_[d];
  }
  return index;
}

Tuple Shape::tuple_of(std::size_t index) const {
  Tuple t(sizes_.size());
  for (std::size_t d = 0; d < sizes_.size(); ++d) {
    t[d] = index / strides_[d];
    index %= strides_[d];
  }
  return t;
}

CellSet Shape::box_cells(std::span<const ElementSet> components) const {
  if (components.size() != sizes_.size()) throw std::invalid_argument("box arity mismatch");
  CellSet cells(cell_count_);
  for (ElementSet c : components) {
    if (c == 0) return cells;
  }
  // Walk the box as an odometer over the set bits of each component.
  std::vector<std::vector<std::size_t>> members(sizes_.size());
  for (std::size_t d = 0; d < sizes_.size(); ++d) {
    for (std::size_t e = 0; e < sizes_[d]; ++e) {
      if (has_element(components[d], e)) members[d].push_back(e);
    }
    if (members[d].empty()) return cells;
  }
  std::vector<std::size_t> pos(sizes_.size(), 0);
  while (true) {
    std::size_t index = 0;
    for (std::size_t d = 0; d < sizes_.size(); ++d) index += members[d][pos[d]] * strides_[d];
    cells.set(index);
    std::size_t d = sizes_.size();
    while (d > 0) {
      --d;
      if (++pos[d] < members[d].size()) break;
      pos[d] = 0;
      if (d == 0) return cells;
    }
    if (sizes_.empty()) return cells;
  }
}

std::vector<std::string> numeric_labels(std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Context::Context(std::vector<std::vector<std::string>> labels, CellSet relation)
    : labels_(std::move(labels)), relation_(std::move(relation)) {
  if (labels_.empty()) throw std::invalid_argument("a context needs at least one dimension");
  std::vector<std::size_t> sizes;
  for (std::size_t d = 0; d < labels_.size(); ++d) {
    std::set<std::string> seen;
    for (const auto& l : labels_[d]) {
      if (l.empty()) throw std::invalid_argument("empty element label in dimension " + std::to_string(d + 1));
      if (!seen.insert(l).second) {
        throw std::invalid_argument("duplicate label '" + l + "' in dimension " + std::to_string(d + 1));
      }
    }
    sizes.push_back(labels_[d].size());
  }
  shape_ = Shape(std::move(sizes));
  if (relation_.size() != shape_.cell_count()) {
    throw std::invalid_argument("relation size does not match the dimension sizes");
  }
}

Context Context::empty(std::vector<std::size_t> sizes) {
  std::vector<std::vector<std::string>> labels;
  for (std::size_t s : sizes) labels.push_back(numeric_labels(s));
  Shape shape(sizes);
  return Context(std::move(labels), CellSet(shape.cell_count()));
}

Context Context::from_tuples(std::vector<std::vector<std::string>> labels, std::span<const Tuple> tuples) {
  std::vector<std::size_t> sizes;
  for (const auto& l : labels) sizes.push_back(l.size());
  Shape shape(sizes);
  CellSet relation(shape.cell_count());
  for (const auto& t : tuples) relation.set(shape.index_of(t));
  return Context(std::move(labels), std::move(relation));
}

std::optional<std::size_t> Context::find_label(std::size_t dim, std::string_view label) const {
  const auto& ls = labels_.at(dim);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  return std::nullopt;
}

bool Context::contains(std::span<const std::size_t> tuple) const {
  return relation_.test(shape_.index_of(tuple));
}

Shape Context::feature_shape() const {
  return Shape(std::vector<std::size_t>(sizes().begin() + 1, sizes().end()));
}

CellSet Context::description(std::size_t object) const {
  if (object >= size(0)) {
    throw std::invalid_argument("object index " + std::to_string(object) + " out of range");
  }
  const std::size_t width = shape_.stride(0);
  CellSet desc(width);
  const std::size_t base = object * width;
  for (std::size_t i = 0; i < width; ++i) {
    if (relation_.test(base + i)) desc.set(i);
  }
  return desc;
}

Context Context::relabeled(std::size_t dim, std::vector<std::string> labels) const {
  if (labels.size() != size(dim)) throw std::invalid_argument("relabeling changes the dimension size");
  auto all = labels_;
  all.at(dim) = std::move(labels);
  return Context(std::move(all), relation_);
}

Context Context::with_relation(CellSet relation) const { return Context(labels_, std::move(relation)); }

std::strong_ordering Concept::operator<=>(const Concept& other) const {
  const std::size_t n = std::min(components.size(), other.components.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = bitstring_compare(components[i], other.components[i]); c != 0) return c;
  }
  return components.size() <=> other.components.size();
}

std::strong_ordering Feature::operator<=>(const Feature& other) const {
  const std::size_t n = std::min(components.size(), other.components.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = bitstring_compare(components[i], other.components[i]); c != 0) return c;
  }
  return components.size() <=> other.components.size();
}

CellSet Box::cells(const Context& ctx) const {
  std::vector<std::size_t> sizes;
  for (std::size_t d : dims) sizes.push_back(ctx.size(d));
  return Shape(std::move(sizes)).box_cells(components);
}

Feature feature_of(const Concept& concept_) {
  return Feature{std::vector<ElementSet>(concept_.components.begin() + 1, concept_.components.end())};
}

ConceptSet::ConceptSet(std::vector<std::size_t> sizes, std::vector<Concept> concepts)
    : sizes_(std::move(sizes)), concepts_(std::move(concepts)) {
  for (const auto& c : concepts_) {
    if (c.components.size() != sizes_.size()) throw std::invalid_argument("concept arity mismatch");
    for (std::size_t d = 0; d < sizes_.size(); ++d) {
      if (c.components[d] & ~full_set(sizes_[d])) {
        throw std::invalid_argument("concept component exceeds its dimension");
      }
    }
  }
  std::sort(concepts_.begin(), concepts_.end());
  concepts_.erase(std::unique(concepts_.begin(), concepts_.end()), concepts_.end());
}

bool ConceptSet::contains(const Concept& c) const {
  return std::binary_search(concepts_.begin(), concepts_.end(), c);
}

namespace {

void check_components(const Context& ctx, std::span<const ElementSet> components) {
  if (components.size() != ctx.arity()) {
    throw std::invalid_argument("candidate has " + std::to_string(components.size()) +
                                " components, context arity is " + std::to_string(ctx.arity()));
  }
  for (std::size_t d = 0; d < components.size(); ++d) {
    if (ctx.size(d) > kMaxElementsPerDimension) {
      throw ResourceLimitError("dimension " + std::to_string(d + 1) + " exceeds " +
                               std::to_string(kMaxElementsPerDimension) + " elements");
    }
    if (components[d] & ~full_set(ctx.size(d))) {
      throw std::invalid_argument("component " + std::to_string(d + 1) + " is not a subset of its dimension");
    }
  }
}

}  // namespace

bool box_full(const Context& ctx, std::span<const ElementSet> components) {
  check_components(ctx, components);
  return ctx.shape().box_cells(components).is_subset_of(ctx.relation());
}

bool is_concept(const Context& ctx, std::span<const ElementSet> components) {
  if (!box_full(ctx, components)) return false;
  std::vector<ElementSet> grown(components.begin(), components.end());
  for (std::size_t d = 0; d < grown.size(); ++d) {
    for (std::size_t x = 0; x < ctx.size(d); ++x) {
      if (has_element(components[d], x)) continue;
      grown[d] = components[d] | (ElementSet{1} << x);
      const bool extendable = box_full(ctx, grown);
      grown[d] = components[d];
      if (extendable) return false;
    }
  }
  return true;
}

bool quasi_leq(std::size_t dim, const Concept& a, const Concept& b) {
  const ElementSet x = a.components.at(dim);
  return (x & b.components.at(dim)) == x;
}

OrderReport check_n_ordered(std::span<const Concept> concepts, std::size_t max_violations) {
  OrderReport report;
  auto record = [&](std::string msg) {
    report.ok = false;
    if (report.violations.size() < max_violations) report.violations.push_back(std::move(msg));
  };
  for (std::size_t a = 0; a < concepts.size(); ++a) {
    for (std::size_t b = 0; b < concepts.size(); ++b) {
      if (a == b) continue;
      const auto& ca = concepts[a];
      const auto& cb = concepts[b];
      const std::size_t n = ca.components.size();
      std::size_t leq_count = 0;
      std::size_t equiv_count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        leq_count += quasi_leq(i, ca, cb);
        equiv_count += ca.components[i] == cb.components[i];
      }
      if (equiv_count == n && a < b) {
        record("uniqueness: concepts #" + std::to_string(a) + " and #" + std::to_string(b) +
               " are equivalent in every quasi-order");
      }
      // Antiordinal dependency: a ≲_i b for all i != j forces b ≲_j a.
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t others = leq_count - (quasi_leq(j, ca, cb) ? 1 : 0);
        if (others == n - 1 && !quasi_leq(j, cb, ca)) {
          record("antiordinal dependency: concepts #" + std::to_string(a) + ", #" + std::to_string(b) +
                 " in dimension " + std::to_string(j + 1));
        }
      }
    }
  }
  return report;
}

std::vector<Feature> features(const ConceptSet& cs) {
  std::vector<Feature> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(feature_of(c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace polyadic
