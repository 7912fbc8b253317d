#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyadic {

/// Subset of one dimension: bit i set means element i is present.
using ElementSet = std::uint64_t;

/// Set of cells of a (sub)space, indexed row-major with the first dimension
/// most significant.
using CellSet = boost::dynamic_bitset<std::uint64_t>;

using Tuple = std::vector<std::size_t>;

/// Largest dimension that can appear in a concept component.
inline constexpr std::size_t kMaxElementsPerDimension = 64;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ElementSet full_set(std::size_t size) {
  return size >= 64 ? ~ElementSet{0} : (ElementSet{1} << size) - 1;
}

inline bool has_element(ElementSet set, std::size_t element) {
  return (set >> element) & 1U;
}

/// Lexicographic order on the bit strings b_0 b_1 ... of two subsets.
inline std::strong_ordering bitstring_compare(ElementSet lhs, ElementSet rhs) {
  const ElementSet diff = lhs ^ rhs;
  if (diff == 0) return std::strong_ordering::equal;
  const ElementSet lowest = diff & (~diff + 1);
  return (rhs & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// Sizes of a product of finite dimensions, with mixed-radix cell indexing.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<std::size_t> sizes);

  std::size_t arity() const { return sizes_.size(); }
  std::size_t size(std::size_t dim) const { return sizes_.at(dim); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t cell_count() const { return cell_count_; }
  std::size_t stride(std::size_t dim) const { return strides_[dim]; }

  std::size_t index_of(std::span<const std::size_t> tuple) const;
  Tuple tuple_of(std::size_t index) const;

  /// Cells of the box ∏ components[i]; empty when any component is empty.
  CellSet box_cells(std::span<const ElementSet> components) const;

  bool operator==(const Shape&) const = default;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t cell_count_ = 1;
};

std::vector<std::string> numeric_labels(std::size_t count);

/// An n-dimensional cross table. Immutable once built.
class Context {
 public:
  Context() = default;
  Context(std::vector<std::vector<std::string>> labels, CellSet relation);

  /// Empty relation over dimensions labelled 1..j.
  static Context empty(std::vector<std::size_t> sizes);
  static Context from_tuples(std::vector<std::vector<std::string>> labels,
                             std::span<const Tuple> tuples);

  std::size_t arity() const { return shape_.arity(); }
  std::size_t size(std::size_t dim) const { return shape_.size(dim); }
  const std::vector<std::size_t>& sizes() const { return shape_.sizes(); }
  const Shape& shape() const { return shape_; }
  std::size_t cell_count() const { return shape_.cell_count(); }

  const std::vector<std::string>& labels(std::size_t dim) const { return labels_.at(dim); }
  const std::vector<std::vector<std::string>>& all_labels() const { return labels_; }
  const std::string& label(std::size_t dim, std::size_t element) const {
    return labels_.at(dim).at(element);
  }
  std::optional<std::size_t> find_label(std::size_t dim, std::string_view label) const;

  const CellSet& relation() const { return relation_; }
  std::size_t cross_count() const { return relation_.count(); }

  /// Throws std::invalid_argument on arity mismatch or out-of-range index.
  bool contains(std::span<const std::size_t> tuple) const;
  bool contains_cell(std::size_t index) const { return relation_.test(index); }

  /// Shape of dimensions 2..n, the space object descriptions live in.
  Shape feature_shape() const;
  /// Cells (s_2,...,s_n) with (object, s_2, ..., s_n) in the relation.
  CellSet description(std::size_t object) const;

  Context relabeled(std::size_t dim, std::vector<std::string> labels) const;
  Context with_relation(CellSet relation) const;

  bool operator==(const Context& other) const {
    return labels_ == other.labels_ && relation_ == other.relation_;
  }

 private:
  std::vector<std::vector<std::string>> labels_;
  Shape shape_;
  CellSet relation_;
};

/// An n-tuple of subsets (X_1, ..., X_n), one per dimension.
struct Concept {
  std::vector<ElementSet> components;

  bool operator==(const Concept&) const = default;
  std::strong_ordering operator<=>(const Concept& other) const;
};

/// Last n-1 components of a concept.
struct Feature {
  std::vector<ElementSet> components;

  bool operator==(const Feature&) const = default;
  std::strong_ordering operator<=>(const Feature& other) const;
};

/// A product of subsets over a selection of dimensions.
struct Box {
  std::vector<std::size_t> dims;
  std::vector<ElementSet> components;

  /// Cells of the box in the subspace spanned by `dims` (in that order).
  CellSet cells(const Context& ctx) const;
};

Feature feature_of(const Concept& concept_);

/// Concepts of one context, kept sorted in canonical order without duplicates.
class ConceptSet {
 public:
  ConceptSet() = default;
  ConceptSet(std::vector<std::size_t> sizes, std::vector<Concept> concepts);

  std::size_t arity() const { return sizes_.size(); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  const std::vector<Concept>& concepts() const { return concepts_; }
  std::size_t size() const { return concepts_.size(); }
  bool contains(const Concept& c) const;

  auto begin() const { return concepts_.begin(); }
  auto end() const { return concepts_.end(); }

  bool operator==(const ConceptSet&) const = default;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<Concept> concepts_;
};

/// True iff ∏ X_i ⊆ relation. Vacuously true when some component is empty.
bool box_full(const Context& ctx, std::span<const ElementSet> components);
bool is_concept(const Context& ctx, std::span<const ElementSet> components);
inline bool is_concept(const Context& ctx, const Concept& c) {
  return is_concept(ctx, c.components);
}

/// a ≲_dim b, i.e. a.X_dim ⊆ b.X_dim.
bool quasi_leq(std::size_t dim, const Concept& a, const Concept& b);

struct OrderReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks antiordinal dependency and the uniqueness condition over all pairs.
/// Duplicated entries count as distinct concepts that violate uniqueness.
OrderReport check_n_ordered(std::span<const Concept> concepts, std::size_t max_violations = 8);
inline OrderReport check_n_ordered(const ConceptSet& cs) { return check_n_ordered(cs.concepts()); }

/// Deduplicated features, in canonical order.
std::vector<Feature> features(const ConceptSet& cs);

}  // namespace polyadic
