#pragma once

#include "polyadic/context.hpp"

#include <string>
#include <vector>

namespace polyadic {

/// A split of the dimensions {0..n-1} into two nonempty disjoint parts.
struct Bipartition {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  /// `left` and its complement, both in increasing order.
  static Bipartition from_left(std::size_t arity, std::vector<std::size_t> left);
  /// Throws std::invalid_argument unless disjoint, covering and both nonempty.
  void validate(std::size_t arity) const;
};

/// Label of a flattened element: the bare label for a single dimension,
/// otherwise "(x,y,...)" in dimension order.
std::string tuple_label(const std::vector<std::string>& parts);

/// The 2-context (∏A, ∏B, R^(A,B)). Tuples over each side are ordered
/// lexicographically with the first listed dimension most significant.
Context flatten(const Context& ctx, const Bipartition& split);

/// The (n-1)-context C_D: a tuple is kept iff it is in the relation for
/// every x in `keep`. An empty `keep` yields the full product.
Context slice(const Context& ctx, std::size_t dim, const std::vector<std::size_t>& keep);

/// Direct sum: dimensions are concatenated and the relation is R1 ∪ R2 plus
/// every tuple that mixes elements of both summands. Labels shared by both
/// summands in a dimension are suffixed "#1" / "#2".
Context direct_sum(const Context& first, const Context& second);

}  // namespace polyadic
