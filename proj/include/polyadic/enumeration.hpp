#pragma once

#include "polyadic/context.hpp"

#include <cstdint>
#include <functional>

namespace polyadic {

inline constexpr std::uint64_t kDefaultBruteForceCap = std::uint64_t{1} << 24;

/// Tests every n-tuple of subsets against the concept definition. Throws
/// ResourceLimitError when ∏ 2^{j_i} exceeds `candidate_cap`.
ConceptSet brute_force_concepts(const Context& ctx, std::uint64_t candidate_cap = kDefaultBruteForceCap);

struct EnumerationOptions {
  unsigned threads = 1;
};

/// All n-concepts, in canonical order. Works by slicing the smallest
/// dimension with every subset D, recursing on the (n-1)-ary slice, and
/// keeping the results whose closure in the sliced dimension is exactly D.
ConceptSet enumerate_concepts(const Context& ctx, EnumerationOptions options = {});

std::uint64_t count_concepts(const Context& ctx, EnumerationOptions options = {});

/// Visits every concept of the relation `cells` over `shape`, in no
/// particular order. For a 1-dimensional shape that is `cells` itself.
void for_each_concept(const Shape& shape, const CellSet& cells,
                      const std::function<void(std::span<const ElementSet>)>& visit);

}  // namespace polyadic
