#include "polyadic/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace polyadic {

namespace {

constexpr std::size_t kMaxSlicedDimension = 24;

using Components = std::vector<ElementSet>;
using Emit = std::function<void(const Components&)>;

struct Level {
  std::vector<std::size_t> sizes;
  std::size_t sliced = 0;             // dimension removed at this level
  std::vector<std::size_t> rest;      // remaining sizes
  Shape rest_shape;
  std::vector<CellSet> singles;       // slice by {z} for every z of the sliced dimension
};

Level make_level(const std::vector<std::size_t>& sizes, const CellSet& rel) {
  Level level;
  level.sizes = sizes;
  // Slice the smallest dimension; ties go to the last one.
  for (std::size_t d = 0; d < sizes.size(); ++d) {
    if (sizes[d] <= sizes[level.sliced]) level.sliced = d;
  }
  const std::size_t m = sizes[level.sliced];
  if (m > kMaxSlicedDimension) {
    throw ResourceLimitError("every dimension has more than " + std::to_string(kMaxSlicedDimension) +
                             " elements; enumeration would not terminate in reasonable time");
  }
  for (std::size_t d = 0; d < sizes.size(); ++d) {
    if (d != level.sliced) level.rest.push_back(sizes[d]);
  }
  level.rest_shape = Shape(level.rest);
  const Shape full(sizes);
  const std::size_t outer_stride = full.stride(level.sliced) * m;
  const std::size_t inner_stride = full.stride(level.sliced);
  level.singles.assign(m, CellSet(level.rest_shape.cell_count()));
  // Cell index = outer * outer_stride + z * inner_stride + inner, and the
  // slice index is outer * inner_stride + inner.
  for (std::size_t cell = rel.find_first(); cell != CellSet::npos; cell = rel.find_next(cell)) {
    const std::size_t outer = cell / outer_stride;
    const std::size_t z = (cell % outer_stride) / inner_stride;
    const std::size_t inner = cell % inner_stride;
    level.singles[z].set(outer * inner_stride + inner);
  }
  return level;
}

void enumerate_rec(const std::vector<std::size_t>& sizes, const CellSet& rel, const Emit& emit);

// Concepts whose sliced component is exactly `subset`, given the slice by it.
void emit_for_subset(const Level& level, ElementSet subset, const CellSet& slice, const Emit& emit) {
  const std::size_t m = level.sizes[level.sliced];
  Components out(level.sizes.size());
  enumerate_rec(level.rest, slice, [&](const Components& inner) {
    const CellSet box = level.rest_shape.box_cells(inner);
    ElementSet closure = 0;
    for (std::size_t z = 0; z < m; ++z) {
      if (has_element(subset, z) || box.is_subset_of(level.singles[z])) closure |= ElementSet{1} << z;
    }
    if (closure != subset) return;
    for (std::size_t d = 0, k = 0; d < out.size(); ++d) {
      out[d] = d == level.sliced ? subset : inner[k++];
    }
    emit(out);
  });
}

void enumerate_rec(const std::vector<std::size_t>& sizes, const CellSet& rel, const Emit& emit) {
  if (sizes.size() == 1) {
    ElementSet only = 0;
    for (std::size_t i = rel.find_first(); i != CellSet::npos; i = rel.find_next(i)) only |= ElementSet{1} << i;
    emit(Components{only});
    return;
  }
  const Level level = make_level(sizes, rel);
  const std::size_t m = level.sizes[level.sliced];
  // Depth-first over subsets so each slice is one AND away from its parent.
  std::vector<CellSet> stack;
  stack.reserve(m + 1);
  stack.emplace_back(level.rest_shape.cell_count());
  stack.back().set();
  std::function<void(ElementSet, std::size_t)> visit = [&](ElementSet subset, std::size_t next) {
    emit_for_subset(level, subset, stack.back(), emit);
    for (std::size_t z = next; z < m; ++z) {
      stack.push_back(stack.back() & level.singles[z]);
      visit(subset | (ElementSet{1} << z), z + 1);
      stack.pop_back();
    }
  };
  visit(0, 0);
}

template <typename Sink>
void enumerate_top(const Context& ctx, EnumerationOptions options, std::vector<Sink>& sinks) {
  for (std::size_t d = 0; d < ctx.arity(); ++d) {
    if (ctx.size(d) > kMaxElementsPerDimension) {
      throw ResourceLimitError("dimension " + std::to_string(d + 1) + " exceeds " +
                               std::to_string(kMaxElementsPerDimension) + " elements");
    }
  }
  const unsigned threads = std::max(1U, options.threads);
  sinks.assign(threads, Sink{});
  if (ctx.arity() == 1 || threads == 1) {
    enumerate_rec(ctx.sizes(), ctx.relation(), [&](const Components& c) { sinks[0](c); });
    return;
  }
  const Level level = make_level(ctx.sizes(), ctx.relation());
  const std::size_t m = level.sizes[level.sliced];
  const ElementSet subsets = ElementSet{1} << m;
  auto work = [&](unsigned t) {
    for (ElementSet subset = t; subset < subsets; subset += threads) {
      CellSet slice(level.rest_shape.cell_count());
      slice.set();
      for (std::size_t z = 0; z < m; ++z) {
        if (has_element(subset, z)) slice &= level.singles[z];
      }
      emit_for_subset(level, subset, slice, [&](const Components& c) { sinks[t](c); });
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
}

struct Collector {
  std::vector<Concept> concepts;
  void operator()(const Components& c) { concepts.push_back(Concept{c}); }
};

struct Counter {
  std::uint64_t count = 0;
  void operator()(const Components&) { ++count; }
};

}  // namespace

ConceptSet brute_force_concepts(const Context& ctx, std::uint64_t candidate_cap) {
  std::uint64_t candidates = 1;
  for (std::size_t s : ctx.sizes()) {
    if (s >= 63 || candidates > (candidate_cap >> s)) {
      throw ResourceLimitError("brute force needs more than " + std::to_string(candidate_cap) +
                               " candidate boxes (cap)");
    }
    candidates <<= s;
  }
  if (candidates > candidate_cap) {
    throw ResourceLimitError("brute force needs more than " + std::to_string(candidate_cap) +
                             " candidate boxes (cap)");
  }
  std::vector<Concept> found;
  Components candidate(ctx.arity(), 0);
  for (std::uint64_t i = 0; i < candidates; ++i) {
    if (is_concept(ctx, candidate)) found.push_back(Concept{candidate});
    for (std::size_t d = 0; d < candidate.size(); ++d) {
      if (++candidate[d] <= full_set(ctx.size(d))) break;
      candidate[d] = 0;
    }
  }
  return ConceptSet(ctx.sizes(), std::move(found));
}

ConceptSet enumerate_concepts(const Context& ctx, EnumerationOptions options) {
  std::vector<Collector> sinks;
  enumerate_top(ctx, options, sinks);
  std::vector<Concept> all;
  for (auto& s : sinks) {
    all.insert(all.end(), std::make_move_iterator(s.concepts.begin()), std::make_move_iterator(s.concepts.end()));
  }
  return ConceptSet(ctx.sizes(), std::move(all));
}

std::uint64_t count_concepts(const Context& ctx, EnumerationOptions options) {
  std::vector<Counter> sinks;
  enumerate_top(ctx, options, sinks);
  std::uint64_t total = 0;
  for (const auto& s : sinks) total += s.count;
  return total;
}

void for_each_concept(const Shape& shape, const CellSet& cells,
                      const std::function<void(std::span<const ElementSet>)>& visit) {
  if (cells.size() != shape.cell_count()) throw std::invalid_argument("cell set does not match shape");
  for (std::size_t s : shape.sizes()) {
    if (s > kMaxElementsPerDimension) throw ResourceLimitError("dimension too large for concept enumeration");
  }
  enumerate_rec(shape.sizes(), cells, [&](const Components& c) { visit(c); });
}

}  // namespace polyadic
