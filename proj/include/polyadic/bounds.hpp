#pragma once

#include "polyadic/context.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyadic {

using BigInt = boost::multiprecision::cpp_int;

struct NaiveBounds {
  BigInt lower;  // n^s, reached by the contranominal scale
  BigInt upper;  // (2^s - 1)^(n-1) + n - 1
};

NaiveBounds naive_bounds(std::size_t n, std::size_t s);

/// Side-s 4-context built from k = s/3 copies of the stored rook table and
/// a contranominal scale of side r = s mod 3, joined by direct sums.
/// Requires s >= 3.
Context lower_bound_context_4d(std::size_t s);
/// 112^k * 4^r, the concept count of lower_bound_context_4d(s).
BigInt lower_bound_count_4d(std::size_t s);

/// Largest supported search space, in cells (2^cells relations).
inline constexpr std::size_t kMaxSearchCells = 32;

struct SearchOptions {
  bool symmetry_reduction = true;
  /// No limit when empty. Checked periodically; a run that hits it stops early.
  std::optional<std::chrono::milliseconds> time_budget;
  unsigned threads = 1;
};

struct SearchResult {
  std::size_t n = 0;
  std::size_t s = 0;
  std::uint64_t max_count = 0;
  /// Maximizers in canonical form, one per symmetry class, ordered by relation.
  std::vector<Context> witnesses;
  /// False when the budget ran out before every relation was examined.
  bool exact = false;
  std::uint64_t relations_visited = 0;
  std::uint64_t relations_counted = 0;
};

/// Maximum concept count over all cubic n-contexts of side s. With symmetry
/// reduction only the lexicographically least relation of each orbit under
/// dimension and element permutations is counted.
SearchResult exhaustive_fn(std::size_t n, std::size_t s, const SearchOptions& options = {});

/// Relation bit string (cell 0 first) minimal over all dimension and
/// element permutations of a cubic context.
CellSet canonical_relation(const Context& ctx);

struct ReportOptions {
  /// Run the exhaustive search when the shape has at most this many cells.
  std::size_t search_cell_limit = 16;
  std::optional<std::chrono::milliseconds> search_budget = std::chrono::milliseconds(20000);
  /// Enumerate generated contexts up to this many cells; larger ones are skipped.
  std::size_t enumerate_cell_limit = 4096;
  unsigned threads = 1;
};

struct BoundsReport {
  std::size_t n = 0;
  std::size_t s = 0;
  BigInt naive_lower;
  BigInt naive_upper;
  BigInt best_lower;
  std::string best_lower_source;
  std::optional<std::uint64_t> exact;
  bool search_partial = false;
  std::vector<Context> witnesses;
  std::vector<std::string> sources;      // one line per lower bound that was computed
  std::vector<std::string> annotations;  // literature values, never computed here
  std::string witness_file;
};

BoundsReport bounds_report(std::size_t n, std::size_t s, const ReportOptions& options = {});

std::string render_text(const BoundsReport& report);
std::string csv_header();
std::string render_csv_row(const BoundsReport& report);

}  // namespace polyadic
