#include "polyadic/bounds.hpp"

#include "polyadic/enumeration.hpp"
#include "polyadic/generators.hpp"
#include "polyadic/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace polyadic {

NaiveBounds naive_bounds(std::size_t n, std::size_t s) {
  if (n < 2) throw std::invalid_argument("naive bounds need n >= 2");
  if (s < 1) throw std::invalid_argument("naive bounds need s >= 1");
  NaiveBounds b;
  b.lower = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(s));
  const BigInt side = (BigInt(1) << s) - 1;
  b.upper = boost::multiprecision::pow(side, static_cast<unsigned>(n - 1)) + (n - 1);
  return b;
}

Context lower_bound_context_4d(std::size_t s) {
  if (s < 3) throw std::invalid_argument("the 4-dimensional construction needs s >= 3");
  const std::size_t k = s / 3;
  const std::size_t r = s % 3;
  const Context rook = paper_fixture("crook");
  Context out = rook;
  for (std::size_t i = 1; i < k; ++i) out = direct_sum(out, rook);
  if (r > 0) out = direct_sum(out, contranominal(4, r));
  for (std::size_t d = 0; d < 4; ++d) out = out.relabeled(d, numeric_labels(s));
  return out;
}

BigInt lower_bound_count_4d(std::size_t s) {
  if (s < 3) throw std::invalid_argument("the 4-dimensional construction needs s >= 3");
  return boost::multiprecision::pow(BigInt(112), static_cast<unsigned>(s / 3)) *
         boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(s % 3));
}

namespace {

// All cell permutations of the cubic shape induced by permuting dimensions
// and, independently, the elements of every dimension. Entry p[j] is the
// source cell of target cell j.
std::vector<std::vector<std::uint8_t>> symmetry_group(std::size_t n, std::size_t s) {
  const Shape shape(std::vector<std::size_t>(n, s));
  std::vector<std::size_t> dims(n);
  std::iota(dims.begin(), dims.end(), 0);
  std::vector<std::size_t> base(s);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<std::size_t>> element_perms;
  do element_perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));

  std::vector<std::vector<std::uint8_t>> group;
  do {
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      std::vector<std::uint8_t> inverse(shape.cell_count());
      for (std::size_t i = 0; i < shape.cell_count(); ++i) {
        const Tuple t = shape.tuple_of(i);
        Tuple image(n);
        for (std::size_t d = 0; d < n; ++d) image[dims[d]] = element_perms[choice[d]][t[d]];
        inverse[shape.index_of(image)] = static_cast<std::uint8_t>(i);
      }
      group.push_back(std::move(inverse));
      std::size_t d = 0;
      while (d < n && ++choice[d] == element_perms.size()) choice[d++] = 0;
      if (d == n) break;
    }
  } while (std::next_permutation(dims.begin(), dims.end()));
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  return group;
}

// Relations are bit strings with cell i at bit (cells - 1 - i), so numeric
// order is the lexicographic order of the strings.
struct Coding {
  std::size_t cells;
  bool test(std::uint64_t r, std::size_t cell) const { return (r >> (cells - 1 - cell)) & 1U; }
};

std::uint64_t apply(const Coding& c, const std::vector<std::uint8_t>& inverse, std::uint64_t r) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < c.cells; ++j) out = (out << 1) | static_cast<std::uint64_t>(c.test(r, inverse[j]));
  return out;
}

bool is_canonical(const Coding& c, const std::vector<std::vector<std::uint8_t>>& group, std::uint64_t r) {
  for (const auto& inverse : group) {
    for (std::size_t j = 0; j < c.cells; ++j) {
      const bool image = c.test(r, inverse[j]);
      const bool own = c.test(r, j);
      if (image == own) continue;
      if (!image) return false;
      break;
    }
  }
  return true;
}

std::uint64_t canonical_of(const Coding& c, const std::vector<std::vector<std::uint8_t>>& group, std::uint64_t r) {
  std::uint64_t best = r;
  for (const auto& inverse : group) best = std::min(best, apply(c, inverse, r));
  return best;
}

CellSet to_cells(const Coding& c, std::uint64_t r) {
  CellSet cells(c.cells);
  for (std::size_t i = 0; i < c.cells; ++i) {
    if (c.test(r, i)) cells.set(i);
  }
  return cells;
}

Context cubic_context(std::size_t n, std::size_t s, CellSet relation) {
  return Context(std::vector<std::vector<std::string>>(n, numeric_labels(s)), std::move(relation));
}

std::uint64_t cell_count_checked(std::size_t n, std::size_t s) {
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    cells *= s;
    if (cells > kMaxSearchCells) {
      throw ResourceLimitError("exhaustive search is limited to " + std::to_string(kMaxSearchCells) +
                               " cells; shape has " + std::to_string(s) + "^" + std::to_string(n));
    }
  }
  return cells;
}

}  // namespace

CellSet canonical_relation(const Context& ctx) {
  const std::size_t n = ctx.arity();
  const std::size_t s = ctx.size(0);
  for (std::size_t d = 0; d < n; ++d) {
    if (ctx.size(d) != s) throw std::invalid_argument("canonical relation needs a cubic context");
  }
  const Coding c{cell_count_checked(n, s)};
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < c.cells; ++i) r = (r << 1) | static_cast<std::uint64_t>(ctx.contains_cell(i));
  return to_cells(c, canonical_of(c, symmetry_group(n, s), r));
}

SearchResult exhaustive_fn(std::size_t n, std::size_t s, const SearchOptions& options) {
  if (n < 2) throw std::invalid_argument("search needs n >= 2");
  if (s < 1) throw std::invalid_argument("search needs s >= 1");
  const Coding coding{cell_count_checked(n, s)};
  const Shape shape(std::vector<std::size_t>(n, s));
  const auto group = symmetry_group(n, s);
  const std::uint64_t total = coding.cells == 64 ? 0 : std::uint64_t{1} << coding.cells;
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1U, options.threads);

  struct Partial {
    std::uint64_t max = 0;
    std::set<std::uint64_t> maximizers;
    std::uint64_t visited = 0;
    std::uint64_t counted = 0;
  };
  std::vector<Partial> partials(workers);
  std::atomic<bool> stop{false};

  auto work = [&](unsigned id) {
    Partial& p = partials[id];
    for (std::uint64_t r = id; r < total; r += workers) {
      if ((p.visited & 1023U) == 0 && options.time_budget &&
          std::chrono::steady_clock::now() - start > *options.time_budget) {
        stop = true;
      }
      if (stop) return;
      ++p.visited;
      if (options.symmetry_reduction && !is_canonical(coding, group, r)) continue;
      ++p.counted;
      std::uint64_t count = 0;
      for_each_concept(shape, to_cells(coding, r), [&](std::span<const ElementSet>) { ++count; });
      if (count < p.max) continue;
      if (count > p.max) {
        p.max = count;
        p.maximizers.clear();
      }
      p.maximizers.insert(options.symmetry_reduction ? r : canonical_of(coding, group, r));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  result.n = n;
  result.s = s;
  result.exact = !stop;
  std::set<std::uint64_t> best;
  for (const auto& p : partials) {
    result.relations_visited += p.visited;
    result.relations_counted += p.counted;
    if (p.max > result.max_count) {
      result.max_count = p.max;
      best.clear();
    }
    if (p.max == result.max_count) best.insert(p.maximizers.begin(), p.maximizers.end());
  }
  for (std::uint64_t r : best) result.witnesses.push_back(cubic_context(n, s, to_cells(coding, r)));
  return result;
}

namespace {

std::uint64_t cubic_cells(std::size_t n, std::size_t s) {
  double cells = std::pow(static_cast<double>(s), static_cast<double>(n));
  return cells > 1e18 ? UINT64_MAX : static_cast<std::uint64_t>(cells);
}

}  // namespace

BoundsReport bounds_report(std::size_t n, std::size_t s, const ReportOptions& options) {
  const NaiveBounds naive = naive_bounds(n, s);
  BoundsReport report;
  report.n = n;
  report.s = s;
  report.naive_lower = naive.lower;
  report.naive_upper = naive.upper;
  const std::uint64_t cells = cubic_cells(n, s);
  const bool enumerable = cells <= options.enumerate_cell_limit;
  const EnumerationOptions enum_options{options.threads};

  std::optional<Context> best_context;
  auto consider = [&](const BigInt& value, const std::string& source, std::optional<Context> witness, bool counted) {
    std::ostringstream line;
    line << source << ": " << value << (counted ? " (enumerated)" : " (closed form)");
    report.sources.push_back(line.str());
    if (report.best_lower_source.empty() || value > report.best_lower) {
      report.best_lower = value;
      report.best_lower_source = source;
      best_context = std::move(witness);
    }
  };

  if (enumerable) {
    Context c = contranominal(n, s);
    consider(BigInt(count_concepts(c, enum_options)), "contranominal", c, true);
  } else {
    consider(naive.lower, "contranominal", std::nullopt, false);
  }
  if (s >= 2 && enumerable) {
    Context c = rook_context(n, s, 0);
    consider(BigInt(count_concepts(c, enum_options)), "rook", c, true);
  }
  if (n == 4 && s >= 3) {
    if (s <= 4) {
      Context c = lower_bound_context_4d(s);
      consider(BigInt(count_concepts(c, enum_options)), "4d-construction", c, true);
    } else {
      consider(lower_bound_count_4d(s), "4d-construction", std::nullopt, false);
    }
  }
  if (cells <= options.search_cell_limit) {
    SearchOptions search;
    search.time_budget = options.search_budget;
    search.threads = options.threads;
    SearchResult found = exhaustive_fn(n, s, search);
    std::ostringstream line;
    line << "exhaustive search: " << found.max_count
         << (found.exact ? " (exact, " : " (lower bound, partial search, ") << found.relations_counted
         << " classes counted)";
    report.sources.push_back(line.str());
    if (found.exact) report.exact = found.max_count;
    report.search_partial = !found.exact;
    if (BigInt(found.max_count) > report.best_lower) {
      report.best_lower = found.max_count;
      report.best_lower_source = found.exact ? "exhaustive" : "partial-search";
      best_context.reset();
    }
    if (BigInt(found.max_count) == report.best_lower) report.witnesses = std::move(found.witnesses);
  }
  if (report.witnesses.empty() && best_context) report.witnesses.push_back(std::move(*best_context));

  if (n == 2) report.annotations.push_back("in two dimensions the naive bounds coincide: f_2(s) = 2^s");
  if (n == 3) {
    report.annotations.push_back("literature: contexts with 3.359^s concepts exist for large s (not computed here)");
    report.annotations.push_back("literature: upper bound 3.384^s (not computed here)");
  }
  if (n == 4) {
    report.annotations.push_back(
        "rook-based construction: at least c*4.82^s concepts with c = (4/4.82)^2 ~ 0.689 for large s (not computed here)");
  }

  const bool ordered = report.naive_lower <= report.best_lower && report.best_lower <= report.naive_upper &&
                       (!report.exact || BigInt(*report.exact) >= report.best_lower);
  if (!ordered) throw std::logic_error("bounds report is inconsistent for n=" + std::to_string(n) + ", s=" + std::to_string(s));
  return report;
}

std::string render_text(const BoundsReport& r) {
  std::ostringstream out;
  out << "f_" << r.n << "(" << r.s << ")\n";
  out << "  naive lower (n^s):               " << r.naive_lower << '\n';
  out << "  naive upper ((2^s-1)^(n-1)+n-1): " << r.naive_upper << '\n';
  out << "  best lower:                      " << r.best_lower << " [" << r.best_lower_source << "]\n";
  out << "  exact:                           ";
  if (r.exact) {
    out << *r.exact << '\n';
  } else {
    out << (r.search_partial ? "unknown (partial search)" : "unknown") << '\n';
  }
  for (const auto& line : r.sources) out << "  source: " << line << '\n';
  for (const auto& line : r.annotations) out << "  note: " << line << '\n';
  out << "  witnesses: " << r.witnesses.size();
  if (!r.witness_file.empty()) out << " (" << r.witness_file << ")";
  out << '\n';
  return out.str();
}

std::string csv_header() { return "n,s,naive_lower,best_lower,best_lower_source,exact,naive_upper,witness_file\n"; }

std::string render_csv_row(const BoundsReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.s << ',' << r.naive_lower << ',' << r.best_lower << ',' << r.best_lower_source << ',';
  if (r.exact) out << *r.exact;
  out << ',' << r.naive_upper << ',' << r.witness_file << '\n';
  return out.str();
}

}  // namespace polyadic
