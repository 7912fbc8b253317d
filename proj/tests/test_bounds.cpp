#include "oracles.hpp"

#include "polyadic/bounds.hpp"
#include "polyadic/enumeration.hpp"
#include "polyadic/generators.hpp"

#include <doctest.h>

using namespace polyadic;

TEST_CASE("naive bounds") {
  for (std::size_t s = 1; s <= 10; ++s) {
    const auto b = naive_bounds(2, s);
    CHECK(b.lower == b.upper);
    CHECK(b.lower == BigInt(1) << s);
  }
  CHECK(naive_bounds(3, 2).lower == 9);
  CHECK(naive_bounds(3, 2).upper == 11);
  CHECK(naive_bounds(4, 3).lower == 64);
  CHECK(naive_bounds(4, 3).upper == 346);
  // beyond 64-bit range
  const auto big = naive_bounds(5, 40);
  CHECK(big.lower == boost::multiprecision::pow(BigInt(5), 40));
  CHECK(big.upper == boost::multiprecision::pow((BigInt(1) << 40) - 1, 4) + 4);
  CHECK_THROWS_AS(naive_bounds(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(naive_bounds(3, 0), std::invalid_argument);
}

TEST_CASE("four-dimensional construction") {
  const Context c3 = lower_bound_context_4d(3);
  CHECK(c3.relation() == paper_fixture("crook").relation());
  CHECK(c3.labels(0) == numeric_labels(3));
  CHECK(count_concepts(c3) == 112);
  const Context c4 = lower_bound_context_4d(4);
  CHECK(c4.sizes() == std::vector<std::size_t>(4, 4));
  CHECK(count_concepts(c4) == 448);
  CHECK(lower_bound_count_4d(4) == 448);
  CHECK(count_concepts(lower_bound_context_4d(5)) == 112 * 16);
  CHECK(lower_bound_count_4d(6) == 12544);
  CHECK(lower_bound_count_4d(7) == 12544 * 4);
  CHECK(lower_bound_context_4d(6).sizes() == std::vector<std::size_t>(4, 6));
  CHECK_THROWS_AS(lower_bound_context_4d(2), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_count_4d(1), std::invalid_argument);
}

TEST_CASE("exhaustive search in two dimensions finds the contranominal scales") {
  for (std::size_t s = 1; s <= 3; ++s) {
    const SearchResult r = exhaustive_fn(2, s);
    CHECK(r.exact);
    CHECK(r.max_count == (std::uint64_t{1} << s));
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].relation() == canonical_relation(contranominal(2, s)));
    CHECK(r.relations_visited == (std::uint64_t{1} << (s * s)));
  }
}

TEST_CASE("exhaustive search on 2x2x2 agrees with and without symmetry reduction") {
  const SearchResult reduced = exhaustive_fn(3, 2);
  SearchOptions plain;
  plain.symmetry_reduction = false;
  const SearchResult full = exhaustive_fn(3, 2, plain);
  CHECK(reduced.exact);
  CHECK(full.exact);
  CHECK(reduced.max_count == full.max_count);
  CHECK(reduced.max_count == oracle::max_count_over_all_relations(3, 2));
  CHECK(reduced.relations_visited == 256);
  CHECK(full.relations_counted == 256);
  CHECK(reduced.relations_counted < 256);
  REQUIRE(reduced.witnesses.size() == full.witnesses.size());
  for (std::size_t i = 0; i < reduced.witnesses.size(); ++i) {
    CHECK(reduced.witnesses[i] == full.witnesses[i]);
    CHECK(count_concepts(reduced.witnesses[i]) == reduced.max_count);
  }
}

TEST_CASE("search results do not depend on the thread count") {
  SearchOptions threaded;
  threaded.threads = 3;
  const SearchResult a = exhaustive_fn(3, 2);
  const SearchResult b = exhaustive_fn(3, 2, threaded);
  CHECK(a.max_count == b.max_count);
  CHECK(a.relations_counted == b.relations_counted);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i] == b.witnesses[i]);
}

TEST_CASE("a search that runs out of time is not exact") {
  SearchOptions quick;
  quick.time_budget = std::chrono::milliseconds(0);
  const SearchResult r = exhaustive_fn(4, 2, quick);
  CHECK_FALSE(r.exact);
  CHECK(r.relations_visited < 65536);
  CHECK_THROWS_AS(exhaustive_fn(3, 4), ResourceLimitError);
  CHECK_THROWS_AS(exhaustive_fn(1, 2), std::invalid_argument);
}

TEST_CASE("canonical relation is invariant under symmetries") {
  oracle::Rng rng(41);
  for (int c = 0; c < 50; ++c) {
    const oracle::Table t = oracle::random_table(rng, {3, 3, 3}, 0.5);
    // swap the first two dimensions and reverse the elements of the third
    oracle::Table u{t.sizes, {}};
    for (const auto& x : t.crosses) u.crosses.insert({x[1], x[0], 2 - x[2]});
    CHECK(canonical_relation(oracle::context_of(t)) == canonical_relation(oracle::context_of(u)));
  }
  CHECK_THROWS_AS(canonical_relation(Context::empty({2, 3})), std::invalid_argument);
}

TEST_CASE("bounds reports") {
  const BoundsReport r43 = bounds_report(4, 3);
  CHECK(r43.naive_lower == 64);
  CHECK(r43.best_lower >= 112);
  CHECK(r43.best_lower_source == "rook");
  CHECK_FALSE(r43.exact.has_value());
  CHECK_FALSE(r43.witnesses.empty());

  const BoundsReport r2 = bounds_report(2, 3);
  CHECK(r2.naive_lower == r2.naive_upper);
  CHECK(r2.exact == std::optional<std::uint64_t>(8));

  const BoundsReport r32 = bounds_report(3, 2);
  REQUIRE(r32.exact.has_value());
  CHECK(BigInt(*r32.exact) == r32.best_lower);
  CHECK(r32.naive_lower <= r32.best_lower);
  CHECK(r32.best_lower <= r32.naive_upper);

  const BoundsReport r3 = bounds_report(3, 4, {.search_cell_limit = 0});
  const std::string text = render_text(r3);
  CHECK(text.find("3.359^s") != std::string::npos);
  CHECK(text.find("3.384^s") != std::string::npos);
  CHECK(render_text(bounds_report(4, 5)).find("(4/4.82)^2") != std::string::npos);
  // the offset-0 rook context beats the 4-D construction here
  const BoundsReport r46 = bounds_report(4, 6, {.search_cell_limit = 0});
  CHECK(r46.best_lower == 12864);
  CHECK(r46.best_lower_source == "rook");

  CHECK(csv_header() == "n,s,naive_lower,best_lower,best_lower_source,exact,naive_upper,witness_file\n");
  CHECK(render_csv_row(r32) == "3,2,9," + r32.best_lower.str() + "," + r32.best_lower_source + "," + std::to_string(*r32.exact) + ",11,\n");
  CHECK(render_csv_row(r43) == "4,3,64,112,rook,,346,\n");
}

TEST_CASE("generated cubic contexts stay within the naive bounds") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t s = 1; s <= 3; ++s) {
      const auto b = naive_bounds(n, s);
      CHECK(BigInt(count_concepts(contranominal(n, s))) == b.lower);
      if (s >= 2) CHECK(BigInt(count_concepts(rook_context(n, s, 0))) <= b.upper);
    }
  }
}
