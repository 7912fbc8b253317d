#include "oracles.hpp"

#include "polyadic/enumeration.hpp"
#include "polyadic/generators.hpp"

#include <doctest.h>

using namespace polyadic;

TEST_CASE("contranominal scales") {
  const Context c = contranominal(2, 4);
  CHECK(c.cross_count() == 12);
  for (std::size_t x = 0; x < 4; ++x) CHECK_FALSE(c.contains(std::vector<std::size_t>{x, x}));
  CHECK(count_concepts(c) == 16);
  for (std::size_t n = 2; n <= 5; ++n) CHECK(count_concepts(contranominal(n, 1)) == n);
  CHECK(count_concepts(contranominal(3, 1)) == 3);
  CHECK(count_concepts(contranominal(3, 2)) == 9);
  CHECK(count_concepts(contranominal(3, 3)) == 27);
  CHECK(count_concepts(contranominal(5, 3)) == 125);
  CHECK_THROWS_AS(contranominal(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(contranominal(3, 0), std::invalid_argument);
}

TEST_CASE("b_class(3,3) is the fig4 table") {
  const Context b = b_class({3, 3});
  const Context fig4 = paper_fixture("fig4");
  CHECK(b.sizes() == fig4.sizes());
  CHECK(b.relation() == fig4.relation());
  CHECK(b.labels(0) == std::vector<std::string>{"o1", "o2", "o3", "o4", "o5", "o6"});
  CHECK(count_concepts(b) == 51);
}

TEST_CASE("b_class concept count") {
  const std::vector<std::vector<std::size_t>> shapes{{1}, {3}, {2, 2}, {1, 3}, {2, 3}, {2, 2, 2}, {3, 1, 2}};
  for (const auto& j : shapes) {
    std::uint64_t expected = 1;
    for (std::size_t x : j) expected *= (std::uint64_t{1} << x) - 1;
    expected += j.size();  // + n - 1 with n = j.size() + 1
    const Context b = b_class(j);
    CHECK(count_concepts(b) == expected);
    if (b.cell_count() <= 64) CHECK(oracle::concepts(oracle::table_of(b)).size() == expected);
  }
  CHECK_THROWS_AS(b_class({}), std::invalid_argument);
  CHECK_THROWS_AS(b_class({2, 0}), std::invalid_argument);
}

TEST_CASE("features of b_class(2,2) are all rectangles") {
  std::set<oracle::Subsets> rectangles{{0, 0b11}, {0b11, 0}};
  for (std::uint64_t a = 1; a < 4; ++a) {
    for (std::uint64_t b = 1; b < 4; ++b) rectangles.insert({a, b});
  }
  CHECK(oracle::features(oracle::concepts_of(enumerate_concepts(b_class({2, 2})))) == rectangles);
}

TEST_CASE("rook table matches the generator") {
  const Context crook = paper_fixture("crook");
  CHECK(crook.cell_count() - crook.cross_count() == 27);
  CHECK(rook_context(4, 3, 0).relation() == crook.relation());
  CHECK(rook_context(4, 3, 1).relation() != crook.relation());
  CHECK(count_concepts(rook_context(4, 3, 0)) == 112);
}

TEST_CASE("rook contexts have one hole per axis line") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t s = 2; s <= 4; ++s) {
      for (std::size_t offset = 0; offset < s; ++offset) {
        const Context r = rook_context(n, s, offset);
        const Shape& shape = r.shape();
        for (std::size_t d = 0; d < n; ++d) {
          // lines along d: all cells with t[d] == 0 as starting points
          for (std::size_t i = 0; i < shape.cell_count(); ++i) {
            Tuple t = shape.tuple_of(i);
            if (t[d] != 0) continue;
            std::size_t holes = 0;
            for (std::size_t x = 0; x < s; ++x) {
              t[d] = x;
              holes += !r.contains(t);
            }
            CHECK(holes == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("two-dimensional rook contexts are contranominal up to relabeling") {
  for (std::size_t s = 2; s <= 5; ++s) {
    CHECK(count_concepts(rook_context(2, s, 1)) == (std::uint64_t{1} << s));
  }
  CHECK_THROWS_AS(rook_context(1, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(rook_context(3, 1, 0), std::invalid_argument);
}

TEST_CASE("stored fixtures") {
  for (const auto& name : fixture_names()) CHECK_NOTHROW(paper_fixture(name));
  CHECK(paper_fixture("fig7").size(0) == 3);
  CHECK(paper_fixture("fig1").labels(0) == std::vector<std::string>{"α", "β", "γ"});
  CHECK_THROWS_AS(paper_fixture("fig2"), std::invalid_argument);
  CHECK_THROWS_AS(reference_text("missing.ctx"), std::invalid_argument);
}

TEST_CASE("random contexts") {
  CHECK(random_context({2, 3, 2}, 0.0, 5).cross_count() == 0);
  const Context full = random_context({2, 2, 2}, 1.0, 5);
  CHECK(full.cross_count() == 8);
  CHECK(count_concepts(full) == oracle::concepts(oracle::table_of(full)).size());
  CHECK(count_concepts(full) == 1);
  CHECK(random_context({4, 4, 4}, 0.5, 9) == random_context({4, 4, 4}, 0.5, 9));
  CHECK_FALSE(random_context({4, 4, 4}, 0.5, 9) == random_context({4, 4, 4}, 0.5, 10));
  const Context half = random_context({16, 16, 16}, 0.5, 3);
  CHECK(half.cross_count() > 1800);
  CHECK(half.cross_count() < 2300);
  CHECK_THROWS_AS(random_context({2, 2}, 1.5, 1), std::invalid_argument);
}
