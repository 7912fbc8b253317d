#include "oracles.hpp"

#include "polyadic/context.hpp"
#include "polyadic/enumeration.hpp"
#include "polyadic/generators.hpp"

#include <doctest.h>

using namespace polyadic;

namespace {

Concept make(std::vector<ElementSet> c) { return Concept{std::move(c)}; }

}  // namespace

TEST_CASE("shape indexing is row major with the first dimension most significant") {
  const Shape shape({2, 3, 4});
  CHECK(shape.cell_count() == 24);
  CHECK(shape.index_of(std::vector<std::size_t>{1, 2, 3}) == 23);
  CHECK(shape.index_of(std::vector<std::size_t>{1, 0, 0}) == 12);
  CHECK(shape.tuple_of(13) == Tuple{1, 0, 1});
  for (std::size_t i = 0; i < shape.cell_count(); ++i) CHECK(shape.index_of(shape.tuple_of(i)) == i);
  CHECK_THROWS_AS(shape.index_of(std::vector<std::size_t>{0, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(shape.index_of(std::vector<std::size_t>{0, 0}), std::invalid_argument);
  const ElementSet comps[] = {0b10, 0b101, 0b1};
  CHECK(shape.box_cells(comps).count() == 2);
  const ElementSet empty[] = {0b10, 0, 0b1};
  CHECK(shape.box_cells(empty).none());
}

TEST_CASE("bit string order puts the set containing the lowest differing element last") {
  // {1} = "01" < {0} = "10"
  CHECK(bitstring_compare(0b10, 0b01) == std::strong_ordering::less);
  CHECK(bitstring_compare(0, 0b1) == std::strong_ordering::less);
  CHECK(bitstring_compare(0b11, 0b11) == std::strong_ordering::equal);
}

TEST_CASE("contains on fig1") {
  const Context ctx = paper_fixture("fig1");
  CHECK(ctx.contains(std::vector<std::size_t>{0, 0, 0}));   // (α,1,a)
  CHECK_FALSE(ctx.contains(std::vector<std::size_t>{0, 0, 1}));  // (α,1,b)
  CHECK(ctx.contains(std::vector<std::size_t>{0, 0, 0}) == ctx.contains(std::vector<std::size_t>{0, 0, 0}));
  CHECK_THROWS_AS(ctx.contains(std::vector<std::size_t>{3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ctx.contains(std::vector<std::size_t>{0, 0}), std::invalid_argument);
  CHECK(ctx.cross_count() == 11);
}

TEST_CASE("context construction rejects bad labels and sizes") {
  CHECK_THROWS_AS(Context({{"a", "a"}, {"x"}}, CellSet(2)), std::invalid_argument);
  CHECK_THROWS_AS(Context({{"a", ""}, {"x"}}, CellSet(2)), std::invalid_argument);
  CHECK_THROWS_AS(Context({{"a", "b"}, {"x"}}, CellSet(3)), std::invalid_argument);
  CHECK_THROWS_AS(count_concepts(Context::empty({2, 65})), ResourceLimitError);
  const Context e = Context::empty({2, 2});
  CHECK(e.cross_count() == 0);
  CHECK(e.labels(1) == std::vector<std::string>{"1", "2"});
}

TEST_CASE("box_full and is_concept on fig1") {
  const Context ctx = paper_fixture("fig1");
  const std::vector<ElementSet> ab12a{0b011, 0b011, 0b001};
  CHECK(box_full(ctx, ab12a));
  CHECK(is_concept(ctx, ab12a));
  const std::vector<ElementSet> a1b{0b001, 0b001, 0b010};
  CHECK_FALSE(box_full(ctx, a1b));
  const std::vector<ElementSet> ab1a{0b011, 0b001, 0b001};
  CHECK(box_full(ctx, ab1a));
  CHECK_FALSE(is_concept(ctx, ab1a));  // extends by number 2
  const std::vector<ElementSet> vacuous{0, 0b111, 0b111};
  CHECK(box_full(ctx, vacuous));
  CHECK_THROWS_AS(box_full(ctx, std::vector<ElementSet>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_concept(ctx, std::vector<ElementSet>{1, 1}), std::invalid_argument);
}

TEST_CASE("is_concept on fig3l empty-extent concept") {
  const Context ctx = paper_fixture("fig3l");
  CHECK(is_concept(ctx, std::vector<ElementSet>{0, 0b111, 0b111}));
}

TEST_CASE("box_full only loses fullness as components grow") {
  oracle::Rng rng(7);
  for (int c = 0; c < 200; ++c) {
    const Context ctx = oracle::context_of(oracle::random_table(rng, {3, 3, 2}, 0.8));
    std::vector<ElementSet> box{rng.next() & 7, rng.next() & 7, rng.next() & 3};
    std::vector<ElementSet> bigger = box;
    const std::size_t d = rng.below(3);
    bigger[d] |= ElementSet{1} << rng.below(ctx.size(d));
    if (!box_full(ctx, box)) CHECK_FALSE(box_full(ctx, bigger));
  }
}

TEST_CASE("descriptions list the feature cells of one object") {
  const Context ctx = paper_fixture("fig1");
  const Shape f = ctx.feature_shape();
  auto cell = [&](std::size_t number, std::size_t letter) { return f.index_of(std::vector<std::size_t>{number, letter}); };
  CellSet alpha(9);
  for (auto [x, y] : {std::pair{0, 0}, {1, 0}, {2, 0}, {2, 1}}) alpha.set(cell(x, y));
  CHECK(ctx.description(0) == alpha);
  CellSet gamma(9);
  for (auto [x, y] : {std::pair{0, 2}, {2, 1}, {2, 2}}) gamma.set(cell(x, y));
  CHECK(ctx.description(2) == gamma);
  CHECK(Context::empty({2, 2, 2}).description(1).none());
  CHECK_THROWS_AS(ctx.description(3), std::invalid_argument);
}

TEST_CASE("quasi orders") {
  const Concept a = make({0b10, 0b010, 0b010});  // ({β},{2},{b})
  const Concept b = make({0b11, 0, 0b111});     // ({α,β},∅,{a,b,c})
  CHECK(quasi_leq(0, a, b));
  CHECK(quasi_leq(2, a, b));
  CHECK_FALSE(quasi_leq(1, a, b));
  CHECK(quasi_leq(1, a, a));
}

TEST_CASE("n-ordered report") {
  const Context fig1 = paper_fixture("fig1");
  CHECK(check_n_ordered(brute_force_concepts(fig1)).ok);
  CHECK(check_n_ordered(enumerate_concepts(paper_fixture("crook"))).ok);
  const std::vector<Concept> dup{make({1, 1, 1}), make({1, 1, 1})};
  const auto report = check_n_ordered(dup);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.violations.empty());
  // agree on two of three components but differ in the third
  const std::vector<Concept> two{make({1, 1, 1}), make({1, 1, 3})};
  CHECK_FALSE(check_n_ordered(two).ok);
}

TEST_CASE("features of the fig3 pair coincide") {
  const auto left = features(enumerate_concepts(paper_fixture("fig3l")));
  const auto right = features(enumerate_concepts(paper_fixture("fig3r")));
  CHECK(left.size() == 7);
  CHECK(left == right);
  CHECK(std::find(left.begin(), left.end(), Feature{{0b001, 0b111}}) != left.end());
  CHECK(std::find(left.begin(), left.end(), Feature{{0b010, 0b010}}) != left.end());
  const ConceptSet single({2, 2}, {make({1, 1})});
  CHECK(features(single).size() == 1);
}

TEST_CASE("concept sets are sorted, deduplicated and validated") {
  const ConceptSet cs({2, 2}, {make({0b01, 0b11}), make({0b11, 0b01}), make({0b01, 0b11})});
  CHECK(cs.size() == 2);
  CHECK(cs.concepts().front() < cs.concepts().back());
  CHECK_THROWS_AS(ConceptSet({2, 2}, {make({0b100, 0b1})}), std::invalid_argument);
  CHECK_THROWS_AS(ConceptSet({2, 2}, {make({0b1})}), std::invalid_argument);
}
