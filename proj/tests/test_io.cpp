#include "polyadic/enumeration.hpp"
#include "polyadic/generators.hpp"
#include "polyadic/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>

using namespace polyadic;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_context(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l[0] != '#') out.push_back(l);
  }
  return out;
}

}  // namespace

TEST_CASE("parse the fig1 file") {
  const Context ctx = parse_context(reference_text("fig1.ctx"));
  CHECK(ctx.sizes() == std::vector<std::size_t>{3, 3, 3});
  CHECK(ctx.cross_count() == 11);
  CHECK(ctx.labels(1) == std::vector<std::string>{"1", "2", "3"});
  CHECK(ctx.labels(2) == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("holes mode complements the listed tuples") {
  const Context crook = parse_context(reference_text("crook.ctx"));
  CHECK(crook.cell_count() == 81);
  CHECK(crook.cross_count() == 54);
  const Context none = parse_context("NCTX 1 2\nsizes 2 2\nmode holes\n");
  CHECK(none.cross_count() == 4);
}

TEST_CASE("empty crosses body and comments") {
  const Context ctx = parse_context("# leading comment\n\nNCTX 1 3   # header\nsizes 1 2 3\nmode crosses\n");
  CHECK(ctx.cross_count() == 0);
  const Context one = parse_context("NCTX 1 2\nsizes 2 2\nmode crosses\n2 1 # (2,1)\n#1 1\n");
  CHECK(one.cross_count() == 1);
  CHECK(one.contains(std::vector<std::size_t>{1, 0}));
}

TEST_CASE("malformed files report the offending line") {
  CHECK(error_line("NCTX 2 3\n") == 1);
  CHECK(error_line("NCTX 1 2\nmode crosses\n") == 2);
  CHECK(error_line("NCTX 1 2\nsizes 2\n") == 2);
  CHECK(error_line("NCTX 1 2\nsizes 2 x\n") == 2);
  CHECK(error_line("NCTX 1 2\nsizes 2 0\n") == 2);
  CHECK(error_line("NCTX 1 2\nsizes 2 2\nlabels 1 a\n") == 3);
  CHECK(error_line("NCTX 1 2\nsizes 2 2\nlabels 3 a b\n") == 3);
  CHECK(error_line("NCTX 1 2\nsizes 2 2\nlabels 1 a b\nlabels 1 c d\n") == 4);
  CHECK(error_line("NCTX 1 2\nsizes 2 2\nmode both\n") == 3);
  CHECK(error_line("NCTX 1 2\nsizes 2 2\nmode crosses\n1\n") == 4);
  CHECK(error_line("NCTX 1 2\nsizes 2 2\n1 1\n") == 3);
  CHECK(error_line("NCTX 1 2\nsizes 2 2\nmode crosses\nmode holes\n") == 4);
  CHECK_THROWS_AS(parse_context(""), ParseError);
  CHECK_THROWS_AS(parse_context("NCTX 1 2\nsizes 2 2\n"), ParseError);
}

TEST_CASE("out of range indices and duplicate labels are validation errors") {
  CHECK_THROWS_AS(parse_context("NCTX 1 2\nsizes 2 2\nmode crosses\n1 3\n"), ValidationError);
  CHECK_THROWS_AS(parse_context("NCTX 1 2\nsizes 2 2\nmode crosses\n0 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_context("NCTX 1 2\nsizes 2 2\nlabels 1 a a\nmode crosses\n"), ValidationError);
}

TEST_CASE("fixtures round trip through the file format") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const Context ctx = paper_fixture(name);
    const std::string text = serialize_context(ctx);
    CHECK(parse_context(text) == ctx);
    CHECK(serialize_context(parse_context(text)) == text);
  }
  CHECK(serialize_context(paper_fixture("crook")).find("mode holes") != std::string::npos);
  CHECK(serialize_context(paper_fixture("fig1")).find("mode crosses") != std::string::npos);
  CHECK(serialize_context(paper_fixture("fig1")).find("labels 2") == std::string::npos);
}

TEST_CASE("labels that cannot be written are rejected") {
  const Context ctx = Context::empty({2, 1}).relabeled(0, {"a b", "c"});
  CHECK_THROWS_AS(serialize_context(ctx), std::invalid_argument);
}

TEST_CASE("text concept lists match the printed fig3 lists") {
  const Context ctx = paper_fixture("fig3l");
  const auto got = lines_of(serialize_concepts(ctx, enumerate_concepts(ctx), ConceptFormat::text));
  auto want = lines_of(std::string(reference_text("fig3l.concepts")));
  CHECK(got.size() == 7);
  CHECK(std::set<std::string>(got.begin(), got.end()) == std::set<std::string>(want.begin(), want.end()));
  CHECK(got.front() == "(∅,{1,2,3},{a,b,c})");
}

TEST_CASE("json and csv concept lists") {
  const Context ctx = paper_fixture("fig3l");
  const ConceptSet cs = enumerate_concepts(ctx);
  const auto doc = nlohmann::json::parse(serialize_concepts(ctx, cs, ConceptFormat::json));
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 7);
  CHECK(doc[0]["components"][0].empty());
  CHECK(doc[0]["components"][2] == nlohmann::json({"a", "b", "c"}));
  CHECK(parse_concepts(doc.dump(), ctx, ConceptFormat::json) == cs);
  const auto csv = lines_of(serialize_concepts(ctx, cs, ConceptFormat::csv));
  CHECK(csv.size() == 8);
  CHECK(csv[0] == "dim1,dim2,dim3");
  CHECK(csv[1] == ",1 2 3,a b c");
  const Context odd = Context::empty({1, 1}).relabeled(0, {"x,y"});
  const auto rows = lines_of(serialize_concepts(odd, enumerate_concepts(odd), ConceptFormat::csv));
  CHECK(std::find(rows.begin(), rows.end(), "\"x,y\",") != rows.end());
}

TEST_CASE("unit context serializes to n lines") {
  const Context unit = Context::empty({1, 1, 1});
  CHECK(lines_of(serialize_concepts(unit, enumerate_concepts(unit), ConceptFormat::text)).size() == 3);
}

TEST_CASE("concept list parse errors") {
  const Context ctx = paper_fixture("fig3l");
  CHECK_THROWS_AS(parse_concepts("({α},{1})", ctx, ConceptFormat::text), ParseError);
  CHECK_THROWS_AS(parse_concepts("({ω},{1},{a})", ctx, ConceptFormat::text), ParseError);
  CHECK_THROWS_AS(parse_concepts("{α},{1},{a}", ctx, ConceptFormat::text), ParseError);
  CHECK_THROWS_AS(parse_concepts("[{\"components\": [[\"α\"]]}]", ctx, ConceptFormat::json), ParseError);
  CHECK_THROWS_AS(parse_concepts("not json", ctx, ConceptFormat::json), ParseError);
  CHECK_THROWS_AS(parse_concepts("", ctx, ConceptFormat::csv), std::invalid_argument);
  CHECK(parse_concepts("({}, {1,2,3}, {a,b,c})\n", ctx, ConceptFormat::text).size() == 1);
  CHECK(parse_concept_format("json") == ConceptFormat::json);
  CHECK_THROWS_AS(parse_concept_format("xml"), std::invalid_argument);
}

TEST_CASE("implication text") {
  const Context ctx2 = Scope{}.apply(paper_fixture("fig1"));
  const Implication imp = parse_implication(" (1,a), (2,a) ->{(3,b)}", ctx2);
  CHECK(imp.premise.count() == 2);
  CHECK(imp.conclusion.count() == 1);
  CHECK(format_implication(ctx2, imp) == "(1,a),(2,a) -> (3,b)");
  CHECK(parse_implication("-> (1,a)", ctx2).premise.none());
  CHECK(parse_implication("∅ -> {}", ctx2).conclusion.none());
  CHECK(format_cells(ctx2, CellSet(9)) == "∅");
  CHECK_THROWS_AS(parse_implication("(1,a) (2,a)", ctx2), ParseError);
  CHECK_THROWS_AS(parse_implication("(1,a) -> (2,a) -> (3,a)", ctx2), ParseError);
  CHECK_THROWS_AS(parse_implication("(1,d) -> (2,a)", ctx2), ParseError);
  CHECK_THROWS_AS(parse_implication("a -> b", paper_fixture("fig1")), std::invalid_argument);
  // single-dimension attributes may be written with or without parentheses
  Scope by_a;
  by_a.slices.push_back({2, {0}});
  const Context sliced = by_a.apply(paper_fixture("fig1"));
  CHECK(parse_implication("(3) -> 1,2", sliced).premise == parse_implication("3 -> 1,2", sliced).premise);
}
