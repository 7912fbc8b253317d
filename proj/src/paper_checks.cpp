#include "polyadic/paper_checks.hpp"

#include "polyadic/bounds.hpp"
#include "polyadic/enumeration.hpp"
#include "polyadic/generators.hpp"
#include "polyadic/implications.hpp"
#include "polyadic/io.hpp"
#include "polyadic/transforms.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace polyadic {

namespace {

// Every box with nonempty components over the feature space is a feature.
bool nonempty_features_are_all_boxes(const Context& ctx, const std::vector<Feature>& fs) {
  const Shape shape = ctx.feature_shape();
  std::set<std::vector<ElementSet>> seen;
  for (const auto& f : fs) {
    bool nonempty = true;
    for (ElementSet e : f.components) nonempty = nonempty && e != 0;
    if (nonempty) seen.insert(f.components);
  }
  std::size_t expected = 1;
  for (std::size_t j : shape.sizes()) expected *= (std::size_t{1} << j) - 1;
  return seen.size() == expected;
}

Implication objects_vs_rest(const Context& ctx, std::string_view text) {
  const Context ctx2 = Scope{}.apply(ctx);
  return parse_implication(text, ctx2);
}

std::multiset<std::string> descriptions_of(const Context& ctx) {
  std::multiset<std::string> out;
  for (std::size_t o = 0; o < ctx.size(0); ++o) {
    std::string bits;
    boost::to_string(ctx.description(o), bits);
    out.insert(bits);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_paper_checks(unsigned threads) {
  const EnumerationOptions eo{threads};
  std::vector<CheckResult> results;
  auto run = [&](std::string id, std::string description, const std::function<bool(std::ostream&)>& body) {
    CheckResult r{std::move(id), std::move(description), false, ""};
    std::ostringstream detail;
    try {
      r.passed = body(detail);
    } catch (const std::exception& e) {
      detail << "error: " << e.what();
    }
    r.detail = detail.str();
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    results.push_back(std::move(r));
  };

  run("1", "fig3l and fig3r enumerate to their printed 7-concept lists", [&](std::ostream& d) {
    bool ok = true;
    for (const char* name : {"fig3l", "fig3r"}) {
      const Context ctx = paper_fixture(name);
      const ConceptSet expected = parse_concepts(reference_text(std::string(name) + ".concepts"), ctx, ConceptFormat::text);
      const ConceptSet got = enumerate_concepts(ctx, eo);
      d << name << ": " << got.size() << " concepts, printed " << expected.size() << "; ";
      ok = ok && expected.size() == 7 && got == expected;
    }
    return ok;
  });

  run("2", "({α,β},{1,2},{a}) is a concept of fig1", [&](std::ostream& d) {
    const Context ctx = paper_fixture("fig1");
    const ConceptSet cs = parse_concepts("({α,β},{1,2},{a})", ctx, ConceptFormat::text);
    const bool found = enumerate_concepts(ctx, eo).contains(cs.concepts().front());
    d << (found ? "found" : "missing");
    return found;
  });

  run("3", "fig1 flattening and slices match the three fig2 tables", [&](std::ostream& d) {
    const Context ctx = paper_fixture("fig1");
    const Context top = flatten(ctx, Bipartition::from_left(3, {0}));
    const Context by_a = slice(ctx, 2, {0});
    const Context by_13 = slice(ctx, 1, {0, 2});
    bool ok = true;
    for (const auto& [name, got] : {std::pair{"fig2_top", top}, {"fig2_slice_a", by_a}, {"fig2_slice_13", by_13}}) {
      const bool same = serialize_context(got) == serialize_context(parse_context(reference_text(std::string(name) + ".ctx")));
      d << name << (same ? " ok; " : " differs; ");
      ok = ok && same;
    }
    return ok;
  });

  run("4", "three implications hold in fig1", [&](std::ostream& d) {
    const Context ctx = paper_fixture("fig1");
    Scope by_a;
    by_a.slices.push_back({2, {0}});
    Scope by_3;
    by_3.slices.push_back({1, {2}});
    const std::vector<std::pair<Scope, std::string>> cases{
        {by_a, "3 -> 1,2"}, {by_3, "∅ -> b"}, {Scope{}, "(1,a) -> (3,b)"}};
    bool ok = true;
    for (const auto& [scope, text] : cases) {
      const Context ctx2 = scope.apply(ctx);
      const bool h = holds(ctx, parse_implication(text, ctx2, scope));
      d << text << (h ? " holds; " : " fails; ");
      ok = ok && h;
    }
    return ok;
  });

  run("5", "implication classification on fig3l and fig3r", [&](std::ostream& d) {
    const Context left = paper_fixture("fig3l");
    const Context right = paper_fixture("fig3r");
    const StructuralClosure cl(left);
    const StructuralClosure cr(right);
    auto kind = [&](const Context& ctx, const StructuralClosure& c, std::string_view text) {
      return classify(ctx, c, objects_vs_rest(ctx, text)).kind;
    };
    bool ok = true;
    auto expect = [&](std::string_view label, bool cond) {
      d << label << (cond ? " ok; " : " FAILED; ");
      ok = ok && cond;
    };
    using C = Classification;
    for (const auto* text : {"(1,b),(1,c) -> (1,a)", "(2,a) -> (3,a)"}) {
      expect(text, kind(left, cl, text) == C::structural && kind(right, cr, text) == C::structural);
    }
    const auto* t3 = "(2,b) -> (1,a)";
    expect(t3, kind(left, cl, t3) == C::contextual && kind(right, cr, t3) == C::contextual);
    const auto* t4 = "(1,b),(2,a) -> (3,a),(1,c)";
    expect(t4, kind(left, cl, t4) == C::contextual && kind(right, cr, t4) != C::contextual);
    return ok;
  });

  run("6", "canonical context of fig5l is fig5r up to object names", [&](std::ostream& d) {
    const Context minimized = canonical_context(paper_fixture("fig5l"));
    const Context expected = paper_fixture("fig5r");
    const bool same = descriptions_of(minimized) == descriptions_of(expected);
    const bool kept = features(enumerate_concepts(minimized, eo)) == features(enumerate_concepts(paper_fixture("fig5l"), eo));
    d << "objects " << minimized.size(0) << " vs " << expected.size(0) << (same ? ", same descriptions" : ", different descriptions")
      << (kept ? ", features kept" : ", features changed");
    return same && kept;
  });

  run("7", "contranominal scales have n^s concepts", [&](std::ostream& d) {
    bool ok = true;
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t s = 1; s <= 4; ++s) {
        const std::uint64_t got = count_concepts(contranominal(n, s), eo);
        const bool match = BigInt(got) == naive_bounds(n, s).lower;
        if (!match) d << "N(" << n << "," << s << ")=" << got << "; ";
        ok = ok && match;
      }
    }
    d << "N(2,4)=" << count_concepts(contranominal(2, 4), eo);
    return ok;
  });

  run("8", "B-class counts: b_class(3,3), fig4, fig7, fig8", [&](std::ostream& d) {
    const Context b33 = b_class({3, 3});
    const std::uint64_t nb = count_concepts(b33, eo);
    const Context fig4 = paper_fixture("fig4");
    const ConceptSet printed = parse_concepts(reference_text("fig4.concepts"), fig4, ConceptFormat::text);
    const ConceptSet got4 = enumerate_concepts(fig4, eo);
    const Context fig7 = paper_fixture("fig7");
    const ConceptSet got7 = enumerate_concepts(fig7, eo);
    const bool rect = nonempty_features_are_all_boxes(fig7, features(got7));
    const Context fig8 = paper_fixture("fig8");
    const bool equiv = lattice_equivalent(fig8, b33.relabeled(1, fig8.labels(1)).relabeled(2, fig8.labels(2)));
    d << "b_class(3,3)=" << nb << ", fig4 list " << printed.size() << ", fig7=" << got7.size()
      << (rect ? ", all rectangles" : ", missing rectangles") << (equiv ? ", fig8 equivalent" : ", fig8 not equivalent");
    return nb == 51 && printed.size() == 51 && got4 == printed && got7.size() == 11 && rect && equiv;
  });

  run("9", "rook table has 112 concepts and matches the generator", [&](std::ostream& d) {
    const Context crook = paper_fixture("crook");
    const std::uint64_t n = count_concepts(crook, eo);
    const bool same = rook_context(4, 3, 0).relation() == crook.relation();
    d << "count " << n << (same ? ", generator offset 0 matches" : ", generator differs");
    return n == 112 && same;
  });

  run("10", "the side-4 four-dimensional construction has 112*4 concepts", [&](std::ostream& d) {
    const std::uint64_t n = count_concepts(lower_bound_context_4d(4), eo);
    d << "count " << n;
    return n == 448 && BigInt(n) == lower_bound_count_4d(4);
  });

  run("11", "naive bounds bracket random cubic contexts", [&](std::ostream& d) {
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{3, 2}, {3, 3}, {4, 2}};
    std::size_t reached = 0;
    for (const auto& [n, s] : shapes) {
      // The lower bound is a property of the maximum: the contranominal witness reaches it.
      if (BigInt(count_concepts(contranominal(n, s), eo)) != naive_bounds(n, s).lower) {
        d << "contranominal witness misses n^s for n=" << n << ", s=" << s;
        return false;
      }
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto [n, s] = shapes[seed % shapes.size()];
      const Context ctx = random_context(std::vector<std::size_t>(n, s), 0.35 + 0.05 * static_cast<double>(seed % 10), seed);
      const auto b = naive_bounds(n, s);
      const BigInt count = count_concepts(ctx, eo);
      if (count > b.upper) {
        d << "seed " << seed << " exceeds the upper bound";
        return false;
      }
      if (count >= b.lower) ++reached;
    }
    d << "200 contexts within the upper bound, " << reached << " reach n^s";
    return true;
  });

  run("12", "exhaustive search on 2x2 and 2x2x2", [&](std::ostream& d) {
    const SearchResult r22 = exhaustive_fn(2, 2);
    const SearchResult r32 = exhaustive_fn(3, 2);
    const CellSet contranominal22 = canonical_relation(contranominal(2, 2));
    bool witness = false;
    for (const auto& w : r22.witnesses) witness = witness || w.relation() == contranominal22;
    d << "f_2(2)=" << r22.max_count << ", f_3(2)=" << r32.max_count << " over " << r32.relations_visited << " relations";
    return r22.exact && r22.max_count == 4 && witness && r32.exact && r32.relations_visited == 256 &&
           r32.max_count >= 9 && r32.max_count <= 11;
  });

  return results;
}

}  // namespace polyadic
