#include "polyadic/cli.hpp"

#include "polyadic/bounds.hpp"
#include "polyadic/enumeration.hpp"
#include "polyadic/generators.hpp"
#include "polyadic/implications.hpp"
#include "polyadic/io.hpp"
#include "polyadic/paper_checks.hpp"
#include "polyadic/transforms.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace polyadic {

namespace {

// Input rejected for reasons other than command line syntax.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::size_t dimension_arg(const Context& ctx, std::size_t one_based) {
  if (one_based < 1 || one_based > ctx.arity()) {
    throw DomainError("dimension " + std::to_string(one_based) + " does not exist in a " + std::to_string(ctx.arity()) +
                      "-context");
  }
  return one_based - 1;
}

std::vector<std::size_t> element_args(const Context& ctx, std::size_t dim, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& item : labels) {
    for (const auto& l : split(item, ',')) {
      if (l.empty()) continue;
      auto idx = ctx.find_label(dim, l);
      if (!idx) throw DomainError("dimension " + std::to_string(dim + 1) + " has no element '" + l + "'");
      out.push_back(*idx);
    }
  }
  return out;
}

// Scope items: "D=l1,l2" slices dimension D (1-based) by those labels,
// "left=D1,D2" names the object side of the flattening.
Scope parse_scope(const Context& ctx, const std::vector<std::string>& items) {
  Scope scope;
  for (const auto& raw : items) {
    std::istringstream words(raw);
    for (std::string item; words >> item;) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw DomainError("scope item '" + item + "' needs the form D=labels or left=dims");
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "left") {
        scope.left.clear();
        for (const auto& d : split(value, ',')) scope.left.push_back(dimension_arg(ctx, std::stoul(d)));
        continue;
      }
      std::size_t dim_number = 0;
      try {
        dim_number = std::stoul(key);
      } catch (const std::exception&) {
        throw DomainError("scope item '" + item + "' does not start with a dimension number");
      }
      const std::size_t dim = dimension_arg(ctx, dim_number);
      scope.slices.push_back({dim, element_args(ctx, dim, {value})});
    }
  }
  return scope;
}

std::string joined_labels(const Context& ctx2, const CellSet& objects) {
  std::string out;
  for (std::size_t o = objects.find_first(); o != CellSet::npos; o = objects.find_next(o)) {
    out += (out.empty() ? "" : ",") + ctx2.label(0, o);
  }
  return out.empty() ? "∅" : out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + path.string() + "'");
  file << text;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polyadic concept analysis: n-dimensional contexts, concepts, implications and bounds", "polyadic"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for enumeration and search (output does not depend on it)")
      ->check(CLI::Range(1U, 256U));

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Context file, '-' for stdin")->capture_default_str(); };
  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a context");
  gen->require_subcommand(1);
  std::size_t gen_n = 3, gen_s = 2, gen_offset = 0;
  std::vector<std::size_t> gen_sizes;
  std::string fixture_name;
  double density = 0.5;
  std::uint64_t seed = 0;
  auto* gen_contra = gen->add_subcommand("contranominal", "Every tuple except the diagonal");
  gen_contra->add_option("-n", gen_n, "Arity")->required()->check(CLI::Range(2, 16));
  gen_contra->add_option("-s", gen_s, "Side")->required()->check(CLI::Range(1, 64));
  gen_contra->callback([&] { action = [&] { out << serialize_context(contranominal(gen_n, gen_s)); }; });
  auto* gen_bclass = gen->add_subcommand("bclass", "Context whose features are all boxes of j1 x ... x jk");
  gen_bclass->add_option("sizes", gen_sizes, "Feature dimension sizes")->required()->check(CLI::Range(1, 16));
  gen_bclass->callback([&] { action = [&] { out << serialize_context(b_class(gen_sizes)); }; });
  auto* gen_rook = gen->add_subcommand("rook", "Cubic context with one hole per axis line");
  gen_rook->add_option("-n", gen_n, "Arity")->required()->check(CLI::Range(2, 16));
  gen_rook->add_option("-s", gen_s, "Side")->required()->check(CLI::Range(2, 64));
  gen_rook->add_option("--offset", gen_offset, "Residue offset")->capture_default_str();
  gen_rook->callback([&] { action = [&] { out << serialize_context(rook_context(gen_n, gen_s, gen_offset)); }; });
  auto* gen_fixture = gen->add_subcommand("fixture", "A stored table");
  gen_fixture->add_option("name", fixture_name, "fig1 fig3l fig3r fig4 fig5l fig5r fig7 fig8 crook")->required();
  gen_fixture->callback([&] { action = [&] { out << serialize_context(paper_fixture(fixture_name)); }; });
  auto* gen_random = gen->add_subcommand("random", "Independently crossed cells");
  gen_random->add_option("sizes", gen_sizes, "Dimension sizes")->required()->check(CLI::Range(1, 64));
  gen_random->add_option("--density", density, "Probability of a cross")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen_random->add_option("--seed", seed, "Random seed")->required();
  gen_random->callback([&] { action = [&] { out << serialize_context(random_context(gen_sizes, density, seed)); }; });

  // enum / count
  std::string format = "text";
  bool verify = false;
  auto* en = app.add_subcommand("enum", "List all concepts in canonical order");
  add_input(en);
  en->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  en->add_flag("--verify", verify, "Also check the list against the brute-force definition");
  en->callback([&] {
    action = [&] {
      const Context ctx = parse_context(read_input(input, in));
      const ConceptSet cs = enumerate_concepts(ctx, {threads});
      if (verify && brute_force_concepts(ctx) != cs) throw DomainError("enumeration disagrees with the brute-force oracle");
      out << serialize_concepts(ctx, cs, parse_concept_format(format));
    };
  });
  auto* cnt = app.add_subcommand("count", "Number of concepts");
  add_input(cnt);
  cnt->callback([&] {
    action = [&] { out << count_concepts(parse_context(read_input(input, in)), {threads}) << '\n'; };
  });

  // flatten / slice / sum
  std::vector<std::size_t> left_dims, right_dims;
  auto* fl = app.add_subcommand("flatten", "Flatten into a 2-context over a bipartition of the dimensions");
  add_input(fl);
  fl->add_option("--left", left_dims, "Dimensions (1-based) forming the objects")->required();
  fl->add_option("--right", right_dims, "Dimensions forming the attributes (default: the rest)");
  fl->callback([&] {
    action = [&] {
      const Context ctx = parse_context(read_input(input, in));
      Bipartition split;
      for (std::size_t d : left_dims) split.left.push_back(dimension_arg(ctx, d));
      if (right_dims.empty()) {
        split = Bipartition::from_left(ctx.arity(), split.left);
      } else {
        for (std::size_t d : right_dims) split.right.push_back(dimension_arg(ctx, d));
      }
      split.validate(ctx.arity());
      out << serialize_context(flatten(ctx, split));
    };
  });
  std::size_t slice_dim = 0;
  std::vector<std::string> keep;
  auto* sl = app.add_subcommand("slice", "Remove a dimension, keeping tuples present for every listed element");
  add_input(sl);
  sl->add_option("--dim", slice_dim, "Dimension to remove (1-based)")->required();
  sl->add_option("--keep", keep, "Element labels, comma separated (none: full product)");
  sl->callback([&] {
    action = [&] {
      const Context ctx = parse_context(read_input(input, in));
      const std::size_t dim = dimension_arg(ctx, slice_dim);
      out << serialize_context(slice(ctx, dim, element_args(ctx, dim, keep)));
    };
  });
  std::string second_input;
  auto* sum = app.add_subcommand("sum", "Direct sum of two contexts of equal arity");
  sum->add_option("first", input, "First context file, '-' for stdin")->required();
  sum->add_option("second", second_input, "Second context file, '-' for stdin")->required();
  sum->callback([&] {
    action = [&] {
      if (input == "-" && second_input == "-") throw DomainError("only one input can come from stdin");
      out << serialize_context(
          direct_sum(parse_context(read_input(input, in)), parse_context(read_input(second_input, in))));
    };
  });

  // implications
  std::string impl_text;
  std::vector<std::string> scope_items;
  bool print_base = false;
  auto* ic = app.add_subcommand("impl-check", "Check an implication in a flattened (and optionally sliced) context");
  add_input(ic);
  auto* impl_opt = ic->add_option("--impl", impl_text, "Implication, e.g. \"(1,a),(2,b) -> (3,c)\"");
  ic->add_option("--scope", scope_items,
                 "Slices and object side, e.g. \"3=a\" or \"2=1,3 left=1\" (default: objects vs the rest)");
  auto* base_flag = ic->add_flag("--base", print_base, "Print the canonical implication base of the scoped context");
  impl_opt->excludes(base_flag);
  ic->callback([&] {
    action = [&] {
      const Context ctx = parse_context(read_input(input, in));
      const Scope scope = parse_scope(ctx, scope_items);
      const Context ctx2 = scope.apply(ctx);
      if (print_base) {
        for (const auto& imp : dg_base(ctx2)) out << format_implication(ctx2, imp) << '\n';
        return;
      }
      if (impl_text.empty()) throw CLI::RequiredError("--impl or --base");
      const Implication imp = parse_implication(impl_text, ctx2, scope);
      const bool ok = holds(ctx, imp);
      out << (ok ? "holds" : "fails") << "\tsupport: " << joined_labels(ctx2, support(ctx2, imp.premise)) << '\n';
    };
  });
  auto* cl = app.add_subcommand("classify", "Classify implications as structural, contextual or not-holding");
  add_input(cl);
  cl->add_option("--impl", impl_text, "Implication (default: every implication of the base)");
  cl->callback([&] {
    action = [&] {
      const Context ctx = parse_context(read_input(input, in));
      const Context ctx2 = Scope{}.apply(ctx);
      const StructuralClosure closure(ctx);
      std::vector<Implication> imps;
      if (impl_text.empty()) {
        imps = dg_base(ctx2);
      } else {
        imps.push_back(parse_implication(impl_text, ctx2));
      }
      for (const auto& imp : imps) {
        const auto r = classify(ctx, closure, imp);
        out << to_string(r.kind) << '\t' << format_implication(ctx2, imp) << "\tsupport: " << joined_labels(ctx2, r.support)
            << '\n';
      }
    };
  });
  auto* mn = app.add_subcommand("minimize", "Context with the same features and as few objects as the features allow");
  add_input(mn);
  mn->callback([&] { action = [&] { out << serialize_context(canonical_context(parse_context(read_input(input, in)))); }; });
  auto* eq = app.add_subcommand("equiv", "Whether two contexts produce the same concept features");
  eq->add_option("first", input, "First context file, '-' for stdin")->required();
  eq->add_option("second", second_input, "Second context file, '-' for stdin")->required();
  eq->callback([&] {
    action = [&] {
      if (input == "-" && second_input == "-") throw DomainError("only one input can come from stdin");
      const bool same = lattice_equivalent(parse_context(read_input(input, in)), parse_context(read_input(second_input, in)));
      out << (same ? "equivalent" : "not equivalent") << '\n';
    };
  });

  // bounds / search
  std::size_t bn = 3, bs = 2;
  bool csv = false, no_search = false, no_symmetry = false, show_witnesses = false;
  std::int64_t budget_ms = 20000;
  std::string witness_dir;
  auto* bo = app.add_subcommand("bounds", "Known bounds on the maximal number of concepts of a cubic context");
  bo->add_option("-n", bn, "Arity")->required()->check(CLI::Range(2, 64));
  bo->add_option("-s", bs, "Side")->required()->check(CLI::Range(1, 64));
  bo->add_flag("--csv", csv, "CSV output");
  bo->add_flag("--no-search", no_search, "Skip the exhaustive search");
  bo->add_option("--budget-ms", budget_ms, "Time budget of the exhaustive search")->check(CLI::PositiveNumber)->capture_default_str();
  bo->add_option("--witness-dir", witness_dir, "Write the witnesses of the best lower bound here");
  bo->callback([&] {
    action = [&] {
      ReportOptions options;
      options.threads = threads;
      options.search_budget = std::chrono::milliseconds(budget_ms);
      if (no_search) options.search_cell_limit = 0;
      BoundsReport report = bounds_report(bn, bs, options);
      if (!witness_dir.empty() && !report.witnesses.empty()) {
        std::filesystem::create_directories(witness_dir);
        const auto path = std::filesystem::path(witness_dir) / ("f" + std::to_string(bn) + "_" + std::to_string(bs) + ".ctx");
        std::string text;
        for (const auto& w : report.witnesses) text += serialize_context(w);
        write_file(path, text);
        report.witness_file = path.string();
      }
      out << (csv ? csv_header() + render_csv_row(report) : render_text(report));
    };
  });
  auto* se = app.add_subcommand("search", "Exhaustive maximum concept count over all cubic contexts");
  se->add_option("-n", bn, "Arity")->required()->check(CLI::Range(2, 64));
  se->add_option("-s", bs, "Side")->required()->check(CLI::Range(1, 64));
  se->add_flag("--no-symmetry", no_symmetry, "Count every relation instead of one per symmetry class");
  se->add_option("--budget-ms", budget_ms, "Time budget")->check(CLI::PositiveNumber)->capture_default_str();
  se->add_flag("--witnesses", show_witnesses, "Print the maximizing contexts");
  se->callback([&] {
    action = [&] {
      SearchOptions options;
      options.symmetry_reduction = !no_symmetry;
      options.time_budget = std::chrono::milliseconds(budget_ms);
      options.threads = threads;
      const SearchResult r = exhaustive_fn(bn, bs, options);
      out << "max_count " << r.max_count << '\n'
          << "status " << (r.exact ? "exact" : "lower bound (partial search)") << '\n'
          << "relations_visited " << r.relations_visited << '\n'
          << "relations_counted " << r.relations_counted << '\n'
          << "witness_classes " << r.witnesses.size() << '\n';
      if (show_witnesses) {
        for (const auto& w : r.witnesses) out << serialize_context(w);
      }
    };
  });

  bool failed_checks = false;
  auto* vp = app.add_subcommand("verify-paper", "Check the stored tables against their published values");
  vp->callback([&] {
    action = [&] {
      for (const auto& r : run_paper_checks(threads)) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.description << "  [" << r.detail << "]\n";
        failed_checks = failed_checks || !r.passed;
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  try {
    if (action) action();
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return failed_checks ? 1 : 0;
}

}  // namespace polyadic
