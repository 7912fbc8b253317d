#include "polyadic/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace polyadic {

namespace {

constexpr std::string_view kEmptySet = "∅";

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (line[i] == '#') break;
    out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  return value;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

// Splits at commas that are not nested inside (), {} or [].
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

bool wrapped(std::string_view s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close) return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '{') ++depth;
    if (s[i] == ')' || s[i] == '}') --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

std::string join_labels(const Context& ctx, std::size_t dim, ElementSet set) {
  if (set == 0) return std::string(kEmptySet);
  std::string out = "{";
  bool first = true;
  for (std::size_t e = 0; e < ctx.size(dim); ++e) {
    if (!has_element(set, e)) continue;
    if (!first) out += ',';
    out += ctx.label(dim, e);
    first = false;
  }
  return out + '}';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

ElementSet resolve_labels(const Context& ctx, std::size_t dim, const std::vector<std::string>& labels,
                          std::size_t line) {
  ElementSet set = 0;
  for (const auto& l : labels) {
    auto idx = ctx.find_label(dim, l);
    if (!idx) throw ParseError(line, "unknown label '" + l + "' in dimension " + std::to_string(dim + 1));
    set |= ElementSet{1} << *idx;
  }
  return set;
}

}  // namespace

Context parse_context(std::string_view text) {
  std::optional<std::size_t> arity;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::string>> labels;
  std::optional<bool> holes;
  std::vector<std::pair<Tuple, std::size_t>> tuples;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (!arity) {
      if (tok.size() != 3 || tok[0] != "NCTX") throw ParseError(line_no, "expected header 'NCTX 1 <n>'");
      if (tok[1] != "1") throw ParseError(line_no, "unsupported format version " + tok[1]);
      arity = parse_count(tok[2], line_no, "arity");
      if (*arity < 1) throw ParseError(line_no, "arity must be at least 1");
      continue;
    }
    if (tok[0] == "sizes") {
      if (!sizes.empty()) throw ParseError(line_no, "duplicate sizes line");
      if (tok.size() != *arity + 1) throw ParseError(line_no, "sizes line needs " + std::to_string(*arity) + " values");
      for (std::size_t d = 0; d < *arity; ++d) {
        sizes.push_back(parse_count(tok[d + 1], line_no, "size"));
        if (sizes.back() == 0) throw ParseError(line_no, "dimension sizes must be at least 1");
      }
      labels.resize(*arity);
      continue;
    }
    if (sizes.empty()) throw ParseError(line_no, "expected 'sizes' line after the header");
    if (tok[0] == "labels") {
      if (holes) throw ParseError(line_no, "labels must come before the mode line");
      if (tok.size() < 2) throw ParseError(line_no, "labels line needs a dimension");
      const std::size_t dim = parse_count(tok[1], line_no, "dimension");
      if (dim < 1 || dim > *arity) throw ParseError(line_no, "labels for nonexistent dimension " + tok[1]);
      if (!labels[dim - 1].empty()) throw ParseError(line_no, "duplicate labels for dimension " + tok[1]);
      if (tok.size() - 2 != sizes[dim - 1]) {
        throw ParseError(line_no, "dimension " + tok[1] + " has " + std::to_string(sizes[dim - 1]) + " elements, got " +
                                      std::to_string(tok.size() - 2) + " labels");
      }
      labels[dim - 1].assign(tok.begin() + 2, tok.end());
      continue;
    }
    if (tok[0] == "mode") {
      if (holes) throw ParseError(line_no, "duplicate mode line");
      if (tok.size() != 2 || (tok[1] != "crosses" && tok[1] != "holes")) {
        throw ParseError(line_no, "expected 'mode crosses' or 'mode holes'");
      }
      holes = tok[1] == "holes";
      continue;
    }
    if (!holes) throw ParseError(line_no, "unexpected '" + tok[0] + "' before the mode line");
    if (tok.size() != *arity) {
      throw ParseError(line_no, "tuple needs " + std::to_string(*arity) + " indices, got " + std::to_string(tok.size()));
    }
    Tuple t;
    for (std::size_t d = 0; d < *arity; ++d) {
      const std::size_t v = parse_count(tok[d], line_no, "1-based index");
      if (v < 1 || v > sizes[d]) {
        throw ValidationError("line " + std::to_string(line_no) + ": index " + tok[d] + " out of range for dimension " +
                              std::to_string(d + 1) + " of size " + std::to_string(sizes[d]));
      }
      t.push_back(v - 1);
    }
    tuples.emplace_back(std::move(t), line_no);
  }
  if (!arity) throw ParseError(0, "empty context file");
  if (sizes.empty()) throw ParseError(line_no, "missing sizes line");
  if (!holes) throw ParseError(line_no, "missing mode line");
  for (std::size_t d = 0; d < *arity; ++d) {
    if (labels[d].empty()) labels[d] = numeric_labels(sizes[d]);
  }
  const Shape shape(sizes);
  CellSet listed(shape.cell_count());
  for (const auto& [t, line] : tuples) listed.set(shape.index_of(t));
  if (*holes) listed.flip();
  try {
    return Context(std::move(labels), std::move(listed));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

std::string serialize_context(const Context& ctx) {
  std::ostringstream out;
  out << "NCTX 1 " << ctx.arity() << "\nsizes";
  for (std::size_t s : ctx.sizes()) out << ' ' << s;
  out << '\n';
  for (std::size_t d = 0; d < ctx.arity(); ++d) {
    if (ctx.labels(d) == numeric_labels(ctx.size(d))) continue;
    out << "labels " << d + 1;
    for (const auto& l : ctx.labels(d)) {
      if (l.find_first_of(" \t\r\n") != std::string::npos || l.front() == '#') {
        throw std::invalid_argument("label '" + l + "' cannot be written to a context file");
      }
      out << ' ' << l;
    }
    out << '\n';
  }
  const bool holes = ctx.cross_count() * 2 > ctx.cell_count();
  out << "mode " << (holes ? "holes" : "crosses") << '\n';
  for (std::size_t i = 0; i < ctx.cell_count(); ++i) {
    if (ctx.contains_cell(i) == holes) continue;
    const Tuple t = ctx.shape().tuple_of(i);
    for (std::size_t d = 0; d < t.size(); ++d) out << (d ? " " : "") << t[d] + 1;
    out << '\n';
  }
  return out.str();
}

ConceptFormat parse_concept_format(std::string_view name) {
  if (name == "text") return ConceptFormat::text;
  if (name == "json") return ConceptFormat::json;
  if (name == "csv") return ConceptFormat::csv;
  throw std::invalid_argument("unknown concept format '" + std::string(name) + "'");
}

std::string format_concept(const Context& ctx, const Concept& c) {
  std::string out = "(";
  for (std::size_t d = 0; d < c.components.size(); ++d) {
    if (d) out += ',';
    out += join_labels(ctx, d, c.components[d]);
  }
  return out + ')';
}

std::string format_feature(const Context& ctx, const Feature& f) {
  std::string out = "(";
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    if (k) out += ',';
    out += join_labels(ctx, k + 1, f.components[k]);
  }
  return out + ')';
}

std::string serialize_concepts(const Context& ctx, const ConceptSet& cs, ConceptFormat format) {
  if (cs.sizes() != ctx.sizes()) throw std::invalid_argument("concept set does not belong to this context");
  std::ostringstream out;
  switch (format) {
    case ConceptFormat::text:
      for (const auto& c : cs) out << format_concept(ctx, c) << '\n';
      break;
    case ConceptFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& c : cs) {
        nlohmann::ordered_json comps = nlohmann::ordered_json::array();
        for (std::size_t d = 0; d < c.components.size(); ++d) {
          nlohmann::ordered_json labels = nlohmann::ordered_json::array();
          for (std::size_t e = 0; e < ctx.size(d); ++e) {
            if (has_element(c.components[d], e)) labels.push_back(ctx.label(d, e));
          }
          comps.push_back(std::move(labels));
        }
        arr.push_back({{"components", std::move(comps)}});
      }
      out << arr.dump(1) << '\n';
      break;
    }
    case ConceptFormat::csv:
      for (std::size_t d = 0; d < ctx.arity(); ++d) out << (d ? "," : "") << "dim" << d + 1;
      out << '\n';
      for (const auto& c : cs) {
        for (std::size_t d = 0; d < c.components.size(); ++d) {
          std::string field;
          for (std::size_t e = 0; e < ctx.size(d); ++e) {
            if (!has_element(c.components[d], e)) continue;
            if (!field.empty()) field += ' ';
            field += ctx.label(d, e);
          }
          out << (d ? "," : "") << csv_field(field);
        }
        out << '\n';
      }
      break;
  }
  return out.str();
}

ConceptSet parse_concepts(std::string_view text, const Context& ctx, ConceptFormat format) {
  std::vector<Concept> concepts;
  if (format == ConceptFormat::json) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, e.what());
    }
    if (!doc.is_array()) throw ParseError(0, "expected a JSON array of concepts");
    for (const auto& entry : doc) {
      const auto& comps = entry.at("components");
      if (!comps.is_array() || comps.size() != ctx.arity()) throw ParseError(0, "concept has the wrong arity");
      Concept c;
      for (std::size_t d = 0; d < ctx.arity(); ++d) {
        c.components.push_back(resolve_labels(ctx, d, comps[d].get<std::vector<std::string>>(), 0));
      }
      concepts.push_back(std::move(c));
    }
    return ConceptSet(ctx.sizes(), std::move(concepts));
  }
  if (format != ConceptFormat::text) throw std::invalid_argument("only text and json concept lists can be parsed");
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos && raw.find_first_not_of(" \t") == hash) continue;
    const std::string line = strip_spaces(raw);
    if (line.empty()) continue;
    if (!wrapped(line, '(', ')')) throw ParseError(line_no, "expected '(X1,...,Xn)'");
    const auto parts = split_top_level(std::string_view(line).substr(1, line.size() - 2));
    if (parts.size() != ctx.arity()) {
      throw ParseError(line_no, "concept has " + std::to_string(parts.size()) + " components, expected " +
                                    std::to_string(ctx.arity()));
    }
    Concept c;
    for (std::size_t d = 0; d < parts.size(); ++d) {
      const auto& p = parts[d];
      if (p == kEmptySet || p == "{}") {
        c.components.push_back(0);
        continue;
      }
      if (!wrapped(p, '{', '}')) throw ParseError(line_no, "component '" + p + "' is not a {set}");
      c.components.push_back(
          resolve_labels(ctx, d, split_top_level(std::string_view(p).substr(1, p.size() - 2)), line_no));
    }
    concepts.push_back(std::move(c));
  }
  return ConceptSet(ctx.sizes(), std::move(concepts));
}

namespace {

CellSet parse_side(std::string_view side, const Context& ctx2) {
  std::string s = strip_spaces(side);
  CellSet cells(ctx2.size(1));
  if (wrapped(s, '{', '}')) s = s.substr(1, s.size() - 2);
  if (s.empty() || s == kEmptySet) return cells;
  for (const auto& item : split_top_level(s)) {
    auto idx = ctx2.find_label(1, item);
    if (!idx && wrapped(item, '(', ')')) idx = ctx2.find_label(1, item.substr(1, item.size() - 2));
    if (!idx) throw ParseError(0, "'" + item + "' is not an attribute of the implication's context");
    cells.set(*idx);
  }
  return cells;
}

}  // namespace

Implication parse_implication(std::string_view text, const Context& ctx2, Scope scope) {
  if (ctx2.arity() != 2) throw std::invalid_argument("implications are parsed against a 2-context");
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos || text.find("->", arrow + 2) != std::string_view::npos) {
    throw ParseError(0, "implication needs exactly one '->'");
  }
  Implication imp;
  imp.premise = parse_side(text.substr(0, arrow), ctx2);
  imp.conclusion = parse_side(text.substr(arrow + 2), ctx2);
  imp.scope = std::move(scope);
  return imp;
}

std::string format_cells(const Context& ctx2, const CellSet& attributes) {
  if (attributes.none()) return std::string(kEmptySet);
  std::string out;
  for (std::size_t i = attributes.find_first(); i != CellSet::npos; i = attributes.find_next(i)) {
    if (!out.empty()) out += ',';
    out += ctx2.label(1, i);
  }
  return out;
}

std::string format_implication(const Context& ctx2, const Implication& implication) {
  return format_cells(ctx2, implication.premise) + " -> " + format_cells(ctx2, implication.conclusion);
}

}  // namespace polyadic
