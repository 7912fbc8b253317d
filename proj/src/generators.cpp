#include "polyadic/generators.hpp"

#include "polyadic/io.hpp"

#include <map>
#include <random>

namespace polyadic {

namespace embedded {
// Generated at configure time from data/fixtures and data/reference.
const std::map<std::string, std::string_view>& files();
}  // namespace embedded

Context contranominal(std::size_t arity, std::size_t side) {
  if (arity < 2) throw std::invalid_argument("contranominal scale needs arity at least 2");
  if (side < 1) throw std::invalid_argument("contranominal scale needs side at least 1");
  const Shape shape(std::vector<std::size_t>(arity, side));
  CellSet relation(shape.cell_count());
  relation.set();
  Tuple diagonal(arity);
  for (std::size_t x = 0; x < side; ++x) {
    std::fill(diagonal.begin(), diagonal.end(), x);
    relation.reset(shape.index_of(diagonal));
  }
  return Context(std::vector<std::vector<std::string>>(arity, numeric_labels(side)), std::move(relation));
}

Context b_class(const std::vector<std::size_t>& feature_sizes) {
  if (feature_sizes.empty()) throw std::invalid_argument("b_class needs at least one feature dimension");
  for (std::size_t j : feature_sizes) {
    if (j < 1) throw std::invalid_argument("b_class sizes must be at least 1");
  }
  const Shape features(feature_sizes);
  std::vector<CellSet> descriptions;
  for (std::size_t k = feature_sizes.size(); k-- > 0;) {
    for (std::size_t x = feature_sizes[k]; x-- > 0;) {
      CellSet desc(features.cell_count());
      for (std::size_t i = 0; i < features.cell_count(); ++i) {
        if ((i / features.stride(k)) % feature_sizes[k] != x) desc.set(i);
      }
      descriptions.push_back(std::move(desc));
    }
  }
  std::vector<std::vector<std::string>> labels;
  labels.emplace_back();
  for (std::size_t o = 1; o <= descriptions.size(); ++o) labels[0].push_back("o" + std::to_string(o));
  for (std::size_t j : feature_sizes) labels.push_back(numeric_labels(j));
  const std::size_t width = features.cell_count();
  CellSet relation(descriptions.size() * width);
  for (std::size_t o = 0; o < descriptions.size(); ++o) {
    for (std::size_t i = 0; i < width; ++i) {
      if (descriptions[o].test(i)) relation.set(o * width + i);
    }
  }
  return Context(std::move(labels), std::move(relation));
}

Context rook_context(std::size_t arity, std::size_t side, std::size_t offset) {
  if (arity < 2) throw std::invalid_argument("rook context needs arity at least 2");
  if (side < 2) throw std::invalid_argument("rook context needs side at least 2");
  const Shape shape(std::vector<std::size_t>(arity, side));
  CellSet relation(shape.cell_count());
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    const Tuple t = shape.tuple_of(i);
    std::size_t sum = t[0] + offset;
    for (std::size_t d = 2; d < arity; ++d) sum += t[d];
    if (t[1] != sum % side) relation.set(i);
  }
  return Context(std::vector<std::vector<std::string>>(arity, numeric_labels(side)), std::move(relation));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"fig1", "fig3l", "fig3r", "fig4", "fig5l",
                                              "fig5r", "fig7", "fig8", "crook"};
  return names;
}

Context paper_fixture(std::string_view name) {
  for (const auto& known : fixture_names()) {
    if (known == name) return parse_context(reference_text(known + ".ctx"));
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::string_view reference_text(std::string_view file_name) {
  const auto& files = embedded::files();
  auto it = files.find(std::string(file_name));
  if (it == files.end()) throw std::invalid_argument("no stored data file '" + std::string(file_name) + "'");
  return it->second;
}

Context random_context(const std::vector<std::size_t>& sizes, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  const Shape shape(sizes);
  std::mt19937_64 rng(seed);
  CellSet relation(shape.cell_count());
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    // 53 random bits mapped to [0, 1); independent of the library's distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < density) relation.set(i);
  }
  std::vector<std::vector<std::string>> labels;
  for (std::size_t s : sizes) labels.push_back(numeric_labels(s));
  return Context(std::move(labels), std::move(relation));
}

}  // namespace polyadic
