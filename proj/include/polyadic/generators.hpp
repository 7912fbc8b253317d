#pragma once

#include "polyadic/context.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyadic {

/// N^c_n(s): every tuple of the s-cube except the s diagonal tuples.
Context contranominal(std::size_t arity, std::size_t side);

/// Context whose concepts have every box of the j_1 x ... x j_{n-1}
/// feature space as a feature. One object per (dimension, element): its
/// description is the whole feature space minus the hyperplane of that
/// element. Objects go through the last dimension first, elements in
/// reverse order.
Context b_class(const std::vector<std::size_t>& feature_sizes);

/// Cubic context whose holes are the tuples (0-based) with
/// x_2 = x_1 + x_3 + ... + x_n + offset (mod s): one hole on every axis line.
Context rook_context(std::size_t arity, std::size_t side, std::size_t offset);

/// One of the stored cross tables: fig1, fig3l, fig3r, fig4, fig5l, fig5r,
/// fig7, fig8, crook.
Context paper_fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

/// Raw text of a stored expected output (e.g. "fig2_top.ctx", "fig4.concepts").
std::string_view reference_text(std::string_view file_name);

/// Each cell crossed independently with probability `density`.
Context random_context(const std::vector<std::size_t>& sizes, double density, std::uint64_t seed);

}  // namespace polyadic
