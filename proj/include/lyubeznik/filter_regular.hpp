#pragma once

#include <cstdint>

#include "lyubeznik/module_ops.hpp"

namespace lyz {

struct FilterRegularSeq {
    std::vector<Polynomial> elements;
    std::uint64_t seed = 0;
    /// Candidates examined at each position, including the accepted one.
    std::vector<std::size_t> tried;
};

/// Whether g is filter-regular on M = V/W relative to the prefix: with
/// P = W + sum g_j V, the quotient (P :_V g) / P must be m-torsion.
/// (For a finitely presented module R^k/K, V = R^k and W = K.)
bool is_filter_regular_step(const Subquotient& m, const std::vector<Polynomial>& prefix, const Polynomial& g);

struct FilterRegularOptions {
    std::uint64_t seed = 0;
    std::size_t max_candidates = 1000;
    /// forced[i], when present, is the first candidate tried at position i.
    std::vector<Polynomial> forced;
};

/// g_1..g_t in m, each filter-regular against its prefix. Candidates are seeded
/// pseudorandom linear forms, then quadratic forms once the linear ones run out.
/// Throws ResourceLimit when max_candidates fail at some position.
FilterRegularSeq find_filter_regular_sequence(const Subquotient& m, std::size_t t, const FilterRegularOptions& opts);

} // namespace lyz
