#pragma once

#include <optional>

#include "lyubeznik/module_ops.hpp"

namespace lyz {

struct LowerLimitResult {
    Submodule ideal;
    /// Chain index at which the value stabilized (e for the limit closure, j for the oracle).
    std::size_t stabilization_index = 0;
};

Submodule bracket_power(const Submodule& s, unsigned e);
PolyMatrix bracket_power(const PolyMatrix& m, unsigned e);

/// Union over j of (f_1^(j+1), ..., f_n^(j+1) : (f_1...f_n)^j).
LowerLimitResult limit_closure(const std::vector<Polynomial>& f, std::size_t e_max = 64);

/// Stationary value of (f_1^(j+1), ..., f_(n-1)^(j+1) : (f_1...f_n)^j); (0) for n <= 1.
LowerLimitResult lower_limit(const std::vector<Polynomial>& f, const RingPtr& ring);

/// The same ideal computed straight from its defining chain, for cross-checking.
/// Returns nullopt if two consecutive values never agree for j <= j_max.
std::optional<LowerLimitResult> lower_limit_oracle(const std::vector<Polynomial>& f, std::size_t j_max);

/// (f_1^(j+1), ..., f_n^(j+1) : (f_1...f_n)^j) for a single j.
Submodule limit_closure_step(const std::vector<Polynomial>& f, std::uint64_t j);

} // namespace lyz
