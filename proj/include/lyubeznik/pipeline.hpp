#pragma once

#include <map>
#include <optional>
#include <string>

#include "lyubeznik/filter_regular.hpp"
#include "lyubeznik/froots.hpp"

namespace lyz {

struct PipelineOptions {
    std::uint64_t seed = 0;
    std::size_t max_candidates = 1000;
    unsigned t_max = 20;
    /// Per-position first candidates for the filter-regular search.
    std::vector<Polynomial> forced;
};

/// Everything shared by the entries of one column j of the table.
struct ColumnData {
    std::size_t j = 0;
    /// Ext^(n-j)(R/c, R) vanished, so the whole column is zero.
    bool ext_zero = false;
    /// Root N = V/Ker of the local cohomology module, with its root morphism.
    std::optional<RootData> root;
    FilterRegularSeq sequence;
    /// lowlims[i] = (g_1, ..., g_i)^lowlim, i = 0..sequence length.
    std::vector<Submodule> lowlims;
    std::map<std::string, double> timings_ms;
};

struct LambdaTrace {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t value = 0;
    bool ext_zero = false;
    /// Root of the local cohomology module: relations and multiplier.
    std::optional<Submodule> root_relations;
    std::optional<PolyMatrix> root_multiplier;
    unsigned root_index = 0;
    std::vector<Polynomial> g;
    std::optional<Submodule> c_i;
    std::optional<Submodule> c_next;
    /// Generating morphism source V/W and multiplier for the local cohomology at m.
    std::optional<Subquotient> source;
    unsigned local_root_index = 0;
    std::pair<std::size_t, std::size_t> socle_check{0, 0};
    std::map<std::string, double> timings_ms;
};

struct LyubeznikTable {
    std::size_t d = 0;
    std::vector<std::vector<std::size_t>> entries;

    std::size_t at(std::size_t i, std::size_t j) const { return entries[i][j]; }
    bool operator==(const LyubeznikTable&) const = default;
};

/// The ideal is the unit ideal or not contained in m.
class InvalidProblem : public Error {
public:
    using Error::Error;
};

/// Throws InvalidProblem unless c is proper and contained in m.
void validate_ideal(const Submodule& c);

/// Root and filter-regular data for column j, with sequence length `length`.
ColumnData prepare_column(const Submodule& c, std::size_t j, std::size_t length, const PipelineOptions& opts);

/// Same, starting from a known root N = R^k / relations with multiplier U.
ColumnData prepare_column_from_root(const Submodule& relations, const PolyMatrix& u, std::size_t j, std::size_t length,
                                    const PipelineOptions& opts);

/// The subquotient V/W and multiplier pi_i U for H^i_m at row i of a prepared column.
GeneratingMorphism local_cohomology_morphism(const ColumnData& col, std::size_t i);

/// lambda_(i,j) from a prepared column (needs sequence length >= i + 1).
std::size_t lambda_from_column(const ColumnData& col, std::size_t i, const PipelineOptions& opts,
                               LambdaTrace* trace = nullptr);

std::pair<std::size_t, LambdaTrace> lyubeznik_number(std::size_t i, std::size_t j, const Submodule& c,
                                                     const PipelineOptions& opts);

std::pair<LyubeznikTable, std::vector<LambdaTrace>> lyubeznik_table(const Submodule& c, const PipelineOptions& opts);

} // namespace lyz
