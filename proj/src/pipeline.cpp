#include "lyubeznik/pipeline.hpp"

#include <chrono>

#include "lyubeznik/char_p.hpp"

namespace lyz {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// c R^k: every generator of the ideal times every unit vector.
Submodule ideal_times_free(const Submodule& ideal, std::size_t k) {
    std::vector<FreeVector> gens;
    for (const auto& f : ideal.basis()) {
        const Polynomial g = f.coord(0);
        for (std::size_t l = 0; l < k; ++l) {
            gens.push_back(g * FreeVector::unit(ideal.ring(), k, l));
        }
    }
    return Submodule(ideal.ring(), k, std::move(gens));
}

void finish_column(ColumnData& col, std::size_t length, const PipelineOptions& opts) {
    const RingPtr& ring = col.root->root.V.ring();
    auto start = Clock::now();
    FilterRegularOptions fo;
    fo.seed = opts.seed;
    fo.max_candidates = opts.max_candidates;
    fo.forced = opts.forced;
    col.sequence = find_filter_regular_sequence(col.root->root, length, fo);
    col.timings_ms["filter_regular"] = ms_since(start);
    start = Clock::now();
    for (std::size_t i = 0; i <= length; ++i) {
        std::vector<Polynomial> prefix(col.sequence.elements.begin(), col.sequence.elements.begin() + std::ptrdiff_t(i));
        col.lowlims.push_back(lower_limit(prefix, ring).ideal);
    }
    col.timings_ms["lower_limit"] = ms_since(start);
}

} // namespace

void validate_ideal(const Submodule& c) {
    if (c.rank() != 1) {
        throw InvalidProblem("the defining ideal must be an ideal of R");
    }
    for (const auto& g : c.generators()) {
        if (g.coord(0).constant_term() != 0) {
            throw InvalidProblem("generator " + g.coord(0).to_string() +
                                 " is not in the maximal ideal (X_1, ..., X_n)");
        }
    }
    if (c.is_full()) {
        throw InvalidProblem("the defining ideal is the unit ideal");
    }
}

ColumnData prepare_column(const Submodule& c, std::size_t j, std::size_t length, const PipelineOptions& opts) {
    const RingPtr& ring = c.ring();
    const std::size_t n = ring->nvars();
    if (j > n) {
        throw Error("column index exceeds the number of variables");
    }
    ColumnData col;
    col.j = j;
    auto start = Clock::now();
    const ExtFrobenius ef = ext_frobenius_map(n - j, c);
    col.timings_ms["ext"] = ms_since(start);
    if (ef.map.source.is_zero()) {
        col.ext_zero = true;
        return col;
    }
    start = Clock::now();
    col.root = extract_root(GeneratingMorphism::from_map(ef.map), opts.t_max);
    col.timings_ms["root"] = ms_since(start);
    finish_column(col, length, opts);
    return col;
}

ColumnData prepare_column_from_root(const Submodule& relations, const PolyMatrix& u, std::size_t j, std::size_t length,
                                    const PipelineOptions& opts) {
    ColumnData col;
    col.j = j;
    const FPModule n{relations};
    if (n.is_zero()) {
        col.ext_zero = true;
        return col;
    }
    const GeneratingMorphism g{n.as_subquotient(), u};
    if (!g.is_well_defined()) {
        throw Error("given root multiplier does not map the relations into their Frobenius image");
    }
    auto start = Clock::now();
    col.root = extract_root(g, opts.t_max);
    col.timings_ms["root"] = ms_since(start);
    finish_column(col, length, opts);
    return col;
}

GeneratingMorphism local_cohomology_morphism(const ColumnData& col, std::size_t i) {
    if (col.sequence.elements.size() < i + 1) {
        throw Error("filter-regular sequence too short for row " + std::to_string(i));
    }
    const Subquotient& nroot = col.root->root;
    const RingPtr& ring = nroot.V.ring();
    const std::size_t k = nroot.rank();
    const auto& g = col.sequence.elements;
    const Submodule& ker = nroot.W;

    const Submodule num = sub_sum(ideal_times_free(col.lowlims[i + 1], k), ker);
    Submodule v = sub_intersect(sub_colon(num, g[i]), nroot.V).reduced();
    Submodule w = sub_sum(ideal_times_free(col.lowlims[i], k), ker);
    if (i > 0) {
        std::vector<FreeVector> gv;
        for (const auto& x : nroot.V.generators()) {
            gv.push_back(g[i - 1] * x);
        }
        w = sub_sum(w, Submodule(ring, k, std::move(gv)));
    }
    w = w.reduced();

    Polynomial pi = Polynomial::constant(ring, 1);
    for (std::size_t s = 0; s < i; ++s) {
        pi *= g[s];
    }
    pi = pi.pow(ring->characteristic() - 1);
    return GeneratingMorphism{Subquotient{v, w}, col.root->matrix.scaled(pi)};
}

std::size_t lambda_from_column(const ColumnData& col, std::size_t i, const PipelineOptions& opts, LambdaTrace* trace) {
    if (trace != nullptr) {
        trace->i = i;
        trace->j = col.j;
        trace->ext_zero = col.ext_zero;
        trace->timings_ms = col.timings_ms;
    }
    if (col.ext_zero) {
        return 0;
    }
    auto start = Clock::now();
    const GeneratingMorphism gamma = local_cohomology_morphism(col, i);
    gamma.source.check();
    if (!gamma.is_well_defined()) {
        throw Error("local cohomology generating morphism is not well defined at (" + std::to_string(i) + "," +
                    std::to_string(col.j) + ")");
    }
    const double t_setup = ms_since(start);
    start = Clock::now();
    const RootData j_root = extract_root(gamma, opts.t_max);
    const double t_root = ms_since(start);
    start = Clock::now();
    const auto socles = verify_root_socle(j_root);
    if (socles.first != socles.second) {
        throw Error("root socle check failed: " + std::to_string(socles.first) + " vs " +
                    std::to_string(socles.second));
    }
    const double t_socle = ms_since(start);
    if (trace != nullptr) {
        trace->value = socles.first;
        trace->root_relations = col.root->root.W;
        trace->root_multiplier = col.root->matrix;
        trace->root_index = col.root->t;
        trace->g.assign(col.sequence.elements.begin(), col.sequence.elements.begin() + std::ptrdiff_t(i + 1));
        trace->c_i = col.lowlims[i];
        trace->c_next = col.lowlims[i + 1];
        trace->source = gamma.source;
        trace->local_root_index = j_root.t;
        trace->socle_check = socles;
        trace->timings_ms["local_setup"] = t_setup;
        trace->timings_ms["local_root"] = t_root;
        trace->timings_ms["socle"] = t_socle;
    }
    return socles.first;
}

std::pair<std::size_t, LambdaTrace> lyubeznik_number(std::size_t i, std::size_t j, const Submodule& c,
                                                     const PipelineOptions& opts) {
    validate_ideal(c);
    LambdaTrace trace;
    trace.i = i;
    trace.j = j;
    const std::size_t d = krull_dim(c);
    if (i > j || j > d) {
        return {0, trace};
    }
    const ColumnData col = prepare_column(c, j, i + 1, opts);
    const std::size_t v = lambda_from_column(col, i, opts, &trace);
    return {v, trace};
}

std::pair<LyubeznikTable, std::vector<LambdaTrace>> lyubeznik_table(const Submodule& c, const PipelineOptions& opts) {
    validate_ideal(c);
    LyubeznikTable table;
    table.d = krull_dim(c);
    const std::size_t d = table.d;
    table.entries.assign(d + 1, std::vector<std::size_t>(d + 1, 0));
    std::vector<LambdaTrace> traces;
    for (std::size_t j = 0; j <= d; ++j) {
        const ColumnData col = prepare_column(c, j, j + 1, opts);
        for (std::size_t i = 0; i <= j; ++i) {
            LambdaTrace trace;
            table.entries[i][j] = lambda_from_column(col, i, opts, &trace);
            traces.push_back(std::move(trace));
        }
    }
    return {table, traces};
}

} // namespace lyz
