// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lyubeznik/char_p.hpp"
#include "lyubeznik/homalg.hpp"
#include "lyubeznik/module_ops.hpp"
#include "lyubeznik/parse.hpp"
#include "lyubeznik/pipeline.hpp"
#include "lyubeznik/problem.hpp"
#include "support.hpp"

using namespace lyz;
using namespace lyz::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

Problem load(const std::string& name) {
    std::ifstream in(std::string(PROBLEMS_DIR) + "/" + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return build_problem(parse_problem(buf.str()));
}

std::string show(const LyubeznikTable& t) {
    std::string s = "d=" + std::to_string(t.d) + " [";
    for (std::size_t i = 0; i <= t.d; ++i) {
        s += i ? "; " : "";
        for (std::size_t j = i; j <= t.d; ++j) {
            s += (j > i ? " " : "") + std::to_string(t.at(i, j));
        }
    }
    return s + "]";
}

LyubeznikTable upper(std::size_t d, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& nonzero) {
    LyubeznikTable t{d, std::vector<std::vector<std::size_t>>(d + 1, std::vector<std::size_t>(d + 1, 0))};
    for (const auto& [i, j, v] : nonzero) {
        t.entries[i][j] = v;
    }
    return t;
}

void check_table(Check& c, const std::string& label, const Submodule& ideal, const LyubeznikTable& want) {
    const auto [got, traces] = lyubeznik_table(ideal, {});
    c.expect(got == want, label + ": got " + show(got) + ", want " + show(want));
    for (const auto& t : traces) {
        c.expect(t.socle_check.first == t.socle_check.second, label + ": root socle mismatch");
    }
}

Submodule intersect_all(const std::vector<Submodule>& parts) {
    Submodule acc = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        acc = sub_intersect(acc, parts[k]);
    }
    return acc;
}

Submodule direct_sum(const RingPtr& ring, const Submodule& a, const Submodule& b) {
    std::vector<FreeVector> gens;
    for (const auto& g : a.generators()) {
        gens.push_back(FreeVector::from_coords(ring, {g.coord(0), Polynomial(ring)}));
    }
    for (const auto& g : b.generators()) {
        gens.push_back(FreeVector::from_coords(ring, {Polynomial(ring), g.coord(0)}));
    }
    return Submodule(ring, 2, gens);
}

// Kernel chain ascending, re-checked persistence, injective root morphism, equal socles.
void check_root(Check& c, const std::string& label, const RootData& r) {
    c.expect(r.kernels.size() == r.t + 2, label + ": kernel chain length");
    for (std::size_t s = 0; s + 1 < r.kernels.size(); ++s) {
        c.expect(r.kernels[s + 1].contains(r.kernels[s]), label + ": chain not ascending");
    }
    c.expect(r.kernels[r.t] == r.kernels[r.t - 1] && r.kernels[r.t + 1] == r.kernels[r.t],
             label + ": chain not stable");
    const auto g = r.root_morphism();
    c.expect(sub_preimage(g.matrix, bracket_power(g.source.W, 1), g.source.V) == g.source.W,
             label + ": root morphism not injective");
    const auto s = verify_root_socle(r);
    c.expect(s.first == s.second, label + ": root socle mismatch");
}

// Criterion 1: five variables, three components.
void five_variables(Check& c) {
    const Problem pr = load("ex65.prob");
    const RingPtr& ring = pr.ring;
    const Submodule n = I(ring, "X1, X2, X3, X4");
    const Submodule m = maximal_ideal(ring);
    const Submodule ideal = intersect_all({n, I(ring, "X2, X3, X5"), I(ring, "X1 - X5, X2 - X5, X3 - X4")});
    c.expect(ideal == pr.ideal, "problem file ideal differs from the intersection of the three primes");

    const auto [lambda, trace] = lyubeznik_number(0, 1, ideal, {});
    c.expect(lambda == 1, "lambda_{0,1} = " + std::to_string(lambda));
    c.expect(trace.c_next && trace.c_next->is_zero(), "c_1 is not zero");

    // The generating morphism on Ext^4 is already injective and its root has a one-dimensional socle.
    const ColumnData col = prepare_column(ideal, 1, 1, {});
    c.expect(!col.ext_zero && col.root.has_value(), "Ext^4 vanished");
    if (col.root) {
        c.expect(col.root->t == 1 && col.root->kernels[0] == col.root->root.W, "generating morphism not injective");
        c.expect(annihilator(FPModule{col.root->root.W}) == n, "annihilator of Ext^4 is not n");
        c.expect(socle_dimension(col.root->root) == 1, "root socle dimension not 1");
        check_root(c, "Ext^4 root", *col.root);
    }

    // The displayed computation with K = n (+) m, U = X1X2X3X4X5 and g_1 = X5.
    const Submodule k = direct_sum(ring, n, m);
    const Polynomial u = P(ring, "X1*X2*X3*X4*X5");
    PolyMatrix um(ring, 2, 2);
    um(0, 0) = u;
    um(1, 1) = u;
    PipelineOptions opts;
    opts.forced = Ps(ring, "X5");
    const ColumnData given = prepare_column_from_root(k, um, 1, 1, opts);
    c.expect(given.lowlims.size() >= 2 && given.lowlims[0].is_zero() && given.lowlims[1].is_zero(),
             "c_0 or c_1 is not zero for g_1 = X5");
    const GeneratingMorphism xi = local_cohomology_morphism(given, 0);
    c.expect(xi.source.V == direct_sum(ring, n, Submodule::full(ring, 1)), "V is not n (+) R");
    c.expect(xi.source.W == k, "W is not n (+) m");
    c.expect(lambda_from_column(given, 0, opts) == 1, "lambda_{0,1} from the displayed root is not 1");
}

// Criterion 2: seven variables with the displayed g_1..g_5.
void seven_variables_entries(Check& c) {
    const Problem pr = load("ex66.prob");
    const RingPtr& ring = pr.ring;
    const Submodule ideal = intersect_all({I(ring, "X1, X2"), I(ring, "X3, X4"), I(ring, "X5, X6, X7")});
    c.expect(ideal == pr.ideal, "problem file ideal differs from the intersection");

    PipelineOptions opts;
    opts.forced = Ps(ring, "X1 + X2 + X4 + X5 + X7, X2 + X3 + X4 + X5 + X6 + X7, X3 + X6 + X7, X2, X1");
    const ColumnData col = prepare_column(ideal, 4, 5, opts);
    c.expect(col.root && col.root->t == 1, "generating morphism of H^3_c(R) is not injective");
    c.expect(col.sequence.elements == opts.forced, "forced sequence rejected as not filter-regular");

    const Submodule c3 = I(ring, "X2 + X3 + X4 + X5 + X6 + X7, X1 + X3 + X6");
    const Submodule c4 = I(ring, "X1 + X7, X2 + X4 + X5, X3 + X6 + X7");
    const Submodule c5 = I(ring, "X1 + X7, X2, X3 + X6 + X7, X4 + X5");
    c.expect(col.lowlims.size() == 6, "wrong number of lower limits");
    if (col.lowlims.size() == 6) {
        c.expect(col.lowlims[3].reduced().basis() == c3.reduced().basis(), "c_3 differs");
        c.expect(col.lowlims[4].reduced().basis() == c4.reduced().basis(), "c_4 differs");
        c.expect(col.lowlims[5].reduced().basis() == c5.reduced().basis(), "c_5 differs");
    }
    for (std::size_t i = 3; i <= 5; ++i) {
        const std::vector<Polynomial> prefix(opts.forced.begin(), opts.forced.begin() + std::ptrdiff_t(i));
        const auto oracle = lower_limit_oracle(prefix, 40);
        c.expect(oracle && col.lowlims[i] == oracle->ideal, "oracle disagrees on c_" + std::to_string(i));
    }

    // The two summands of the root may come out in either order; fix it once from B.
    const Submodule m = maximal_ideal(ring);
    const Submodule r1 = Submodule::full(ring, 1);
    const Submodule q = I(ring, "X1, X2 + X4, X3, X5, X6, X7");
    const GeneratingMorphism g3 = local_cohomology_morphism(col, 3);
    const bool swap = g3.source.V == direct_sum(ring, q, r1);
    auto sum = [&](const Submodule& a, const Submodule& b) {
        return swap ? direct_sum(ring, b, a) : direct_sum(ring, a, b);
    };
    c.expect(g3.source.V == sum(r1, q), "B differs");
    c.expect(g3.source.W == sum(m, q), "C differs");
    const RootData r3 = extract_root(g3);
    c.expect(r3.kernels[0] == g3.source.W, "(C^[2] : pi_3 U) meet B is not C");
    const GeneratingMorphism g4 = local_cohomology_morphism(col, 4);
    c.expect(g4.source.V == Submodule::full(ring, 2), "V is not R^2");
    c.expect(g4.source.W == direct_sum(ring, m, m), "W is not m (+) m");
    const RootData r4 = extract_root(g4);
    const Submodule rm = sum(r1, m);
    c.expect(r4.kernels[0] == rm && r4.kernels[1] == rm, "iterated kernels are not R (+) m");

    const std::size_t l34 = lambda_from_column(col, 3, opts);
    const std::size_t l44 = lambda_from_column(col, 4, opts);
    c.expect(l34 == 1, "lambda_{3,4} = " + std::to_string(l34) + " with the displayed g's");
    c.expect(l44 == 1, "lambda_{4,4} = " + std::to_string(l44) + " with the displayed g's");
    // and from scratch
    c.expect(lyubeznik_number(3, 4, ideal, {}).first == 1, "lambda_{3,4} from scratch");
    c.expect(lyubeznik_number(4, 4, ideal, {}).first == 1, "lambda_{4,4} from scratch");
}

void seven_variables_table(Check& c) {
    check_table(c, "seven variables", load("ex66.prob").ideal,
                upper(5, {{0, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 4, 1}, {5, 5, 2}}));
}

void four_cycle(Check& c) {
    check_table(c, "4-cycle", load("ex67_ii.prob").ideal, upper(2, {{0, 1, 1}, {2, 2, 2}}));
}

void three_primes(Check& c) {
    const Problem pr = load("ex67_iii.prob");
    const RingPtr& ring = pr.ring;
    const Submodule ideal =
        intersect_all({I(ring, "X1, X2, X3"), I(ring, "X3, X4, X5"), I(ring, "X1, X2, X3, X4")});
    c.expect(ideal == pr.ideal, "problem file ideal differs from the intersection");
    check_table(c, "(X1,X2,X3)(X3,X4,X5)(X1..X4)", ideal, upper(2, {{0, 1, 1}, {2, 2, 2}}));
}

void coordinate_pairs(Check& c) {
    const Problem pr = load("ex67_iv.prob");
    const RingPtr& ring = pr.ring;
    const Submodule ideal = intersect_all({I(ring, "X1, X2"), I(ring, "X3, X4"), I(ring, "X5, X6")});
    c.expect(ideal == pr.ideal, "problem file ideal differs from the intersection");
    check_table(c, "three coordinate pairs", ideal, upper(4, {{0, 2, 1}, {2, 3, 3}, {4, 4, 3}}));
}

const LyubeznikTable kDim3 = upper(3, {{0, 2, 1}, {2, 3, 1}, {3, 3, 1}});

void ten_cubics(Check& c) {
    check_table(c, "ten cubics", load("ex67_i.prob").ideal, kDim3);
}

void seven_cycle(Check& c) {
    check_table(c, "7-cycle", load("ex67_v.prob").ideal, kDim3);
}

void abc_ideal(Check& c) {
    check_table(c, "A/B/C ideal", load("ex67_vi.prob").ideal, kDim3);
}

void complete_intersections(Check& c) {
    const std::vector<std::tuple<Coeff, std::size_t, const char*>> cases{
        {2, 2, "X1"},
        {2, 3, "X1*X2 + X3^2"},
        {3, 4, "X1^2 + X2*X3 + X4^3"},
        {2, 3, "X1, X2"},
        {2, 4, "X1*X2 + X3^2, X4^3"},
        {3, 5, "X1 + X2^2, X3*X4 + X5^2"},
        {2, 3, "X1, X2, X3"},
        {2, 4, "X1*X2, X3^2 + X4, X1 + X2"},
        {3, 5, "X1, X2^2 + X3, X4*X5 + X1^3"},
        {2, 5, "X1*X2, X3*X4, X5^2"},
    };
    for (const auto& [p, n, gens] : cases) {
        auto ring = make_ring(p, n);
        const Submodule ideal = I(ring, gens);
        const auto start = Clock::now();
        const std::size_t d = krull_dim(ideal);
        check_table(c, std::string("CI ") + gens, ideal, upper(d, {{d, d, 1}}));
        const double s = std::chrono::duration<double>(Clock::now() - start).count();
        c.expect(s <= 60.0, std::string("CI ") + gens + " took " + std::to_string(s) + " s");
    }
}

void property_suite(Check& c) {
    // Frobenius commutes with lower limits, and both ideals agree with their defining chains.
    Sampler s(99);
    std::size_t tuples = 0;
    for (int k = 0; k < 60; ++k) {
        const Coeff p = k % 3 == 2 ? 3 : 2;
        const std::size_t n = 2 + k % 3;
        auto ring = make_ring(p, n);
        std::vector<Polynomial> f;
        for (std::size_t i = 0; i < 1 + std::size_t(k) % 3; ++i) {
            Polynomial g = s.dense(ring, 2, 3, k % 4 != 0);
            if (g.is_constant()) {
                g += Polynomial::variable(ring, i % n);
            }
            f.push_back(g);
        }
        std::vector<Polynomial> fp;
        for (const auto& g : f) {
            fp.push_back(g.frobenius(1));
        }
        const Submodule low = lower_limit(f, ring).ideal;
        c.expect(lower_limit(fp, ring).ideal == bracket_power(low, 1), "lowlim(f^p) != lowlim(f)^[p]");
        const auto oracle = lower_limit_oracle(f, 40);
        c.expect(oracle && oracle->ideal == low, "lower_limit differs from its oracle");
        const Submodule lim = limit_closure(f).ideal;
        bool reached = false;
        for (std::uint64_t j = 0; j <= 16 && !reached; ++j) {
            const Submodule step = limit_closure_step(f, j);
            c.expect(lim.contains(step), "limit closure misses a chain member");
            reached = step == lim;
        }
        c.expect(reached, "limit closure chain does not reach the computed ideal");
        ++tuples;
    }
    c.expect(tuples >= 50, "fewer than 50 tuples");

    // S-vectors reduce to zero; membership and lift round trips.
    for (int k = 0; k < 30; ++k) {
        auto ring = make_ring(k % 2 ? 3 : 2, 3);
        const std::size_t rank = 1 + k % 3;
        std::vector<FreeVector> gens;
        for (int i = 0; i < 3; ++i) {
            std::vector<Polynomial> coords;
            for (std::size_t r = 0; r < rank; ++r) {
                coords.push_back(s.dense(ring, 2, 3));
            }
            gens.push_back(FreeVector::from_coords(ring, coords));
        }
        const Submodule mod(ring, rank, gens);
        const auto& b = mod.basis();
        const std::size_t nv = ring->nvars();
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                const Term& x = b[i].terms().front();
                const Term& y = b[j].terms().front();
                if (x.comp != y.comp) {
                    continue;
                }
                const Monomial l = mono_lcm(x.mono, y.mono, nv);
                const FreeVector sv = Polynomial::monomial(ring, mono_div(l, x.mono, nv), ring->inv(x.coef)) * b[i] -
                                      Polynomial::monomial(ring, mono_div(l, y.mono, nv), ring->inv(y.coef)) * b[j];
                c.expect(mod.normal_form(sv).is_zero(), "S-vector does not reduce to zero");
            }
        }
        FreeVector v(ring, rank);
        for (const auto& g : gens) {
            v += s.dense(ring, 2, 3) * g;
        }
        const auto coeffs = mod.lift(v);
        c.expect(coeffs.has_value(), "lift failed on a member");
        if (coeffs) {
            FreeVector back(ring, rank);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                back += (*coeffs)[i] * gens[i];
            }
            c.expect(back == v, "lift does not reproduce the vector");
        }
    }

    // Root invariants on every column of several pipeline runs.
    for (const char* name : {"ex65.prob", "ex67_ii.prob", "ex67_vi.prob"}) {
        const Problem pr = load(name);
        const std::size_t d = krull_dim(pr.ideal);
        for (std::size_t j = 0; j <= d; ++j) {
            const ColumnData col = prepare_column(pr.ideal, j, j + 1, {});
            if (col.ext_zero) {
                continue;
            }
            check_root(c, std::string(name) + " column " + std::to_string(j), *col.root);
            for (std::size_t i = 0; i <= j; ++i) {
                check_root(c, std::string(name) + " cell", extract_root(local_cohomology_morphism(col, i)));
            }
        }
    }

    // Seed independence.
    for (const char* name : {"ex65.prob", "ex67_ii.prob"}) {
        const Problem pr = load(name);
        PipelineOptions a, b;
        a.seed = 0;
        b.seed = 1;
        c.expect(lyubeznik_table(pr.ideal, a).first == lyubeznik_table(pr.ideal, b).first,
                 std::string(name) + ": tables differ between seeds 0 and 1");
    }
}

struct Criterion {
    std::string id;
    std::string title;
    double limit_s;
    std::function<void(Check&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1", "5-variable example: lambda_{0,1} = 1, c_1 = 0, injective root with 1-dim socle", 60, five_variables},
        {"2a", "7-variable example: displayed g's, lower limits, B, C, V, W, lambda_{3,4} = lambda_{4,4} = 1", 600,
         seven_variables_entries},
        {"2b", "7-variable example: full 6x6 table", 1800, seven_variables_table},
        {"3a", "4-cycle table", 120, four_cycle},
        {"3b", "(X1,X2,X3) meet (X3,X4,X5) meet (X1,..,X4) table", 300, three_primes},
        {"4a", "three coordinate pairs in 6 variables: table", 1800, coordinate_pairs},
        {"4b", "ten cubics in 6 variables: table", 1800, ten_cubics},
        {"4c", "7-cycle: table", 1800, seven_cycle},
        {"4d", "A1*A2, B1*B2, C1*C2, A1*B1*C1, A2*B2*C2: table", 1800, abc_ideal},
        {"5", "complete intersections of length 1..3 in <= 5 variables: trivial tables", 600,
         complete_intersections},
        {"6", "property suite: Frobenius/lower limit, oracles, S-vectors, lifts, roots, seeds", 600, property_suite},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        const auto start = Clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes.push_back(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(Clock::now() - start).count();
        if (s > cr.limit_s) {
            c.ok = false;
            c.notes.push_back("over the time limit");
        }
        std::ostringstream line;
        line << (c.ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << "  [" << std::fixed
             << std::setprecision(2) << s << " s, limit " << std::setprecision(0) << cr.limit_s << " s]";
        std::cout << line.str() << std::endl;
        for (const auto& note : c.notes) {
            std::cout << "      " << note << std::endl;
        }
        failed += c.ok ? 0 : 1;
    }
    std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : "all criteria passed") << "\n";
    return failed ? 1 : 0;
}
