#include "lyubeznik/froots.hpp"

#include "lyubeznik/char_p.hpp"

namespace lyz {

GeneratingMorphism GeneratingMorphism::from_map(const FPModuleMap& map) {
    if (!(map.target.relations == bracket_power(map.source.relations, 1))) {
        throw Error("map target is not the Frobenius image of its source");
    }
    return GeneratingMorphism{map.source.as_subquotient(), map.matrix};
}

bool GeneratingMorphism::is_well_defined() const {
    const Submodule vp = bracket_power(source.V, 1);
    const Submodule wp = bracket_power(source.W, 1);
    for (const auto& v : source.V.generators()) {
        if (!vp.contains(matrix.apply(v))) {
            return false;
        }
    }
    for (const auto& w : source.W.generators()) {
        if (!wp.contains(matrix.apply(w))) {
            return false;
        }
    }
    return true;
}

Submodule IteratedMorphism::kernel() const {
    return sub_preimage(matrix, bracket_power(source.W, t), source.V).reduced();
}

IteratedMorphism iterate_morphism(const GeneratingMorphism& g, unsigned t) {
    if (t == 0) {
        throw Error("iterate_morphism needs t >= 1");
    }
    PolyMatrix acc = g.matrix;
    for (unsigned s = 1; s < t; ++s) {
        acc = g.matrix.frobenius(s) * acc;
    }
    return IteratedMorphism{g.source, acc, t};
}

RootData extract_root(const GeneratingMorphism& g, unsigned t_max) {
    const Subquotient& src = g.source;
    auto step = [&](const Submodule& prev) {
        Submodule next = sub_preimage(g.matrix, bracket_power(prev, 1), src.V).reduced();
        if (!next.contains(prev)) {
            throw Error("root extraction: kernel chain is not ascending");
        }
        return next;
    };
    RootData r{.kernels = {}, .t = 0, .root = src, .matrix = g.matrix};
    r.kernels.push_back(sub_preimage(g.matrix, bracket_power(src.W, 1), src.V).reduced());
    if (!r.kernels.back().contains(src.W)) {
        throw Error("root extraction: generating morphism does not kill its denominator");
    }
    for (unsigned t = 1; t <= t_max; ++t) {
        r.kernels.push_back(step(r.kernels.back()));
        if (r.kernels[t] == r.kernels[t - 1]) {
            // One more step must leave the kernel unchanged as well.
            r.kernels.push_back(step(r.kernels.back()));
            if (!(r.kernels.back() == r.kernels[t])) {
                throw Error("root extraction: kernel chain grew again after stabilizing");
            }
            r.t = t;
            r.root = Subquotient{src.V, r.kernels[t - 1]};
            return r;
        }
    }
    std::string chain;
    for (const auto& k : r.kernels) {
        chain += "\n  " + k.to_string();
    }
    throw ResourceLimit("root extraction: kernels did not stabilize within " + std::to_string(t_max) +
                        " iterations; chain:" + chain);
}

std::pair<std::size_t, std::size_t> verify_root_socle(const RootData& r) {
    const std::size_t a = socle_dimension(r.root);
    const std::size_t b = socle_dimension(Subquotient{bracket_power(r.root.V, 1), bracket_power(r.root.W, 1)});
    return {a, b};
}

} // namespace lyz
