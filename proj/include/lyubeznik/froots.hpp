#pragma once

#include <utility>

#include "lyubeznik/homalg.hpp"

namespace lyz {

/// V/W -> V^[p]/W^[p] given by left multiplication with `matrix`. A finitely presented
/// module R^k/K is the case V = R^k, W = K.
struct GeneratingMorphism {
    Subquotient source;
    PolyMatrix matrix;

    static GeneratingMorphism from_map(const FPModuleMap& map);
    /// matrix V lies in V^[p] and matrix W in W^[p].
    bool is_well_defined() const;
};

/// Composite V/W -> V^[p^t]/W^[p^t].
struct IteratedMorphism {
    Subquotient source;
    PolyMatrix matrix;
    unsigned t = 0;

    /// {v in V : matrix v in W^[p^t]}.
    Submodule kernel() const;
};

IteratedMorphism iterate_morphism(const GeneratingMorphism& g, unsigned t);

struct RootData {
    /// kernels[s] is the kernel of the (s+1)-fold composite; kernels.size() == t + 2.
    std::vector<Submodule> kernels;
    unsigned t = 0;
    /// V / Ker_t; the induced morphism into its Frobenius image is injective.
    Subquotient root;
    PolyMatrix matrix;

    GeneratingMorphism root_morphism() const { return GeneratingMorphism{root, matrix}; }
};

/// Smallest t >= 1 with Ker_t == Ker_(t+1), found by the recursion
/// Ker_(s+1) = {v in V : M v in Ker_s^[p]}. Throws ResourceLimit past t_max.
RootData extract_root(const GeneratingMorphism& g, unsigned t_max = 20);

/// (socle dimension of the root, socle dimension of its Frobenius image).
std::pair<std::size_t, std::size_t> verify_root_socle(const RootData& r);

} // namespace lyz
