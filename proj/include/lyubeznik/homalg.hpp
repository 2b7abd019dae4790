#pragma once

#include "lyubeznik/module_ops.hpp"

namespace lyz {

/// Differentials d_1, d_2, ... of a free resolution of R/I; d_k maps F_k to F_(k-1), F_0 = R.
struct FreeResolution {
    std::vector<PolyMatrix> d;

    /// Rank of F_k; zero past the end of the resolution.
    std::size_t rank(std::size_t k) const;
    /// d_k, or a zero matrix of the right shape past the end (k >= 1).
    PolyMatrix differential(std::size_t k, const RingPtr& ring) const;
    FreeResolution frobenius(unsigned e) const;
};

/// Coker of the relation module: R^rank / relations.
struct FPModule {
    Submodule relations;

    std::size_t rank() const { return relations.rank(); }
    const RingPtr& ring() const { return relations.ring(); }
    bool is_zero() const { return relations.is_full(); }
    PolyMatrix relation_matrix() const;
    Subquotient as_subquotient() const { return Subquotient{Submodule::full(ring(), rank()), relations}; }
};

/// Map Coker(source) -> Coker(target) induced by left multiplication with `matrix`.
struct FPModuleMap {
    FPModule source;
    FPModule target;
    PolyMatrix matrix;

    /// matrix * source.relations lands in target.relations.
    bool is_well_defined() const;
};

/// Resolution of R/I by iterated syzygies, pruned of unit entries, up to `length` differentials
/// (fewer when it ends earlier).
FreeResolution free_resolution(const Submodule& ideal, std::size_t length);

/// Lifts the quotient map R/I^[p^e] -> R/I to a chain map from the Frobenius image of
/// `res` to `res`. Returns M_0 = [1], M_1, ..., M_length.
std::vector<PolyMatrix> lift_frobenius_chain_map(const FreeResolution& res, unsigned e, std::size_t length);

/// Generic chain-map lift: given M_0 from R^(source F_0) to R^(target F_0), returns
/// M_0..M_length with target.d_k M_k = M_(k-1) source.d_k.
std::vector<PolyMatrix> lift_chain_map(const PolyMatrix& m0, const FreeResolution& source,
                                       const FreeResolution& target, std::size_t length);

struct ExtModule {
    /// Ext^j(R/c, R) = R^k / relations.
    FPModule module;
    /// Generators of ker(d_(j+1)^T), one column per generator of the module.
    PolyMatrix cycles;
    /// Image of d_j^T inside the same free module.
    Submodule boundaries;
};

/// Ext^j_R(R/I, R) presented from `res` (which must have at least j+1 differentials
/// or have ended).
ExtModule ext_module(std::size_t j, const FreeResolution& res, const RingPtr& ring);

/// The map Ext^j(R/I, R) -> Ext^j(R/I^[p], R) = F(Ext^j(R/I, R)). The target relations are
/// exactly the bracket power of the source relations.
struct ExtFrobenius {
    ExtModule ext;
    FPModuleMap map;
};
ExtFrobenius ext_frobenius_map(std::size_t j, const Submodule& ideal);
ExtFrobenius ext_frobenius_map(std::size_t j, const FreeResolution& res, const RingPtr& ring);

/// {v : matrix v in Im(target.relations)}; contains the source relations.
Submodule kernel_of_map(const FPModuleMap& phi);

/// Annihilator of Coker(relations): the ideal of f with f R^r inside the relations.
Submodule annihilator(const FPModule& m);

} // namespace lyz
