#pragma once

#include "lyubeznik/groebner.hpp"
#include "lyubeznik/matrix.hpp"

namespace lyz {

/// V/W inside a common free module, W contained in V.
struct Subquotient {
    Submodule V;
    Submodule W;

    std::size_t rank() const { return V.rank(); }
    /// Throws unless W is contained in V.
    void check() const;
};

/// The ideal m = (X_1, ..., X_n).
Submodule maximal_ideal(const RingPtr& ring);

Submodule sub_intersect(const Submodule& a, const Submodule& b);
/// {v in R^r : f v in W}.
Submodule sub_colon(const Submodule& w, const Polynomial& f);
/// {v : g v in W for all g in I}.
Submodule sub_colon_ideal(const Submodule& w, const Submodule& ideal);
/// Union of (W : f^j).
Submodule sub_saturate(const Submodule& w, const Polynomial& f);
/// {v in V : M v in T}, where M maps R^V.rank() to R^T.rank().
Submodule sub_preimage(const PolyMatrix& m, const Submodule& t, const Submodule& v);

/// Krull dimension of R/I. Throws Error for the unit ideal.
std::size_t krull_dim(const Submodule& ideal);

/// Every element of V/W is killed by a power of m.
bool is_m_torsion(const Subquotient& q);

/// dim over F_p of (0 :_{V/W} m).
std::size_t socle_dimension(const Subquotient& q);

/// Rank over F_p of a list of vectors, viewing each as a finite linear combination of terms.
std::size_t fp_rank(const std::vector<FreeVector>& vs);

} // namespace lyz
