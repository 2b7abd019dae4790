#include <gtest/gtest.h>

#include <algorithm>

#include "lyubeznik/matrix.hpp"
#include "support.hpp"

using namespace lyz;
using namespace lyz::testing;

namespace {

// S-vector of two basis elements sharing a lead component, built with public arithmetic only.
std::optional<FreeVector> s_vector(const FreeVector& f, const FreeVector& g) {
    const Term& a = f.terms().front();
    const Term& b = g.terms().front();
    if (a.comp != b.comp) {
        return std::nullopt;
    }
    const RingPtr& ring = f.ring();
    const std::size_t n = ring->nvars();
    const Monomial l = mono_lcm(a.mono, b.mono, n);
    const Polynomial ma = Polynomial::monomial(ring, mono_div(l, a.mono, n), ring->inv(a.coef));
    const Polynomial mb = Polynomial::monomial(ring, mono_div(l, b.mono, n), ring->inv(b.coef));
    return ma * f - mb * g;
}

std::vector<FreeVector> random_gens(Sampler& s, const RingPtr& ring, std::size_t rank, std::size_t count,
                                    bool homogeneous) {
    std::vector<FreeVector> gens;
    for (std::size_t k = 0; k < count; ++k) {
        const std::uint32_t deg = std::uint32_t(s.uniform(1, 2));
        gens.push_back(homogeneous ? s.homogeneous_vec(ring, rank, deg, 3)
                                   : FreeVector::from_coords(ring, [&] {
                                         std::vector<Polynomial> c;
                                         for (std::size_t i = 0; i < rank; ++i) {
                                             c.push_back(s.dense(ring, 2, 3));
                                         }
                                         return c;
                                     }()));
    }
    return gens;
}

} // namespace

TEST(Groebner, KnownIdealBasis) {
    auto r = make_ring(2, std::vector<std::string>{"x", "y", "z"});
    const Submodule a = I(r, "x*y + z, y*z + x");
    EXPECT_TRUE(a.contains(FreeVector::from_poly(P(r, "y^2*z + x*y + x^2*y + x*z"))));
    const Submodule b = I(r, "x^2, x*y, y^2");
    EXPECT_EQ(b.basis().size(), 3u);
    EXPECT_TRUE(b.contains(FreeVector::from_poly(P(r, "x^2*z + x*y*z^5"))));
    EXPECT_FALSE(b.contains(FreeVector::from_poly(P(r, "x*z"))));
    EXPECT_TRUE(I(r, "x + 1, x").is_full());
    EXPECT_TRUE(Submodule(r, 2).is_zero());
}

TEST(Groebner, SVectorsReduceToZero) {
    Sampler s(1);
    for (Coeff p : {2u, 3u}) {
        for (std::size_t rank : {1u, 2u, 3u}) {
            auto ring = make_ring(p, 3);
            for (int k = 0; k < 15; ++k) {
                const Submodule m(ring, rank, random_gens(s, ring, rank, 3, k % 2 == 0));
                const auto& b = m.basis();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    for (std::size_t j = i + 1; j < b.size(); ++j) {
                        if (auto sv = s_vector(b[i], b[j])) {
                            EXPECT_TRUE(m.normal_form(*sv).is_zero());
                        }
                    }
                }
            }
        }
    }
}

TEST(Groebner, BasisIsReducedAndIdempotent) {
    Sampler s(2);
    auto ring = make_ring(3, 3);
    for (int k = 0; k < 20; ++k) {
        const Submodule m(ring, 2, random_gens(s, ring, 2, 3, false));
        const auto& b = m.basis();
        for (std::size_t i = 0; i < b.size(); ++i) {
            EXPECT_EQ(b[i].terms().front().coef, 1u);
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (i == j) {
                    continue;
                }
                // no term of b[i] is divisible by the lead of b[j]
                const Term& lj = b[j].terms().front();
                for (const auto& t : b[i].terms()) {
                    EXPECT_FALSE(t.comp == lj.comp && mono_divides(lj.mono, t.mono, ring->nvars()));
                }
            }
        }
        const Submodule again(ring, 2, b);
        EXPECT_EQ(again.basis(), b);
    }
}

TEST(Groebner, MembershipAgreesWithSpanOracle) {
    Sampler s(3);
    for (Coeff p : {2u, 3u}) {
        auto ring = make_ring(p, 3);
        for (int k = 0; k < 25; ++k) {
            const std::size_t rank = 1 + k % 2;
            const auto gens = random_gens(s, ring, rank, 3, true);
            const Submodule m(ring, rank, gens);
            for (int t = 0; t < 6; ++t) {
                const std::uint32_t deg = std::uint32_t(s.uniform(2, 3));
                const FreeVector v = t % 2 ? s.combination(ring, rank, gens, deg) : s.homogeneous_vec(ring, rank, deg, 4);
                EXPECT_EQ(m.contains(v), in_span(gens, v, deg)) << v.to_string();
            }
        }
    }
}

TEST(Groebner, NormalFormIndependentOfGenerators) {
    Sampler s(4);
    auto ring = make_ring(2, 4);
    for (int k = 0; k < 20; ++k) {
        auto gens = random_gens(s, ring, 2, 3, false);
        const Submodule a(ring, 2, gens);
        auto other = gens;
        other.push_back(s.dense(ring, 1, 2) * gens[0] + gens[1]);
        std::reverse(other.begin(), other.end());
        other[1] = other[1] + s.dense(ring, 2, 3) * other[2];
        const Submodule b(ring, 2, other);
        ASSERT_EQ(a, b);
        for (int t = 0; t < 5; ++t) {
            const FreeVector v = FreeVector::from_coords(ring, {s.dense(ring, 3, 5), s.dense(ring, 3, 5)});
            EXPECT_EQ(a.normal_form(v), b.normal_form(v));
        }
    }
}

TEST(Groebner, LiftRoundTrip) {
    Sampler s(5);
    for (Coeff p : {2u, 5u}) {
        auto ring = make_ring(p, 3);
        for (int k = 0; k < 20; ++k) {
            const std::size_t rank = 1 + k % 3;
            const auto gens = random_gens(s, ring, rank, 3, k % 2 == 0);
            const Submodule m(ring, rank, gens);
            FreeVector v(ring, rank);
            for (const auto& g : gens) {
                v += s.dense(ring, 2, 3) * g;
            }
            const auto coeffs = m.lift(v);
            ASSERT_TRUE(coeffs.has_value());
            ASSERT_EQ(coeffs->size(), gens.size());
            FreeVector back(ring, rank);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                back += (*coeffs)[i] * gens[i];
            }
            EXPECT_EQ(back, v);
            const FreeVector outside = v + FreeVector::unit(ring, rank, 0);
            EXPECT_EQ(m.lift(outside).has_value(), m.contains(outside));
        }
    }
}

TEST(Groebner, SyzygiesAnnihilateAndContainKoszul) {
    Sampler s(6);
    for (Coeff p : {2u, 3u}) {
        auto ring = make_ring(p, 3);
        for (int k = 0; k < 20; ++k) {
            const std::size_t rank = 1 + k % 2;
            const auto gens = random_gens(s, ring, rank, 3, k % 3 != 0);
            const Submodule m(ring, rank, gens);
            const Submodule syz = m.syzygies();
            ASSERT_EQ(syz.rank(), gens.size());
            const PolyMatrix g = PolyMatrix::from_columns(ring, rank, gens);
            for (const auto& z : syz.generators()) {
                EXPECT_TRUE(g.apply(z).is_zero());
            }
            if (rank == 1) {
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    for (std::size_t j = i + 1; j < gens.size(); ++j) {
                        const FreeVector kz = gens[j].coord(0) * FreeVector::unit(ring, gens.size(), i) -
                                              gens[i].coord(0) * FreeVector::unit(ring, gens.size(), j);
                        EXPECT_TRUE(syz.contains(kz));
                    }
                }
            }
        }
    }
}

TEST(Groebner, SyzygiesAreCompleteInLowDegree) {
    // Brute force: every homogeneous syzygy of degree <= 3 found by linear algebra lies in syz.
    auto ring = make_ring(2, std::vector<std::string>{"x", "y", "z"});
    const auto polys = Ps(ring, "x*y, y*z, x*z, x^2 + y^2");
    const Submodule m = Submodule::ideal(ring, polys);
    const Submodule syz = m.syzygies();
    const std::size_t k = polys.size();
    for (std::uint32_t deg = 2; deg <= 3; ++deg) {
        // candidate coefficient vectors: all F_2 combinations of monomial * e_i with total degree deg
        std::vector<FreeVector> cols;
        for (std::size_t i = 0; i < k; ++i) {
            for (const auto& mono : monomials_of_degree(3, deg - 2)) {
                cols.push_back(Polynomial::monomial(ring, mono) * FreeVector::unit(ring, k, i));
            }
        }
        ASSERT_LE(cols.size(), 24u);
        for (std::uint32_t mask = 1; mask < (1u << cols.size()); mask += 1 + (mask % 7)) {
            FreeVector z(ring, k);
            for (std::size_t b = 0; b < cols.size(); ++b) {
                if (mask & (1u << b)) {
                    z += cols[b];
                }
            }
            Polynomial image(ring);
            for (std::size_t i = 0; i < k; ++i) {
                image += z.coord(i) * polys[i];
            }
            if (image.is_zero()) {
                EXPECT_TRUE(syz.contains(z));
            }
        }
    }
}

TEST(Groebner, FrobeniusOfBasis) {
    Sampler s(7);
    auto ring = make_ring(3, 3);
    for (int k = 0; k < 10; ++k) {
        const auto gens = random_gens(s, ring, 2, 3, false);
        const Submodule m(ring, 2, gens);
        std::vector<FreeVector> fg;
        for (const auto& g : gens) {
            fg.push_back(g.frobenius(1));
        }
        EXPECT_EQ(m.frobenius(1), Submodule(ring, 2, fg));
        EXPECT_EQ(m.frobenius(1).basis(), Submodule(ring, 2, fg).basis());
    }
}

TEST(Groebner, ResourceLimitThrows) {
    auto ring = make_ring(2, 4);
    auto saved = groebner_limits();
    groebner_limits().max_basis_size = 3;
    EXPECT_THROW(I(ring, "X1^3 + X2*X3, X2^3 + X1*X4, X3^3 + X4^2*X1, X4^3 + X1*X2").basis(), ResourceLimit);
    groebner_limits() = saved;
}
