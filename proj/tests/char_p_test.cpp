#include <gtest/gtest.h>

#include "lyubeznik/char_p.hpp"
#include "lyubeznik/module_ops.hpp"
#include "support.hpp"

using namespace lyz;
using namespace lyz::testing;

namespace {

struct Tuple {
    RingPtr ring;
    std::vector<Polynomial> f;
};

// >= 50 tuples: 1..3 polynomials of degree <= 2 in 2..4 variables, p in {2, 3}.
std::vector<Tuple> corpus() {
    std::vector<Tuple> out;
    Sampler s(2024);
    for (int k = 0; k < 60; ++k) {
        const Coeff p = k % 3 == 2 ? 3 : 2;
        const std::size_t n = 2 + k % 3;
        auto ring = make_ring(p, n);
        Tuple t{ring, {}};
        const std::size_t len = 1 + (k / 3) % 3;
        for (std::size_t i = 0; i < len; ++i) {
            Polynomial f = s.dense(ring, 2, 3, k % 4 != 0);
            if (f.is_zero() || f.is_constant()) {
                f = Polynomial::variable(ring, i % n) + f;
            }
            t.f.push_back(f);
        }
        out.push_back(std::move(t));
    }
    return out;
}

Polynomial product(const RingPtr& ring, const std::vector<Polynomial>& f) {
    Polynomial out = Polynomial::constant(ring, 1);
    for (const auto& g : f) {
        out *= g;
    }
    return out;
}

} // namespace

TEST(CharP, BracketPower) {
    auto ring = make_ring(3, std::vector<std::string>{"x", "y"});
    EXPECT_EQ(bracket_power(I(ring, "x + y, x*y"), 1), I(ring, "x^3 + y^3, x^3*y^3"));
    EXPECT_EQ(bracket_power(I(ring, "x"), 2), I(ring, "x^9"));
    // not the ordinary power
    EXPECT_FALSE(bracket_power(I(ring, "x, y"), 1) == I(ring, "x^3, x^2*y, x*y^2, y^3"));
}

TEST(CharP, KnownLowerLimits) {
    auto ring = make_ring(2, std::vector<std::string>{"x", "y", "z"});
    EXPECT_TRUE(lower_limit({}, ring).ideal.is_zero());
    EXPECT_TRUE(lower_limit(Ps(ring, "x"), ring).ideal.is_zero());
    // regular sequence: the lower limit is the ideal of the first n-1 elements
    EXPECT_EQ(lower_limit(Ps(ring, "x, y"), ring).ideal, I(ring, "x"));
    EXPECT_EQ(lower_limit(Ps(ring, "x, y, z"), ring).ideal, I(ring, "x, y"));
    // zero divisor on R/(x*y): y kills the class of x
    EXPECT_EQ(lower_limit(Ps(ring, "x*y, y"), ring).ideal, I(ring, "x"));
    // limit closure of a regular sequence is the ideal itself
    EXPECT_EQ(limit_closure(Ps(ring, "x, y^2")).ideal, I(ring, "x, y^2"));
    EXPECT_EQ(limit_closure(Ps(ring, "x*y, x*z")).ideal, I(ring, "y, z"));
}

TEST(CharP, FrobeniusCommutesWithLowerLimit) {
    int checked = 0;
    for (const auto& t : corpus()) {
        std::vector<Polynomial> fp;
        for (const auto& f : t.f) {
            fp.push_back(f.frobenius(1));
        }
        const Submodule a = lower_limit(fp, t.ring).ideal;
        const Submodule b = bracket_power(lower_limit(t.f, t.ring).ideal, 1);
        EXPECT_EQ(a.basis(), b.basis()) << t.f.size() << " polys, first " << t.f[0];
        ++checked;
    }
    EXPECT_GE(checked, 50);
}

TEST(CharP, LowerLimitMatchesDefiningChain) {
    int checked = 0;
    for (const auto& t : corpus()) {
        const auto direct = lower_limit_oracle(t.f, 40);
        ASSERT_TRUE(direct.has_value()) << t.f[0];
        EXPECT_EQ(lower_limit(t.f, t.ring).ideal, direct->ideal) << t.f[0];
        ++checked;
    }
    EXPECT_GE(checked, 50);
}

TEST(CharP, LimitClosureMatchesDefiningChain) {
    for (const auto& t : corpus()) {
        const LowerLimitResult lc = limit_closure(t.f);
        // the union of an ascending chain: check a stretch of it sits inside the result and reaches it
        bool reached = false;
        for (std::uint64_t j = 0; j <= 16; ++j) {
            const Submodule step = limit_closure_step(t.f, j);
            EXPECT_TRUE(lc.ideal.contains(step));
            if (step == lc.ideal) {
                reached = true;
            }
        }
        EXPECT_TRUE(reached) << t.f[0];
    }
}

TEST(CharP, Monotonicity) {
    for (const auto& t : corpus()) {
        if (t.f.size() < 2) {
            continue;
        }
        std::vector<Polynomial> prefix(t.f.begin(), t.f.end() - 1);
        const Submodule small = lower_limit(prefix, t.ring).ideal;
        const Submodule big = lower_limit(t.f, t.ring).ideal;
        for (const auto& g : small.generators()) {
            EXPECT_TRUE(big.contains(t.f.back() * g));
        }
    }
}

TEST(CharP, LowerLimitKillsTheFraction) {
    for (const auto& t : corpus()) {
        if (t.f.size() < 2) {
            continue;
        }
        const auto direct = lower_limit_oracle(t.f, 40);
        ASSERT_TRUE(direct.has_value());
        const std::uint64_t j = direct->stabilization_index;
        std::vector<Polynomial> powers;
        for (std::size_t i = 0; i + 1 < t.f.size(); ++i) {
            powers.push_back(t.f[i].pow(j + 1));
        }
        const Submodule target = Submodule::ideal(t.ring, powers);
        const Polynomial pj = product(t.ring, t.f).pow(j);
        const Submodule lowlim = lower_limit(t.f, t.ring).ideal;
        for (const auto& g : lowlim.generators()) {
            EXPECT_TRUE(target.contains(pj * g));
        }
    }
}

TEST(CharP, SevenVariableLowerLimits) {
    auto ring = make_ring(2, 7);
    const auto g = Ps(ring, "X1 + X2 + X4 + X5 + X7, X2 + X3 + X4 + X5 + X6 + X7, X3 + X6 + X7, X2, X1");
    auto prefix = [&](std::size_t i) { return std::vector<Polynomial>(g.begin(), g.begin() + std::ptrdiff_t(i)); };
    EXPECT_EQ(lower_limit(prefix(3), ring).ideal, I(ring, "X2 + X3 + X4 + X5 + X6 + X7, X1 + X3 + X6"));
    EXPECT_EQ(lower_limit(prefix(4), ring).ideal, I(ring, "X1 + X7, X2 + X4 + X5, X3 + X6 + X7"));
    EXPECT_EQ(lower_limit(prefix(5), ring).ideal, I(ring, "X1 + X7, X2, X3 + X6 + X7, X4 + X5"));
    for (std::size_t i = 3; i <= 5; ++i) {
        EXPECT_EQ(lower_limit(prefix(i), ring).ideal, lower_limit_oracle(prefix(i), 40)->ideal);
    }
}
