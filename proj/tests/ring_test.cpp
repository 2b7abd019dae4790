#include <gtest/gtest.h>

#include "lyubeznik/parse.hpp"
#include "support.hpp"

using namespace lyz;
using namespace lyz::testing;

TEST(Ring, FieldArithmetic) {
    auto r = make_ring(7, 2);
    EXPECT_EQ(r->add(5, 4), 2u);
    EXPECT_EQ(r->sub(2, 5), 4u);
    EXPECT_EQ(r->mul(3, 5), 1u);
    for (Coeff a = 1; a < 7; ++a) {
        EXPECT_EQ(r->mul(a, r->inv(a)), 1u);
    }
    EXPECT_EQ(r->from_int(-1), 6u);
    EXPECT_EQ(r->from_int(15), 1u);
}

TEST(Ring, RejectsBadInput) {
    EXPECT_THROW(make_ring(4, 2), Error);
    EXPECT_THROW(make_ring(2, kMaxVars + 1), Error);
    EXPECT_THROW(make_ring(2, std::vector<std::string>{"x", "x"}), Error);
    EXPECT_TRUE(is_prime(4294967291ull));
    EXPECT_FALSE(is_prime(4294967297ull));
}

TEST(Ring, MixingRingsThrows) {
    auto a = make_ring(2, 3);
    auto b = make_ring(3, 3);
    EXPECT_THROW(Polynomial::variable(a, 0) + Polynomial::variable(b, 0), ContextMismatch);
}

TEST(Ring, Axioms) {
    for (Coeff p : {2u, 3u, 5u}) {
        auto r = make_ring(p, 3);
        Sampler s(p);
        for (int k = 0; k < 40; ++k) {
            const Polynomial a = s.dense(r, 3, 5), b = s.dense(r, 3, 5), c = s.dense(r, 2, 4);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_TRUE((a - a).is_zero());
            EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
            EXPECT_EQ(a.frobenius(1), a.pow(p));
            EXPECT_EQ(a.frobenius(2), a.pow(p).pow(p));
        }
    }
}

TEST(Ring, PowMatchesRepeatedProduct) {
    auto r = make_ring(3, 3);
    const Polynomial f = P(r, "X1 + 2*X2*X3 + 1");
    Polynomial acc = Polynomial::constant(r, 1);
    for (unsigned k = 0; k < 11; ++k) {
        EXPECT_EQ(f.pow(k), acc);
        acc *= f;
    }
}

TEST(Ring, MonomialOrders) {
    const std::size_t n = 4;
    std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex(),
                                      MonomialOrder::elimination({0, 2})};
    Sampler s(11);
    auto random_mono = [&] {
        Monomial m;
        for (std::size_t i = 0; i < n; ++i) {
            m.exp[i] = Exponent(s.uniform(0, 3));
            m.degree += m.exp[i];
        }
        return m;
    };
    for (const auto& ord : orders) {
        for (int k = 0; k < 300; ++k) {
            const Monomial a = random_mono(), b = random_mono(), c = random_mono();
            const int ab = ord.compare(a, b, n);
            EXPECT_EQ(ab, -ord.compare(b, a, n));
            EXPECT_EQ(ab == 0, a == b);
            EXPECT_EQ(ord.compare(mono_mul(a, c, n), mono_mul(b, c, n), n), ab);
            EXPECT_GE(ord.compare(a, Monomial{}, n), 0);
        }
    }
}

TEST(Ring, GrevlexSmallCases) {
    auto r = make_ring(2, std::vector<std::string>{"x", "y", "z"});
    auto lead = [&](std::string_view s) { return monomial_to_string(P(r, s).lead().mono, *r); };
    EXPECT_EQ(lead("x*z + y^2"), "y^2");
    EXPECT_EQ(lead("x^3 + x*y*z"), "x^3");
    EXPECT_EQ(lead("z^3 + x"), "z^3");
}

TEST(Ring, ExponentOverflow) {
    auto r = make_ring(2, 1);
    const Polynomial x = Polynomial::variable(r, 0);
    EXPECT_THROW(x.frobenius(16), ExponentOverflow);
    EXPECT_NO_THROW(x.frobenius(15));
}

TEST(Parse, PrintParseIdentity) {
    for (Coeff p : {2u, 3u, 101u}) {
        auto r = make_ring(p, std::vector<std::string>{"a", "b", "X3", "y_1"});
        Sampler s(p + 1);
        for (int k = 0; k < 60; ++k) {
            const Polynomial f = s.dense(r, 4, 6);
            const std::string text = f.to_string();
            EXPECT_EQ(parse_poly(text, r), f) << text;
            EXPECT_EQ(parse_poly(text, r).to_string(), text);
        }
    }
}

TEST(Parse, Grammar) {
    auto r = make_ring(5, std::vector<std::string>{"x", "y"});
    EXPECT_EQ(P(r, "-x"), P(r, "4*x"));
    EXPECT_EQ(P(r, "(x + y)^2"), P(r, "x^2 + 2*x*y + y^2"));
    EXPECT_EQ(P(r, "7"), P(r, "2"));
    EXPECT_EQ(P(r, "x*y - y*x"), Polynomial(r));
    EXPECT_EQ(P(r, "0").to_string(), "0");
    EXPECT_EQ(P(r, "x^0"), P(r, "1"));
    const auto list = Ps(r, "x, (x + y)*(x - y), y^3");
    ASSERT_EQ(list.size(), 3u);
    EXPECT_EQ(list[1], P(r, "x^2 - y^2"));
}

TEST(Parse, ErrorsCarryOffsets) {
    auto r = make_ring(2, std::vector<std::string>{"x", "y"});
    try {
        parse_poly("x + zz", r);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
    }
    try {
        parse_poly_list("x, y, x*(y", r);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GE(e.offset(), 6u);
    }
    EXPECT_THROW(parse_poly("x +", r), ParseError);
    EXPECT_THROW(parse_poly("", r), ParseError);
    EXPECT_THROW(parse_poly("x^", r), ParseError);
    EXPECT_THROW(parse_poly("x y", r), ParseError);
}

TEST(Polynomial, Translate) {
    auto r = make_ring(3, std::vector<std::string>{"x", "y"});
    EXPECT_EQ(P(r, "x*y").translate({1, 2}), P(r, "(x + 1)*(y + 2)"));
    EXPECT_EQ(P(r, "x^3 - y").translate({-1, 0}), P(r, "x^3 - 1 - y"));
}

TEST(Polynomial, ExactDivide) {
    auto r = make_ring(2, 3);
    const Polynomial a = P(r, "X1 + X2*X3"), b = P(r, "X1^2 + X3 + 1");
    EXPECT_EQ(exact_divide(a * b, b), a);
    EXPECT_THROW(exact_divide(a * b + Polynomial::constant(r, 1), b), Error);
}
