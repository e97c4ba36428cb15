#include <gtest/gtest.h>

#include <random>

#include "hypoly/errors.hpp"
#include "hypoly/poly.hpp"

using namespace hypoly;

namespace {

const VarKey X(VarKey::Kind::X);
const VarKey Y(VarKey::Kind::Y);
const VarKey Z(VarKey::Kind::Z);
const VarKey P(VarKey::Kind::P);
const VarKey Q(VarKey::Kind::Q);
const VarKey T(VarKey::Kind::T_UNIFORM);

Poly random_poly(std::mt19937_64& rng) {
  const Poly vars[] = {Poly::x(), Poly::y(), Poly::z(), Poly::t(EdgeId("a")), Poly::t()};
  Poly out;
  const auto terms = rng() % 4;
  for (std::uint64_t i = 0; i < terms; ++i) {
    Poly term(static_cast<long>(rng() % 7) - 3);
    const auto factors = rng() % 4;
    for (std::uint64_t j = 0; j < factors; ++j) term *= vars[rng() % 5];
    out += term;
  }
  return out;
}

}  // namespace

TEST(Poly, CanonicalStrings) {
  const Poly ta = Poly::t(EdgeId("a"));
  EXPECT_EQ(canonical_string(Poly()), "0");
  EXPECT_EQ(canonical_string(Poly(-7)), "-7");
  EXPECT_EQ(canonical_string(Poly::x() * Poly::x() + Poly::x() * Poly::y() * ta + Poly::z() * ta),
            "x^2 + x*y*t{a} + z*t{a}");
  EXPECT_EQ(canonical_string(Poly::q() * Poly::q() + Poly::p() * Poly::t() - Poly::p()),
            "q^2 + p*t - p");
  EXPECT_EQ(canonical_string(Poly(3) * Poly::x().pow(2) * Poly::y()), "3*x^2*y");
  EXPECT_EQ(canonical_string(Poly(1) - Poly::x()), "-x + 1");
}

TEST(Poly, ZeroTermsVanish) {
  Poly a = Poly::x() + Poly::y();
  a -= Poly::x();
  EXPECT_EQ(a, Poly::y());
  EXPECT_EQ((Poly::x() - Poly::x()).size(), 0U);
  EXPECT_TRUE((Poly::x() - Poly::x()).is_zero());
}

TEST(Poly, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    const auto c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + Poly(), a);
    EXPECT_EQ(a * Poly(1), a);
    EXPECT_EQ(a - a, Poly());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Poly, EvalCommutesWithSubstitute) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng);
    const auto bx = random_poly(rng);
    std::map<VarKey, Rational> point{{X, Rational(2, 3)},
                                     {Y, Rational(-1, 2)},
                                     {Z, Rational(5)},
                                     {T, Rational(3, 7)},
                                     {VarKey::edge(EdgeId("a")), Rational(-2)}};
    const auto composed = substitute(a, {{X, bx}});
    auto shifted = point;
    shifted[X] = eval(bx, point);
    EXPECT_EQ(eval(composed, point), eval(a, shifted));
  }
}

TEST(Poly, EvalNeedsEveryVariable) {
  EXPECT_THROW(eval(Poly::x() + Poly::y(), {{X, Rational(1)}}), std::invalid_argument);
  EXPECT_EQ(eval(Poly(4), {}), Rational(4));
}

TEST(Poly, SubstituteIsSimultaneous) {
  const auto swapped = substitute(Poly::x() * Poly::x() + Poly::y(), {{X, Poly::y()}, {Y, Poly::x()}});
  EXPECT_EQ(swapped, Poly::y() * Poly::y() + Poly::x());
}

TEST(Poly, CollapseT) {
  const auto a = Poly::t(EdgeId("a")) * Poly::t(EdgeId("b")) + Poly::t(EdgeId("a"));
  EXPECT_EQ(canonical_string(collapse_t(a)), "t^2 + t");
}

TEST(Poly, Variables) {
  const auto a = Poly::x() * Poly::t(EdgeId("e")) + Poly::q().pow(3);
  EXPECT_EQ(a.variables(), (std::set<VarKey>{X, Q, VarKey::edge(EdgeId("e"))}));
  EXPECT_EQ(a.degree_in(Q), 3U);
  EXPECT_EQ(a.degree_in(Y), 0U);
}

TEST(Poly, DivideExact) {
  const Poly xm = Poly::x() - Poly(1);
  const Poly ym = Poly::y() - Poly(1);
  const Poly prod = xm.pow(2) * ym * (Poly::x() + Poly::y() + Poly::z());
  EXPECT_EQ(divide_exact(prod, xm * ym), xm * (Poly::x() + Poly::y() + Poly::z()));
  EXPECT_EQ(divide_exact(Poly(), xm), Poly());
  EXPECT_THROW(divide_exact(Poly::x() + Poly(1), xm), InexactDivision);
  EXPECT_THROW(divide_exact(Poly::x(), Poly()), InexactDivision);
}

TEST(Poly, DivideRandomProducts) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    if (b.is_zero()) continue;
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
}

TEST(Poly, JsonRoundTrip) {
  const auto a = Poly(12345678901234567LL) * Poly::x().pow(2) * Poly::t(EdgeId("a b")) - Poly::q();
  const auto j = to_json(a);
  EXPECT_EQ(j[0]["coeff"], "12345678901234567");
  EXPECT_EQ(j[0]["vars"]["t{a b}"], 1);
  EXPECT_EQ(poly_from_json(j), a);
  EXPECT_EQ(to_json(Poly()).dump(), "[]");
}

TEST(Poly, BigCoefficients) {
  const auto a = (Poly::x() + Poly(1)).pow(80);
  EXPECT_EQ(eval(a, {{X, Rational(1)}}), Rational(Integer("1208925819614629174706176")));
}

TEST(Poly, VarKeyNames) {
  for (const char* name : {"x", "y", "z", "p", "q", "t", "t{a}", "t{κ:e:0}"}) {
    auto key = VarKey::parse(name);
    ASSERT_TRUE(key.has_value()) << name;
    EXPECT_EQ(key->name(), name);
  }
  EXPECT_FALSE(VarKey::parse("w").has_value());
  EXPECT_FALSE(VarKey::parse("t{").has_value());
}

TEST(Poly, Rationals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_EQ(rational_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(rational_string(Rational(-4, 2)), "-2");
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}
