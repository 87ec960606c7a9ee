#include "tamegen/polynomial.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace tamegen {
namespace {

using testing::mono;

const Polynomial X = Polynomial::x();
const Polynomial Y = Polynomial::y();
const Polynomial Z = Polynomial::z();

TEST(Rational, CanonicalForm) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_THROW(make_rational(1, 0), Error);
  EXPECT_THROW(parse_rational("1/"), Error);
}

TEST(Degree, MinusInfinitySentinel) {
  Degree zero = Polynomial().total_degree();
  EXPECT_FALSE(zero.is_finite());
  EXPECT_LT(zero, Degree(0));
  EXPECT_THROW(zero.value(), Error);
  EXPECT_FALSE((zero + Degree(5)).is_finite());
  EXPECT_EQ((Degree(2) + Degree(5)).value(), 7);
}

TEST(PolyAdd, Examples) {
  EXPECT_TRUE((X + (-X)).is_zero());
  Polynomial sum = mono(3, 0, 0) + mono(0, 2, 0);
  EXPECT_EQ(sum.size(), 2u);
  EXPECT_EQ(sum.coefficient(Monomial(3, 0, 0)), 1);
  EXPECT_EQ(sum.coefficient(Monomial(0, 2, 0)), 1);
  Polynomial halves = mono(1, 0, 2, make_rational(3, 2)) + mono(1, 0, 2, make_rational(1, 2));
  EXPECT_EQ(halves, mono(1, 0, 2, 2));
}

TEST(PolyMul, Examples) {
  EXPECT_TRUE(((X + Z) * Polynomial()).is_zero());
  Polynomial product = (X + mono(0, 0, 3)) * (Y + mono(0, 0, 5));
  EXPECT_EQ(product, mono(1, 1, 0) + mono(1, 0, 5) + mono(0, 1, 3) + mono(0, 0, 8));
  EXPECT_EQ((X + Z) * (X + Z), mono(2, 0, 0) + mono(1, 0, 1, 2) + mono(0, 0, 2));
}

TEST(PolyPow, Examples) {
  EXPECT_EQ(pow(X + Y, 0), Polynomial(1));
  EXPECT_EQ(pow(X + mono(0, 0, 4), 3), mono(3, 0, 0) + mono(2, 0, 4, 3) + mono(1, 0, 8, 3) + mono(0, 0, 12));
  EXPECT_TRUE(pow(Polynomial(), 5).is_zero());
  EXPECT_EQ(pow(Polynomial(), 0), Polynomial(1));
}

TEST(PolySubstitute, Examples) {
  Polynomial p = Z + mono(3, 0, 0) - mono(0, 2, 0);
  EXPECT_EQ(substitute(X, X, Y, Z), X);
  Polynomial sx = X + mono(0, 0, 4);
  Polynomial sy = Y + mono(0, 0, 6);
  EXPECT_EQ(substitute(p, sx, sy, Z), Z + pow(sx, 3) - pow(sy, 2));
  // x^k y^l under (x + z^a, y + z^b) has degree k a + l b.
  for (std::uint32_t k = 0; k <= 3; ++k) {
    for (std::uint32_t l = 0; l <= 3; ++l) {
      Polynomial image = substitute(mono(k, l, 0), X + mono(0, 0, 3), Y + mono(0, 0, 5), Z);
      EXPECT_EQ(image.total_degree().value(), 3 * k + 5 * l);
    }
  }
}

TEST(PolyDegree, Examples) {
  EXPECT_EQ(Polynomial().total_degree(), Degree::minus_infinity());
  EXPECT_EQ((Z + mono(3, 0, 0) - mono(0, 2, 0) + mono(0, 0, 7, 2)).total_degree().value(), 7);
  EXPECT_EQ(Polynomial(5).total_degree().value(), 0);
}

TEST(PolyPartial, Examples) {
  EXPECT_EQ(partial(mono(3, 0, 0), Axis::X), mono(2, 0, 0, 3));
  EXPECT_EQ(partial(Z + mono(4, 2, 0), Axis::Z), Polynomial(1));
  EXPECT_EQ(partial(pow(Y + mono(0, 0, 6), 2), Axis::Y), mono(0, 1, 0, 2) + mono(0, 0, 6, 2));
  EXPECT_TRUE(partial(Polynomial(3), Axis::Y).is_zero());
}

TEST(PolyEval, Examples) {
  Point p{1, 2, 3};
  EXPECT_EQ(evaluate(Polynomial(), p), 0);
  EXPECT_EQ(evaluate(X + Y + Z, p), 6);
  EXPECT_EQ(evaluate(pow(X + mono(0, 0, 4), 3), Point{1, 0, 1}), 8);
  EXPECT_EQ(evaluate(mono(2, 0, 0), Point{make_rational(-1, 2), 0, 0}), make_rational(1, 4));
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(9, 0), 1);
  EXPECT_EQ(binomial(7, 2), 21);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

class PolynomialProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240611};
  Polynomial next() { return testing::random_polynomial(rng, 5, 4, 9); }
};

TEST_F(PolynomialProperties, RingAxioms) {
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = next(), q = next(), r = next();
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p * Polynomial(1), p);
  }
}

TEST_F(PolynomialProperties, DegreeIsAdditive) {
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = next(), q = next();
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).total_degree(), p.total_degree() + q.total_degree());
  }
}

TEST_F(PolynomialProperties, CanonicalTermsNeverZero) {
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = next() * next() - next();
    for (const auto& [m, c] : p.terms()) EXPECT_NE(c, 0);
  }
}

TEST_F(PolynomialProperties, IdentitySubstitution) {
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = next();
    EXPECT_EQ(substitute(p, X, Y, Z), p);
  }
}

TEST_F(PolynomialProperties, EvaluationIsAHomomorphism) {
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = next(), q = next(), sx = next(), sy = next(), sz = next();
    Point pt = testing::random_point(rng);
    EXPECT_EQ(evaluate(p + q, pt), evaluate(p, pt) + evaluate(q, pt));
    EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
    Point image{evaluate(sx, pt), evaluate(sy, pt), evaluate(sz, pt)};
    EXPECT_EQ(evaluate(substitute(p, sx, sy, sz), pt), evaluate(p, image));
  }
}

}  // namespace
}  // namespace tamegen
