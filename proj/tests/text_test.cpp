#include "tamegen/text.hpp"

#include <gtest/gtest.h>

#include "tamegen/constructions.hpp"
#include "test_support.hpp"

namespace tamegen {
namespace {

using testing::mono;

TEST(PrintPolynomial, GradedLexFormat) {
  EXPECT_EQ(to_string(Polynomial()), "0");
  EXPECT_EQ(to_string(mono(3, 0, 0) - mono(0, 2, 0)), "x^3 - y^2");
  EXPECT_EQ(to_string(mono(1, 0, 2, make_rational(3, 2))), "3/2*x*z^2");
  EXPECT_EQ(to_string(Polynomial::z() - mono(0, 0, 7, 2) + make_rational(-1, 3)), "-2*z^7 + z - 1/3");
  EXPECT_EQ(to_string(mono(0, 1, 0, -1)), "-y");
}

TEST(ParsePolynomial, Examples) {
  EXPECT_EQ(parse_polynomial("x^3 - y^2"), mono(3, 0, 0) - mono(0, 2, 0));
  EXPECT_EQ(parse_polynomial("3/2*x*z^2"), mono(1, 0, 2, make_rational(3, 2)));
  EXPECT_EQ(parse_polynomial("-(x + z^4)^2 * 2"), -2 * pow(Polynomial::x() + mono(0, 0, 4), 2));
  EXPECT_EQ(parse_polynomial("-x^2"), mono(2, 0, 0, -1));
  EXPECT_EQ(parse_polynomial("2^3"), Polynomial(8));
  EXPECT_EQ(parse_polynomial(" 6/4 "), Polynomial(make_rational(3, 2)));
}

TEST(ParsePolynomial, Errors) {
  try {
    parse_polynomial("x + + y");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_polynomial("2x"), ParseError);
  EXPECT_THROW(parse_polynomial("x/2"), ParseError);
  EXPECT_THROW(parse_polynomial("1/0"), ParseError);
  EXPECT_THROW(parse_polynomial("x^y"), ParseError);
  EXPECT_THROW(parse_polynomial("x^2^3"), ParseError);
  EXPECT_THROW(parse_polynomial("(x + y"), ParseError);
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("w"), ParseError);
}

TEST(ParseWord, Examples) {
  TameWord w = parse_word("E(x, z^3)\nE(y, z^5)\nE(z, x*y)");
  EXPECT_EQ(w, build_fact1_semigroup(3, 5, {1, 1}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_TRUE(parse_word("# only a comment\n\n   \n").empty());
  TameWord lin = parse_word("L(0, 1, 0; 1, 0, 0; 0, 0, -1/2)  # swap and scale\n");
  ASSERT_EQ(lin.size(), 1u);
  EXPECT_EQ(std::get<Linear>(lin.factors[0]).determinant(), make_rational(1, 2));
}

TEST(ParseWord, Errors) {
  try {
    parse_word("E(x, z)\nE(z, z + 1)");
    FAIL() << "expected an own-axis error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("uses its own axis"), std::string::npos);
  }
  EXPECT_THROW(parse_word("E(z, z)"), ParseError);
  try {
    parse_word("L(1, 2, 3; 2, 4, 6; 0, 0, 1)");
    FAIL() << "expected a singular-factor error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("singular linear factor"), std::string::npos);
  }
  EXPECT_THROW(parse_word("L(1, 0; 0, 1)"), ParseError);
  EXPECT_THROW(parse_word("E(w, x)"), ParseError);
  EXPECT_THROW(parse_word("F(x, y)"), ParseError);
  EXPECT_THROW(parse_word("E(x, y"), ParseError);
  EXPECT_THROW(parse_word("L(x, 0, 0; 0, 1, 0; 0, 0, 1)"), ParseError);
}

TEST(RoundTrip, RandomPolynomials) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial p = testing::random_polynomial(rng, 8, 20, 1000000);
    EXPECT_EQ(parse_polynomial(to_string(p)), p) << to_string(p);
  }
}

TEST(RoundTrip, Words) {
  Matrix3 m = identity_matrix();
  m[2][0] = make_rational(-7, 3);
  TameWord w{{Elementary(Axis::Y, mono(2, 0, 3, make_rational(5, 9)) - 4), Linear(m),
              Elementary(Axis::X, Polynomial())}};
  EXPECT_EQ(parse_word(to_string(w)), w);
}

}  // namespace
}  // namespace tamegen
