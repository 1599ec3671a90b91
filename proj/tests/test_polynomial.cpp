#include <gtest/gtest.h>

#include <random>

#include "quivgr/polynomial.hpp"

using namespace quivgr;

TEST(Polynomial, Formatting) {
  EXPECT_EQ((Polynomial{1, 3, 1}).to_string(), "1 + 3*q + q^2");
  EXPECT_EQ((Polynomial{0, -2, 0, 1}).to_string(), "-2*q + q^3");
  EXPECT_EQ((Polynomial{1, -1}).to_string("L"), "1 - L");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ((Polynomial{-4}).to_string(), "-4");
  EXPECT_EQ((Polynomial{1, 5, 6, 1}).coefficient_list(), "1 5 6 1");
}

TEST(Polynomial, TrimsAndCompares) {
  EXPECT_EQ((Polynomial{1, 2, 0, 0}), (Polynomial{1, 2}));
  EXPECT_EQ((Polynomial{0, 0}).degree(), -1);
  EXPECT_TRUE((Polynomial{0}).is_zero());
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a{1, 1}, b{-1, 1};
  EXPECT_EQ(a * b, (Polynomial{-1, 0, 1}));
  EXPECT_EQ(a + b, (Polynomial{0, 2}));
  EXPECT_EQ(a - a, Polynomial());
  EXPECT_EQ(mpz_class(3) * a, (Polynomial{3, 3}));
  EXPECT_EQ(Polynomial::monomial(3, 2), (Polynomial{0, 0, 0, 2}));
  EXPECT_EQ((Polynomial{1, 5, 6, 1}).evaluate(mpz_class(2)), 43);
  EXPECT_EQ((Polynomial{1, 2}).evaluate(mpq_class(1, 2)), 2);
}

TEST(Polynomial, Properties) {
  EXPECT_TRUE((Polynomial{1, 1, 2, 1, 1}).is_palindromic());
  EXPECT_FALSE((Polynomial{1, 5, 6, 1}).is_palindromic());
  EXPECT_TRUE((Polynomial{2, 0, 1}).has_nonnegative_coefficients());
  EXPECT_FALSE((Polynomial{2, -1, 1}).has_nonnegative_coefficients());
  EXPECT_EQ((Polynomial{4, -6, 8}).content(), 2);
  EXPECT_EQ((Polynomial{4, -6, 8}).primitive_part(), (Polynomial{2, -3, 4}));
}

TEST(Polynomial, ExactQuotientAndGcd) {
  const Polynomial a{-1, 0, 1}, b{-1, 1};
  EXPECT_EQ(exact_quotient(a, b), (Polynomial{1, 1}));
  EXPECT_FALSE(exact_quotient(a, Polynomial{2, 1}).has_value());
  const Polynomial g = primitive_gcd((Polynomial{-1, 0, 1}) * Polynomial{3, 1}, (Polynomial{1, 1}) * Polynomial{3, 1});
  EXPECT_TRUE(g == (Polynomial{3, 4, 1}) || g == -(Polynomial{3, 4, 1}));
}

TEST(Fraction, Normalizes) {
  const Fraction f(Polynomial{-1, 0, 1}, Polynomial{-2, 2});
  EXPECT_TRUE(f.is_polynomial() || f.denominator().degree() == 0);
  EXPECT_EQ(f.evaluate(mpq_class(3)), 2);
  EXPECT_EQ(Fraction(Polynomial{2}, Polynomial{4}), Fraction(Polynomial{1}, Polynomial{2}));
  EXPECT_EQ(Fraction(Polynomial{1}, Polynomial{-1, 1}), Fraction(Polynomial{-1}, Polynomial{1, -1}));
}

TEST(Fraction, LefschetzPowers) {
  EXPECT_EQ(Fraction::lefschetz_power(2), Fraction(Polynomial{0, 0, 1}));
  EXPECT_EQ(Fraction::lefschetz_power(-1) * Fraction::lefschetz_power(1), Fraction(Polynomial{1}));
  EXPECT_EQ(Fraction::lefschetz_power(-2).to_string(), "(1)/(L^2)");
  EXPECT_EQ(Fraction(Polynomial{1, 1}).to_string(), "1 + L");
}

TEST(Fraction, RandomArithmeticIsExact) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> c(-4, 4);
  auto random_poly = [&] {
    Polynomial p;
    while (p.is_zero()) p = Polynomial{c(rng), c(rng), c(rng)};
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Fraction a(random_poly(), random_poly());
    const Fraction b(random_poly(), random_poly());
    EXPECT_EQ(a * (Fraction(Polynomial{1}) / a), Fraction(Polynomial{1}));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * b) / b, a);
    const mpq_class x(7, 3);
    if (sgn(b.denominator().evaluate(x)) != 0 && sgn(a.denominator().evaluate(x)) != 0)
      EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
  }
}
