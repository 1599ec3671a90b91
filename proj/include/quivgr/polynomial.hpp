#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quivgr {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending order with trailing zeros trimmed. Used for motives
/// in the Lefschetz class and for point-count and Poincare polynomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> ascending);
  Polynomial(std::initializer_list<long> ascending);

  static Polynomial constant(const mpz_class& c);
  static Polynomial monomial(std::size_t exponent, const mpz_class& c = 1);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const mpz_class& leading() const { return coeffs_.back(); }

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;

  bool is_palindromic() const;
  bool has_nonnegative_coefficients() const;
  mpz_class content() const;
  Polynomial primitive_part() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const mpz_class& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// `1 + 3*q + q^2`; the zero polynomial prints as `0`.
  std::string to_string(std::string_view var = "q") const;
  /// Space separated ascending coefficients.
  std::string coefficient_list() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Quotient and remainder exist over Z only when the division is exact;
/// returns nullopt otherwise.
std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor in Z[x], primitive with positive leading
/// coefficient (content is not included).
Polynomial primitive_gcd(Polynomial a, Polynomial b);

/// An element of Q(L) kept in lowest terms: numerator and denominator are
/// coprime in Z[L], have coprime contents, and the denominator has positive
/// leading coefficient. Equal fractions therefore have equal representations.
class Fraction {
 public:
  Fraction() : den_(Polynomial{1}) {}
  Fraction(Polynomial num);  // NOLINT(google-explicit-constructor)
  Fraction(Polynomial num, Polynomial den);

  /// L^k for any integer k.
  static Fraction lefschetz_power(long k);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }
  std::optional<Polynomial> as_polynomial() const;
  bool is_zero() const { return num_.is_zero(); }

  mpq_class evaluate(const mpq_class& x) const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  friend bool operator==(const Fraction&, const Fraction&) = default;

  std::string to_string(std::string_view var = "L") const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace quivgr
