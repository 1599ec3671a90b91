#include "quivgr/polynomial.hpp"

#include <sstream>

#include "quivgr/error.hpp"

namespace quivgr {

Polynomial::Polynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const mpz_class& c) { return Polynomial(std::vector<mpz_class>{c}); }

Polynomial Polynomial::monomial(std::size_t exponent, const mpz_class& c) {
  std::vector<mpz_class> v(exponent + 1, 0);
  v[exponent] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class Polynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class Polynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

bool Polynomial::is_palindromic() const {
  const std::size_t n = coeffs_.size();
  for (std::size_t k = 0; k < n; ++k)
    if (coeffs_[k] != coeffs_[n - 1 - k]) return false;
  return true;
}

bool Polynomial::has_nonnegative_coefficients() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] / g;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const mpz_class& c, const Polynomial& p) {
  return Polynomial::constant(c) * p;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

std::string Polynomial::coefficient_list() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ' ';
    s += coeffs_[k].get_str();
  }
  return s;
}

std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "motive", "division by the zero polynomial");
  if (a.is_zero()) return Polynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
    mpz_class t = rem[k] / bc[db];
    quot[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= t * bc[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return Polynomial(std::move(quot));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed by repeated cancellation.
Polynomial pseudo_remainder(Polynomial r, const Polynomial& b) {
  const int db = b.degree();
  const mpz_class lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    mpz_class lr = r.leading();
    std::size_t shift = static_cast<std::size_t>(r.degree() - db);
    r = lb * r - Polynomial::monomial(shift, lr) * b;
  }
  return r;
}

}  // namespace

Polynomial primitive_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.primitive_part();
}

Fraction::Fraction(Polynomial num) : num_(std::move(num)), den_(Polynomial{1}) {}

Fraction::Fraction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Fraction Fraction::lefschetz_power(long k) {
  if (k >= 0) return Fraction(Polynomial::monomial(static_cast<std::size_t>(k)));
  return Fraction(Polynomial{1}, Polynomial::monomial(static_cast<std::size_t>(-k)));
}

void Fraction::normalize() {
  if (den_.is_zero()) fail(ErrorCode::InvalidArgument, "motive", "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial{1};
    return;
  }
  Polynomial g = primitive_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = *exact_quotient(num_, g);
    den_ = *exact_quotient(den_, g);
  }
  mpz_class c = gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    std::vector<mpz_class> n = num_.coefficients(), d = den_.coefficients();
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num_ = Polynomial(std::move(n));
    den_ = Polynomial(std::move(d));
  }
}

std::optional<Polynomial> Fraction::as_polynomial() const {
  if (!is_polynomial()) return std::nullopt;
  return num_;
}

mpq_class Fraction::evaluate(const mpq_class& x) const {
  mpq_class d = den_.evaluate(x);
  if (d == 0) fail(ErrorCode::InvalidArgument, "motive", "evaluation at a pole");
  return num_.evaluate(x) / d;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "motive", "division by zero fraction");
  return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Fraction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace quivgr
