#pragma once

// Exact dense linear algebra over the rationals and over prime fields.
//
// Algorithms are written against a small field policy (zero/one/add/mul/inv
// and friends) so that the same elimination code runs over Q, where ranks are
// the characteristic-zero answers, and over F_p, where subspaces can be
// enumerated for point counting.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quivgr/error.hpp"

namespace quivgr {

class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return 1 / a; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "exactalg", std::to_string(p) + " is not prime");
  }

  std::uint32_t characteristic() const { return p_; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(a + (p_ - b)); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) fail(ErrorCode::InvalidArgument, "exactalg", "division by zero in F_p");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Element>(result);
  }
  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class Field>
class Matrix {
 public:
  using Element = typename Field::Element;

  explicit Matrix(const Field& field = Field(), std::size_t rows = 0, std::size_t cols = 0)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  // Rows given as integer lists; convenient for literals in tests.
  static Matrix from_rows(const Field& field, std::size_t cols,
                          const std::vector<std::vector<long>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorCode::InvalidArgument, "exactalg", "ragged matrix literal");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void append_row(std::span<const Element> values) {
    if (values.size() != cols_) fail(ErrorCode::InvalidArgument, "exactalg", "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::InvalidArgument, "exactalg", "matrix shape mismatch in product");
    const Field& f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& x = a(i, k);
        if (f.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(ErrorCode::InvalidArgument, "exactalg", "matrix shape mismatch in difference");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

using QMatrix = Matrix<RationalField>;
using FpMatrix = Matrix<PrimeField>;

template <class Field>
struct Echelon {
  Matrix<Field> reduced;            // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class Field>
Echelon<Field> reduced_row_echelon(Matrix<Field> m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return reduced_row_echelon(m).pivots.size();
}

/// A linear subspace of Field^n, stored through its unique reduced row
/// echelon basis so that equality of subspaces is equality of values.
template <class Field>
class Subspace {
 public:
  using Element = typename Field::Element;

  explicit Subspace(const Field& field = Field(), std::size_t ambient = 0)
      : ambient_(ambient), basis_(field, 0, ambient) {}

  /// Span of the rows of `generators`.
  static Subspace span(const Matrix<Field>& generators) {
    Subspace s(generators.field(), generators.cols());
    auto ech = reduced_row_echelon(generators);
    s.pivots_ = std::move(ech.pivots);
    Matrix<Field> basis(generators.field(), s.pivots_.size(), generators.cols());
    for (std::size_t i = 0; i < s.pivots_.size(); ++i)
      for (std::size_t j = 0; j < generators.cols(); ++j) basis(i, j) = ech.reduced(i, j);
    s.basis_ = std::move(basis);
    return s;
  }

  static Subspace full(const Field& field, std::size_t n) {
    return span(Matrix<Field>::identity(field, n));
  }

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return pivots_.size(); }
  const Matrix<Field>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of `v` after clearing all pivot coordinates; zero iff v lies in
  /// the subspace. Non-pivot coordinates give the class of v in the quotient.
  std::vector<Element> reduce(std::span<const Element> v) const {
    const Field& f = field();
    std::vector<Element> r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Element c = r[pivots_[i]];
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) r[j] = f.sub(r[j], f.mul(c, basis_(i, j)));
    }
    return r;
  }

  bool contains(std::span<const Element> v) const {
    const Field& f = field();
    for (const auto& x : reduce(v))
      if (!f.is_zero(x)) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dimension(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    Matrix<Field> g = basis_;
    for (std::size_t i = 0; i < other.dimension(); ++i) g.append_row(other.basis_.row(i));
    return span(g);
  }

  /// Image under `map`, a (target dim) x (ambient dim) matrix acting on
  /// column vectors.
  Subspace image(const Matrix<Field>& map) const {
    if (map.cols() != ambient_) fail(ErrorCode::InvalidArgument, "exactalg", "map does not act on subspace");
    return span(basis_ * map.transpose());
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix<Field> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space of m (vectors x with m x = 0), dimension cols - rank.
template <class Field>
Subspace<Field> kernel(const Matrix<Field>& m) {
  const Field& f = m.field();
  auto ech = reduced_row_echelon(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : ech.pivots) is_pivot[p] = 1;
  Matrix<Field> gens(f, 0, m.cols());
  std::vector<typename Field::Element> v(m.cols(), f.zero());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = f.neg(ech.reduced(i, free));
    gens.append_row(v);
  }
  return Subspace<Field>::span(gens);
}

/// Number of k-dimensional subspaces of F_q^n; saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

/// Visits each k-dimensional subspace of F_q^n containing `containing`
/// exactly once. Subspaces W above S correspond to (k - dim S)-dimensional
/// subspaces of the coordinate complement of S's pivots, which are walked in
/// reduced echelon form. Returning false from `visit` stops the walk.
void for_each_subspace(const PrimeField& field, std::size_t n, std::size_t k,
                       const Subspace<PrimeField>& containing,
                       const std::function<bool(const Subspace<PrimeField>&)>& visit);

std::vector<Subspace<PrimeField>> enumerate_subspaces(const PrimeField& field, std::size_t n,
                                                      std::size_t k,
                                                      const Subspace<PrimeField>& containing);

}  // namespace quivgr
