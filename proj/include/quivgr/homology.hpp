#pragma once

#include <cstddef>
#include <vector>

#include "quivgr/bimodule.hpp"
#include "quivgr/error.hpp"
#include "quivgr/exactalg.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr {

struct ExtDims {
  std::size_t hom = 0;
  std::size_t ext1 = 0;
  std::size_t ext2 = 0;

  friend bool operator==(const ExtDims&, const ExtDims&) = default;
};

/// Three-term complex computing Hom and Ext between representations of a
/// quiver bound by commutativity squares:
///
///     C0 = (+)_v Hom(X_v, Y_v)  ->  C1 = (+)_a Hom(X_s(a), Y_t(a))
///        ->  C2 = (+)_squares Hom(X_source, Y_target)
///
/// Each Hom block is stored row-major as a dim(Y) x dim(X) matrix.
template <class Field>
struct HomComplex {
  Matrix<Field> d0;  // C1 x C0
  Matrix<Field> d1;  // C2 x C1
  std::size_t c0 = 0, c1 = 0, c2 = 0;
};

namespace detail {

// Adds sign * (L psi R) into the block of d at (row_off, col_off), where psi
// is the variable block and L, R act on either side of it.
template <class Field>
void add_sandwich(Matrix<Field>& d, std::size_t row_off, std::size_t col_off, const Matrix<Field>& left,
                  const Matrix<Field>& right, bool negate) {
  const Field& f = d.field();
  // (L psi R)(i, j) = sum_{k,l} L(i,k) psi(k,l) R(l,j); psi(k,l) sits at
  // column col_off + k * psi_cols + l, the result entry at row_off + i * out_cols + j.
  const std::size_t psi_cols = right.rows();
  const std::size_t out_cols = right.cols();
  for (std::size_t i = 0; i < left.rows(); ++i)
    for (std::size_t k = 0; k < left.cols(); ++k) {
      const auto& lik = left(i, k);
      if (f.is_zero(lik)) continue;
      for (std::size_t l = 0; l < right.rows(); ++l)
        for (std::size_t j = 0; j < out_cols; ++j) {
          const auto& rlj = right(l, j);
          if (f.is_zero(rlj)) continue;
          auto& cell = d(row_off + i * out_cols + j, col_off + k * psi_cols + l);
          const auto term = f.mul(lik, rlj);
          cell = negate ? f.sub(cell, term) : f.add(cell, term);
        }
    }
}

}  // namespace detail

template <class Field>
HomComplex<Field> hom_complex(const BoundQuiver& q, const Representation<Field>& x,
                              const Representation<Field>& y) {
  validate_representation(q, x);
  validate_representation(q, y);
  const Field& f = x.field;
  const auto& arrows = q.arrows();
  const auto& squares = q.squares();

  std::vector<std::size_t> off0, off1, off2;
  HomComplex<Field> c;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    off0.push_back(c.c0);
    c.c0 += y.dims[v] * x.dims[v];
  }
  for (const auto& a : arrows) {
    off1.push_back(c.c1);
    c.c1 += y.dims[a.target] * x.dims[a.source];
  }
  for (const auto& s : squares) {
    off2.push_back(c.c2);
    c.c2 += y.dims[s.target] * x.dims[s.source];
  }
  auto eye = [&](std::size_t n) { return Matrix<Field>::identity(f, n); };

  c.d0 = Matrix<Field>(f, c.c1, c.c0);
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const std::size_t u = arrows[a].source, v = arrows[a].target;
    // Y_a phi_u - phi_v X_a
    detail::add_sandwich(c.d0, off1[a], off0[u], y.maps[a], eye(x.dims[u]), false);
    detail::add_sandwich(c.d0, off1[a], off0[v], eye(y.dims[v]), x.maps[a], true);
  }

  c.d1 = Matrix<Field>(f, c.c2, c.c1);
  for (std::size_t s = 0; s < squares.size(); ++s) {
    const auto& sq = squares[s];
    const std::size_t src = sq.source, dst = sq.target;
    // Y_a2 psi_a1 + psi_a2 X_a1 - Y_b2 psi_b1 - psi_b2 X_b1
    detail::add_sandwich(c.d1, off2[s], off1[sq.a1], y.maps[sq.a2], eye(x.dims[src]), false);
    detail::add_sandwich(c.d1, off2[s], off1[sq.a2], eye(y.dims[dst]), x.maps[sq.a1], false);
    detail::add_sandwich(c.d1, off2[s], off1[sq.b1], y.maps[sq.b2], eye(x.dims[src]), true);
    detail::add_sandwich(c.d1, off2[s], off1[sq.b2], eye(y.dims[dst]), x.maps[sq.b1], true);
  }
  return c;
}

/// Cohomology dimensions of the complex. Only meaningful as Ext when the
/// complex is exact for the bound quiver; see ext_dims.
template <class Field>
ExtDims complex_cohomology(const HomComplex<Field>& c) {
  const std::size_t r0 = rank(c.d0), r1 = rank(c.d1);
  return {c.c0 - r0, c.c1 - r1 - r0, c.c2 - r1};
}

/// Dimension of the space of morphisms X -> Y.
template <class Field>
std::size_t hom_dim(const BoundQuiver& q, const Representation<Field>& x, const Representation<Field>& y) {
  const auto c = hom_complex(q, x, y);
  return c.c0 - rank(c.d0);
}

template <class Field>
ExtDims ext_dims(const BoundQuiver& q, const Representation<Field>& x, const Representation<Field>& y) {
  if (!q.ext_complex_exact())
    fail(ErrorCode::ParallelPathsUnsupported, "homology",
         "Ext is only computed for quivers without parallel paths");
  return complex_cohomology(hom_complex(q, x, y));
}

template <class Field>
ExtDims ext_dims(const PathQuiver& pq, const Representation<Field>& x, const Representation<Field>& y) {
  if (!pq.tree_mode())
    fail(ErrorCode::ParallelPathsUnsupported, "homology",
         "Ext is only computed for quivers without parallel paths");
  return ext_dims(pq.bound(), x, y);
}

/// sum_v x_v y_v - sum_{a: u->v} x_u y_v + sum_{squares u=>w} x_u y_w.
long euler_form(const BoundQuiver& q, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y);

/// The Euler form of the path quiver; tree mode only.
long euler_form(const PathQuiver& pq, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y);

}  // namespace quivgr
