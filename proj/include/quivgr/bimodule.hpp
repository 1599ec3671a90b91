#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quivgr/error.hpp"
#include "quivgr/exactalg.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr {

/// A representation of a bound quiver: a vector space per vertex and a
/// matrix per arrow, maps[a] being dims[target] x dims[source].
template <class Field>
struct Representation {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<Matrix<Field>> maps;
};

template <class Field>
bool satisfies_relations(const BoundQuiver& q, const Representation<Field>& rep) {
  for (const auto& sq : q.squares()) {
    const auto& m = rep.maps;
    if (!(m[sq.a2] * m[sq.a1] == m[sq.b2] * m[sq.b1])) return false;
  }
  return true;
}

/// Throws InvalidArgument on a shape mismatch or a violated relation.
template <class Field>
void validate_representation(const BoundQuiver& q, const Representation<Field>& rep) {
  if (rep.dims.size() != q.vertex_count() || rep.maps.size() != q.arrows().size())
    fail(ErrorCode::InvalidArgument, "bimodule", "representation does not match the quiver");
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    if (rep.maps[a].rows() != rep.dims[arr.target] || rep.maps[a].cols() != rep.dims[arr.source])
      fail(ErrorCode::InvalidArgument, "bimodule", "arrow matrix " + std::to_string(a) + " has the wrong shape");
  }
  if (!satisfies_relations(q, rep))
    fail(ErrorCode::InvalidArgument, "bimodule", "representation violates a commutativity relation");
}

template <class Field>
Representation<Field> zero_representation(const Field& field, const BoundQuiver& q) {
  Representation<Field> rep{field, std::vector<std::size_t>(q.vertex_count(), 0), {}};
  for (std::size_t a = 0; a < q.arrows().size(); ++a) rep.maps.emplace_back(field, 0, 0);
  return rep;
}

template <class Field>
Representation<Field> direct_sum(const Representation<Field>& x, const Representation<Field>& y) {
  Representation<Field> rep{x.field, {}, {}};
  for (std::size_t v = 0; v < x.dims.size(); ++v) rep.dims.push_back(x.dims[v] + y.dims[v]);
  for (std::size_t a = 0; a < x.maps.size(); ++a) {
    const auto& mx = x.maps[a];
    const auto& my = y.maps[a];
    Matrix<Field> m(x.field, mx.rows() + my.rows(), mx.cols() + my.cols());
    for (std::size_t i = 0; i < mx.rows(); ++i)
      for (std::size_t j = 0; j < mx.cols(); ++j) m(i, j) = mx(i, j);
    for (std::size_t i = 0; i < my.rows(); ++i)
      for (std::size_t j = 0; j < my.cols(); ++j) m(mx.rows() + i, mx.cols() + j) = my(i, j);
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

/// A subspace of the representation space at every vertex.
template <class Field>
struct SubmodulePoint {
  std::vector<Subspace<Field>> spaces;

  std::vector<std::size_t> dimension_vector() const {
    std::vector<std::size_t> d;
    for (const auto& s : spaces) d.push_back(s.dimension());
    return d;
  }
  friend bool operator==(const SubmodulePoint&, const SubmodulePoint&) = default;
};

template <class Field>
bool is_subrepresentation(const BoundQuiver& q, const Representation<Field>& rep,
                          const SubmodulePoint<Field>& point) {
  if (point.spaces.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (point.spaces[v].ambient_dimension() != rep.dims[v]) return false;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    if (!point.spaces[arr.target].contains(point.spaces[arr.source].image(rep.maps[a]))) return false;
  }
  return true;
}

/// Smallest subrepresentation containing the given vectors (rows of
/// generators[v], one matrix per vertex).
template <class Field>
SubmodulePoint<Field> generated_subrepresentation(const BoundQuiver& q, const Representation<Field>& rep,
                                                  const std::vector<Matrix<Field>>& generators) {
  SubmodulePoint<Field> point;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) point.spaces.emplace_back(rep.field, rep.dims[v]);
  for (std::size_t v : q.topological_order()) {
    Matrix<Field> g = generators[v];
    for (std::size_t a : q.arrows_into(v)) {
      const auto img = point.spaces[q.arrows()[a].source].image(rep.maps[a]);
      for (std::size_t i = 0; i < img.dimension(); ++i) g.append_row(img.basis().row(i));
    }
    point.spaces[v] = Subspace<Field>::span(g);
  }
  return point;
}

/// The subrepresentation as a representation in its own right, using the
/// echelon basis of each subspace.
template <class Field>
Representation<Field> subrepresentation(const BoundQuiver& q, const Representation<Field>& rep,
                                        const SubmodulePoint<Field>& point) {
  if (!is_subrepresentation(q, rep, point))
    fail(ErrorCode::NotASubrepresentation, "bimodule", "subspaces are not closed under the arrows");
  const Field& f = rep.field;
  Representation<Field> sub{f, point.dimension_vector(), {}};
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& src = point.spaces[q.arrows()[a].source];
    const auto& dst = point.spaces[q.arrows()[a].target];
    Matrix<Field> images = src.basis() * rep.maps[a].transpose();
    Matrix<Field> m(f, dst.dimension(), src.dimension());
    // A vector of an echelon subspace is determined by its pivot entries.
    for (std::size_t j = 0; j < src.dimension(); ++j)
      for (std::size_t i = 0; i < dst.dimension(); ++i) m(i, j) = images(j, dst.pivots()[i]);
    sub.maps.push_back(std::move(m));
  }
  return sub;
}

/// The quotient representation, with the non-pivot coordinates of each
/// subspace as the basis of the quotient space.
template <class Field>
Representation<Field> quotient_representation(const BoundQuiver& q, const Representation<Field>& rep,
                                              const SubmodulePoint<Field>& point) {
  if (!is_subrepresentation(q, rep, point))
    fail(ErrorCode::NotASubrepresentation, "bimodule", "subspaces are not closed under the arrows");
  const Field& f = rep.field;
  std::vector<std::vector<std::size_t>> complement(q.vertex_count());
  Representation<Field> quo{f, {}, {}};
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<char> pivot(rep.dims[v], 0);
    for (std::size_t p : point.spaces[v].pivots()) pivot[p] = 1;
    for (std::size_t j = 0; j < rep.dims[v]; ++j)
      if (!pivot[j]) complement[v].push_back(j);
    quo.dims.push_back(complement[v].size());
  }
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const std::size_t u = q.arrows()[a].source, v = q.arrows()[a].target;
    const auto& map = rep.maps[a];
    Matrix<Field> m(f, complement[v].size(), complement[u].size());
    std::vector<typename Field::Element> col(rep.dims[v]);
    for (std::size_t j = 0; j < complement[u].size(); ++j) {
      for (std::size_t i = 0; i < rep.dims[v]; ++i) col[i] = map(i, complement[u][j]);
      const auto r = point.spaces[v].reduce(col);
      for (std::size_t i = 0; i < complement[v].size(); ++i) m(i, j) = r[complement[v][i]];
    }
    quo.maps.push_back(std::move(m));
  }
  return quo;
}

/// A representation whose vertex spaces have bases drawn from a global set
/// of labels and whose arrows are the inclusions matching labels. Every
/// canonical bimodule is one; so are the coordinate models of other
/// quiver Grassmannians.
class CoordinateModule {
 public:
  CoordinateModule() = default;
  // basis[v] lists label ids in basis order. Throws InvalidArgument unless
  // the labels at the source of each arrow also occur at its target.
  CoordinateModule(BoundQuiver quiver, std::size_t label_count,
                   std::vector<std::vector<std::size_t>> basis);

  const BoundQuiver& quiver() const { return quiver_; }
  std::size_t label_count() const { return label_count_; }
  const std::vector<std::size_t>& basis(std::size_t v) const { return basis_[v]; }
  // Sorted vertices whose basis contains the label; closed under arrows.
  const std::vector<std::size_t>& support(std::size_t label) const { return support_[label]; }
  std::optional<std::size_t> position(std::size_t v, std::size_t label) const;
  std::vector<std::size_t> dimension_vector() const;

  template <class Field>
  Representation<Field> representation(const Field& f) const {
    Representation<Field> rep{f, dimension_vector(), {}};
    for (const auto& arr : quiver_.arrows()) {
      Matrix<Field> m(f, basis_[arr.target].size(), basis_[arr.source].size());
      for (std::size_t j = 0; j < basis_[arr.source].size(); ++j)
        m(*position(arr.target, basis_[arr.source][j]), j) = f.one();
      rep.maps.push_back(std::move(m));
    }
    return rep;
  }

 private:
  BoundQuiver quiver_;
  std::size_t label_count_ = 0;
  std::vector<std::vector<std::size_t>> basis_;
  std::vector<std::vector<std::size_t>> support_;
  std::vector<std::vector<std::ptrdiff_t>> position_;  // [v][label], -1 if absent
};

/// Basis label r of M(V*): the index-th basis vector of V at `origin`.
struct BasisLabel {
  std::size_t origin = 0;
  std::size_t index = 0;  // zero based

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// `<vertex>#<index>` with a one based index.
std::string label_name(const Quiver& q, const BasisLabel& label);

struct CanonicalBimodule {
  CoordinateModule module;
  std::vector<BasisLabel> labels;  // label id -> (origin, index)
};

/// dims is indexed by base vertex. Labels are numbered by origin vertex
/// then index; the basis at a path lists the labels of the vertices it
/// passes through, source first.
CanonicalBimodule build_canonical_bimodule(const PathQuiver& pq, const std::vector<int>& dims);

/// f(w) = d at the target of w.
std::vector<std::size_t> dim_vector_f(const PathQuiver& pq, const std::vector<int>& dims);
/// e(w) = sum of d over the vertices of w other than its target.
std::vector<std::size_t> dim_vector_e(const PathQuiver& pq, const std::vector<int>& dims);
/// Dimension vector of the bimodule generated by arrows, counted from the
/// factorizations of each path through an arrow. Tree mode only.
std::vector<std::size_t> dim_vector_N(const PathQuiver& pq, const std::vector<int>& dims);

/// The point of X given by the graphs of the maps V_a; maps[a] is
/// d(target) x d(source) for base arrow a.
SubmodulePoint<RationalField> embed_representation(const PathQuiver& pq, const std::vector<int>& dims,
                                                   const std::vector<QMatrix>& maps);

/// The same point obtained as the sub-bimodule generated by the graph
/// vectors at the length-one paths, for cross-checking.
SubmodulePoint<RationalField> embed_representation_generated(const PathQuiver& pq,
                                                             const std::vector<int>& dims,
                                                             const std::vector<QMatrix>& maps);

}  // namespace quivgr
