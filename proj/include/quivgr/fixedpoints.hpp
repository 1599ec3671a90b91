#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "quivgr/bimodule.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr {

/// A torus fixed point of Gr_e(M): for each label r an upper ideal C_r of
/// supp(r), the vertices where r spans a coordinate of the subspace.
struct FixedPoint {
  std::vector<UpperIdeal> ideals;  // indexed by label

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

/// Multiset of indecomposable summands, each given by its vertex set.
struct FixedPointType {
  std::vector<std::vector<std::size_t>> parts;  // sorted

  friend bool operator==(const FixedPointType&, const FixedPointType&) = default;
};

struct FixedPointOptions {
  // Order in which labels are assigned during the search. Empty means
  // decreasing support size, ties by label id. The result does not depend
  // on it.
  std::vector<std::size_t> label_order;
};

/// Vertices of the path quiver whose path passes through the origin of r.
std::vector<std::size_t> support(const PathQuiver& pq, const BasisLabel& r);

/// Calls visit on every fixed point of Gr_e(module), in search order.
void for_each_fixed_point(const CoordinateModule& module, const std::vector<std::size_t>& e,
                          const FixedPointOptions& options,
                          const std::function<void(const FixedPoint&)>& visit);

/// All fixed points, sorted.
std::vector<FixedPoint> enumerate_fixed_points(const CoordinateModule& module, const std::vector<std::size_t>& e,
                                               const FixedPointOptions& options = {});
std::vector<FixedPoint> enumerate_fixed_points(const PathQuiver& pq, const std::vector<int>& dims,
                                               const FixedPointOptions& options = {});

std::size_t euler_characteristic(const CoordinateModule& module, const std::vector<std::size_t>& e);
std::size_t euler_characteristic(const PathQuiver& pq, const std::vector<int>& dims);

FixedPointType decompose_fixed_point(const CoordinateModule& module, const FixedPoint& fp);

/// Labels r with w in C_r, per vertex w, in label order.
std::vector<std::vector<std::size_t>> vertex_view(const CoordinateModule& module, const FixedPoint& fp);

/// The coordinate subspaces spanned by the labels of the vertex view.
template <class Field>
SubmodulePoint<Field> coordinate_point(const CoordinateModule& module, const FixedPoint& fp, const Field& f) {
  SubmodulePoint<Field> point;
  const auto view = vertex_view(module, fp);
  for (std::size_t w = 0; w < view.size(); ++w) {
    const std::size_t n = module.basis(w).size();
    Matrix<Field> gens(f, view[w].size(), n);
    for (std::size_t i = 0; i < view[w].size(); ++i) gens(i, *module.position(w, view[w][i])) = f.one();
    point.spaces.push_back(Subspace<Field>::span(gens));
  }
  return point;
}

/// `a: {1#1}; c: {2#1, 3#1}` over the vertices where the subspace is nonzero.
std::string format_fixed_point(const PathQuiver& pq, const CanonicalBimodule& m, const FixedPoint& fp);

}  // namespace quivgr
