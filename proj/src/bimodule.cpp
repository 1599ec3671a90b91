#include "quivgr/bimodule.hpp"

#include <algorithm>

namespace quivgr {

CoordinateModule::CoordinateModule(BoundQuiver quiver, std::size_t label_count,
                                   std::vector<std::vector<std::size_t>> basis)
    : quiver_(std::move(quiver)), label_count_(label_count), basis_(std::move(basis)) {
  const std::size_t n = quiver_.vertex_count();
  if (basis_.size() != n) fail(ErrorCode::InvalidArgument, "bimodule", "one basis per vertex required");
  position_.assign(n, std::vector<std::ptrdiff_t>(label_count_, -1));
  support_.assign(label_count_, {});
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < basis_[v].size(); ++i) {
      const std::size_t r = basis_[v][i];
      if (r >= label_count_ || position_[v][r] >= 0)
        fail(ErrorCode::InvalidArgument, "bimodule", "bad or repeated label at vertex " + std::to_string(v));
      position_[v][r] = static_cast<std::ptrdiff_t>(i);
      support_[r].push_back(v);
    }
  }
  for (const auto& arr : quiver_.arrows())
    for (std::size_t r : basis_[arr.source])
      if (position_[arr.target][r] < 0)
        fail(ErrorCode::InvalidArgument, "bimodule", "label " + std::to_string(r) + " is lost along an arrow");
}

std::optional<std::size_t> CoordinateModule::position(std::size_t v, std::size_t label) const {
  const auto p = position_[v][label];
  if (p < 0) return std::nullopt;
  return static_cast<std::size_t>(p);
}

std::vector<std::size_t> CoordinateModule::dimension_vector() const {
  std::vector<std::size_t> d;
  for (const auto& b : basis_) d.push_back(b.size());
  return d;
}

std::string label_name(const Quiver& q, const BasisLabel& label) {
  return q.vertex_id(label.origin) + "#" + std::to_string(label.index + 1);
}

namespace {

void check_dims(const PathQuiver& pq, const std::vector<int>& dims) {
  if (dims.size() != pq.base().vertex_count())
    fail(ErrorCode::InvalidArgument, "bimodule", "dimension vector length does not match the quiver");
  for (int d : dims)
    if (d < 0) fail(ErrorCode::InvalidArgument, "bimodule", "negative dimension");
}

}  // namespace

CanonicalBimodule build_canonical_bimodule(const PathQuiver& pq, const std::vector<int>& dims) {
  check_dims(pq, dims);
  const Quiver& q = pq.base();
  CanonicalBimodule out;
  std::vector<std::vector<std::size_t>> labels_of(q.vertex_count());
  for (std::size_t p = 0; p < q.vertex_count(); ++p)
    for (int i = 0; i < dims[p]; ++i) {
      labels_of[p].push_back(out.labels.size());
      out.labels.push_back({p, static_cast<std::size_t>(i)});
    }
  std::vector<std::vector<std::size_t>> basis(pq.vertex_count());
  for (std::size_t w = 0; w < pq.vertex_count(); ++w)
    for (std::size_t p : pq.path(w).vertices(q))
      basis[w].insert(basis[w].end(), labels_of[p].begin(), labels_of[p].end());
  out.module = CoordinateModule(pq.bound(), out.labels.size(), std::move(basis));
  return out;
}

std::vector<std::size_t> dim_vector_f(const PathQuiver& pq, const std::vector<int>& dims) {
  check_dims(pq, dims);
  std::vector<std::size_t> f;
  for (const auto& p : pq.paths()) f.push_back(static_cast<std::size_t>(dims[p.target]));
  return f;
}

std::vector<std::size_t> dim_vector_e(const PathQuiver& pq, const std::vector<int>& dims) {
  check_dims(pq, dims);
  std::vector<std::size_t> e;
  for (const auto& p : pq.paths()) {
    std::size_t sum = 0;
    for (std::size_t v : p.vertices(pq.base()))
      if (v != p.target) sum += static_cast<std::size_t>(dims[v]);
    e.push_back(sum);
  }
  return e;
}

std::vector<std::size_t> dim_vector_N(const PathQuiver& pq, const std::vector<int>& dims) {
  check_dims(pq, dims);
  if (!pq.tree_mode())
    fail(ErrorCode::ParallelPathsUnsupported, "bimodule", "dim N(V*) is defined here for quivers without parallel paths");
  const Quiver& q = pq.base();
  const std::size_t n = q.vertex_count();
  // count[x][y] = number of paths x ~> y, lazy path included.
  std::vector<std::vector<std::size_t>> count(n, std::vector<std::size_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x) count[x][x] = 1;
  for (std::size_t y : q.topological_order())
    for (std::size_t a : q.arrows_into(y))
      for (std::size_t x = 0; x < n; ++x) count[x][y] += count[x][q.arrows()[a].source];

  std::vector<std::size_t> out;
  for (const auto& p : pq.paths()) {
    std::size_t total = 0;
    for (const auto& arr : q.arrows())
      total += static_cast<std::size_t>(dims[arr.source]) * count[p.source][arr.source] * count[arr.target][p.target];
    out.push_back(total);
  }
  const auto f = dim_vector_f(pq, dims);
  const auto m = build_canonical_bimodule(pq, dims).module.dimension_vector();
  for (std::size_t w = 0; w < out.size(); ++w)
    if (m[w] < out[w] || m[w] - out[w] != f[w])
      fail(ErrorCode::InvalidArgument, "bimodule", "dim M - dim N differs from f at " + pq.vertex_name(w));
  return out;
}

namespace {

void check_maps(const PathQuiver& pq, const std::vector<int>& dims, const std::vector<QMatrix>& maps) {
  const Quiver& q = pq.base();
  if (maps.size() != q.arrow_count())
    fail(ErrorCode::InvalidArgument, "bimodule", "one matrix per arrow required");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrows()[a];
    if (maps[a].rows() != static_cast<std::size_t>(dims[arr.target]) ||
        maps[a].cols() != static_cast<std::size_t>(dims[arr.source]))
      fail(ErrorCode::InvalidArgument, "bimodule", "matrix for arrow " + arr.id + " has the wrong shape");
  }
}

// Rows x + V_a(x) for the basis vectors x of the source summand of each
// arrow a occurring in path w, in the basis of M(V*)_w.
QMatrix graph_vectors(const PathQuiver& pq, const CanonicalBimodule& m, std::size_t w,
                      const std::vector<QMatrix>& maps) {
  const Quiver& q = pq.base();
  const RationalField f;
  const auto& basis = m.module.basis(w);
  QMatrix rows(f, 0, basis.size());
  std::vector<mpq_class> v(basis.size());
  // Offset of each visited vertex's block inside the basis at w.
  std::vector<std::size_t> offset;
  std::size_t pos = 0;
  const auto verts = pq.path(w).vertices(q);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    offset.push_back(pos);
    while (pos < basis.size() && m.labels[basis[pos]].origin == verts[k]) ++pos;
  }
  const auto& arrows = pq.path(w).arrows;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const QMatrix& map = maps[arrows[k]];
    for (std::size_t x = 0; x < map.cols(); ++x) {
      std::fill(v.begin(), v.end(), mpq_class(0));
      v[offset[k] + x] = 1;
      for (std::size_t y = 0; y < map.rows(); ++y) v[offset[k + 1] + y] = map(y, x);
      rows.append_row(v);
    }
  }
  return rows;
}

}  // namespace

SubmodulePoint<RationalField> embed_representation(const PathQuiver& pq, const std::vector<int>& dims,
                                                   const std::vector<QMatrix>& maps) {
  check_maps(pq, dims, maps);
  const auto m = build_canonical_bimodule(pq, dims);
  SubmodulePoint<RationalField> point;
  for (std::size_t w = 0; w < pq.vertex_count(); ++w)
    point.spaces.push_back(Subspace<RationalField>::span(graph_vectors(pq, m, w, maps)));
  return point;
}

SubmodulePoint<RationalField> embed_representation_generated(const PathQuiver& pq,
                                                             const std::vector<int>& dims,
                                                             const std::vector<QMatrix>& maps) {
  check_maps(pq, dims, maps);
  const RationalField f;
  const auto m = build_canonical_bimodule(pq, dims);
  const auto rep = m.module.representation(f);
  std::vector<QMatrix> gens;
  for (std::size_t w = 0; w < pq.vertex_count(); ++w) {
    if (pq.path(w).length() == 1)
      gens.push_back(graph_vectors(pq, m, w, maps));
    else
      gens.emplace_back(f, 0, rep.dims[w]);
  }
  return generated_subrepresentation(pq.bound(), rep, gens);
}

}  // namespace quivgr
