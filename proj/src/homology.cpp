#include "quivgr/homology.hpp"

namespace quivgr {

long euler_form(const BoundQuiver& q, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  if (x.size() != q.vertex_count() || y.size() != q.vertex_count())
    fail(ErrorCode::InvalidArgument, "homology", "dimension vector length does not match the quiver");
  auto term = [&](std::size_t u, std::size_t v) { return static_cast<long>(x[u] * y[v]); };
  long total = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) total += term(v, v);
  for (const auto& a : q.arrows()) total -= term(a.source, a.target);
  for (const auto& s : q.squares()) total += term(s.source, s.target);
  return total;
}

long euler_form(const PathQuiver& pq, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  if (!pq.tree_mode())
    fail(ErrorCode::ParallelPathsUnsupported, "homology",
         "the Euler form is only defined for quivers without parallel paths");
  return euler_form(pq.bound(), x, y);
}

}  // namespace quivgr
