#include "quivgr/cells.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace quivgr {

Cocharacter generic_cocharacter(std::size_t labels, std::uint64_t seed) {
  Cocharacter c;
  c.weights.resize(labels);
  std::iota(c.weights.begin(), c.weights.end(), 1L);
  if (seed == 0 || labels < 2) return c;
  // Fisher-Yates with an explicit draw so the result does not depend on the
  // standard library's distribution implementation.
  std::mt19937_64 rng(seed);
  for (std::size_t i = labels - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(c.weights[i], c.weights[j]);
  }
  return c;
}

TangentProfile tangent_blocks(const CoordinateModule& module, const FixedPoint& fp, const Cocharacter& weights) {
  const auto& q = module.quiver();
  const std::size_t labels = module.label_count();
  if (weights.weights.size() != labels)
    fail(ErrorCode::InvalidArgument, "cells", "cocharacter does not match the labels");
  const RationalField f;
  TangentProfile profile;
  std::vector<std::ptrdiff_t> index(q.vertex_count());
  for (std::size_t r = 0; r < labels; ++r) {
    const auto& cr = fp.ideals[r];
    if (cr.members.empty()) continue;
    for (std::size_t s = 0; s < labels; ++s) {
      if (s == r) continue;
      const auto& cs = fp.ideals[s];
      std::fill(index.begin(), index.end(), -1);
      std::size_t n = 0;
      for (std::size_t w : cr.members)
        if (module.position(w, s) && !cs.contains(w)) index[w] = static_cast<std::ptrdiff_t>(n++);
      if (n == 0) continue;
      QMatrix constraints(f, 0, n);
      std::vector<mpq_class> row(n);
      for (const auto& arr : q.arrows()) {
        if (!cr.contains(arr.source) || index[arr.target] < 0) continue;
        std::fill(row.begin(), row.end(), mpq_class(0));
        row[static_cast<std::size_t>(index[arr.target])] = 1;
        if (index[arr.source] >= 0) row[static_cast<std::size_t>(index[arr.source])] = -1;
        constraints.append_row(row);
      }
      const std::size_t dim = n - rank(constraints);
      if (dim == 0) continue;
      const long weight = weights.weights[s] - weights.weights[r];
      if (weight == 0) fail(ErrorCode::InvalidArgument, "cells", "cocharacter weights are not distinct");
      profile.blocks.push_back({r, s, dim, weight});
      (weight > 0 ? profile.positive : profile.negative) += dim;
    }
  }
  return profile;
}

SmoothReport check_smooth(const CoordinateModule& module, const std::vector<std::size_t>& e) {
  const auto& q = module.quiver();
  if (!q.ext_complex_exact())
    fail(ErrorCode::ParallelPathsUnsupported, "cells", "smoothness is only certified without parallel paths");
  const RationalField field;
  const auto rep = module.representation(field);
  const auto dim_m = module.dimension_vector();
  std::vector<std::size_t> fvec(dim_m.size());
  for (std::size_t w = 0; w < dim_m.size(); ++w) {
    if (e[w] > dim_m[w]) fail(ErrorCode::InfeasibleDimensions, "cells", "e exceeds dim M");
    fvec[w] = dim_m[w] - e[w];
  }
  SmoothReport report;
  report.expected_dim = euler_form(q, e, fvec);
  report.support_vertices = static_cast<std::size_t>(std::count_if(fvec.begin(), fvec.end(), [](std::size_t x) { return x > 0; }));
  report.end_ext = ext_dims(q, rep, rep);
  if (report.end_ext.ext1 != 0) {
    report.smooth = false;
    report.violations.push_back("Ext^1(M, M) = " + std::to_string(report.end_ext.ext1));
  }
  const ExtDims expected{static_cast<std::size_t>(std::max(0L, report.expected_dim)), 0, 0};
  for_each_fixed_point(module, e, {}, [&](const FixedPoint& fp) {
    ++report.fixed_points;
    const auto point = coordinate_point(module, fp, field);
    const auto sub = subrepresentation(q, rep, point);
    const auto quo = quotient_representation(q, rep, point);
    const auto got = ext_dims(q, sub, quo);
    if (report.expected_dim < 0 || !(got == expected)) {
      report.smooth = false;
      report.violations.push_back("fixed point " + std::to_string(report.fixed_points) + ": (hom, ext1, ext2) = (" +
                                  std::to_string(got.hom) + ", " + std::to_string(got.ext1) + ", " +
                                  std::to_string(got.ext2) + ")");
    }
  });
  if (report.fixed_points == 0) {
    report.smooth = false;
    report.violations.push_back("no fixed points: the variety is empty");
  }
  return report;
}

SmoothReport check_smooth(const PathQuiver& pq, const std::vector<int>& dims) {
  if (!pq.tree_mode())
    fail(ErrorCode::ParallelPathsUnsupported, "cells", "smoothness is only certified without parallel paths");
  return check_smooth(build_canonical_bimodule(pq, dims).module, dim_vector_e(pq, dims));
}

Polynomial poincare_polynomial(const CoordinateModule& module, const std::vector<std::size_t>& e,
                               std::uint64_t seed) {
  const auto report = check_smooth(module, e);
  if (!report.smooth)
    fail(ErrorCode::SmoothnessNotCertified, "cells",
         report.violations.empty() ? std::string("certificate failed") : report.violations.front());
  const auto weights = generic_cocharacter(module.label_count(), seed);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(report.expected_dim) + 1, 0);
  std::size_t chi = 0;
  bool bad_total = false;
  for_each_fixed_point(module, e, {}, [&](const FixedPoint& fp) {
    ++chi;
    const auto profile = tangent_blocks(module, fp, weights);
    if (static_cast<long>(profile.total()) != report.expected_dim) {
      bad_total = true;
      return;
    }
    coeffs[profile.positive] += 1;
  });
  if (bad_total)
    fail(ErrorCode::PavingInconsistent, "cells", "tangent dimension differs from <e, f> at some fixed point");
  Polynomial p(std::move(coeffs));
  if (p.degree() != report.expected_dim || !p.is_palindromic())
    fail(ErrorCode::PavingInconsistent, "cells", "cell counts " + p.coefficient_list() + " are not palindromic of degree " +
                                                     std::to_string(report.expected_dim));
  if (p.evaluate(mpz_class(1)) != chi)
    fail(ErrorCode::PavingInconsistent, "cells", "P(1) differs from the fixed point count");
  return p;
}

Polynomial poincare_polynomial(const PathQuiver& pq, const std::vector<int>& dims, std::uint64_t seed) {
  if (!pq.tree_mode())
    fail(ErrorCode::ParallelPathsUnsupported, "cells", "the cell decomposition requires a quiver without parallel paths");
  return poincare_polynomial(build_canonical_bimodule(pq, dims).module, dim_vector_e(pq, dims), seed);
}

}  // namespace quivgr
