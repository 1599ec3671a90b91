#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quivgr/bimodule.hpp"
#include "quivgr/fixedpoints.hpp"
#include "quivgr/homology.hpp"
#include "quivgr/polynomial.hpp"

namespace quivgr {

/// One-parameter subgroup of the label torus: a distinct weight per label.
struct Cocharacter {
  std::vector<long> weights;
};

/// A seeded permutation of 1..n; seed 0 is the identity.
Cocharacter generic_cocharacter(std::size_t labels, std::uint64_t seed);

struct TangentBlock {
  std::size_t r = 0;  // label spanning part of N
  std::size_t s = 0;  // label spanning part of M/N
  std::size_t dim = 0;
  long weight = 0;  // w_s - w_r
};

/// Weight decomposition of Hom(N, M/N) at a fixed point N.
struct TangentProfile {
  std::vector<TangentBlock> blocks;  // nonzero blocks, ordered by (r, s)
  std::size_t positive = 0;
  std::size_t negative = 0;

  std::size_t total() const { return positive + negative; }
};

/// Hom(N, M/N) splits into blocks indexed by label pairs (r, s); the block
/// coordinates are the vertices w in C_r where s survives in M/N. Each
/// block's dimension is computed as the kernel of its commutation system.
TangentProfile tangent_blocks(const CoordinateModule& module, const FixedPoint& fp, const Cocharacter& weights);

struct SmoothReport {
  bool smooth = true;
  std::size_t fixed_points = 0;
  std::size_t support_vertices = 0;  // vertices where the quotient dimension is positive
  long expected_dim = 0;              // <e, f>
  ExtDims end_ext;                    // Ext(M, M)
  std::vector<std::string> violations;
};

/// Recomputes Hom/Ext(N, M/N) at every fixed point N and Ext^1(M, M).
/// Requires the bound quiver's Hom complex to be exact.
SmoothReport check_smooth(const CoordinateModule& module, const std::vector<std::size_t>& e);
SmoothReport check_smooth(const PathQuiver& pq, const std::vector<int>& dims);

/// Sum over fixed points of q^(positive tangent weight count). Refuses
/// unless smoothness is certified, and verifies palindromicity, degree and
/// the value at 1 before returning.
Polynomial poincare_polynomial(const CoordinateModule& module, const std::vector<std::size_t>& e,
                               std::uint64_t seed = 0);
Polynomial poincare_polynomial(const PathQuiver& pq, const std::vector<int>& dims, std::uint64_t seed = 0);

}  // namespace quivgr
