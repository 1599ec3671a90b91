#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quivgr/counting.hpp"
#include "quivgr/polynomial.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr {

/// [GL_n] = prod_{i<n} (L^n - L^i).
Polynomial gl_motive(std::size_t n);

using DimVector = std::vector<std::size_t>;
using RepVarietyMotives = std::map<DimVector, Polynomial>;

struct RecursionEntry {
  DimVector g;
  Fraction value;  // [M_g], the framed moduli space of quotient dimension g
};

struct RecursionTable {
  std::vector<RecursionEntry> entries;  // by total dimension, then lexicographically; g = f last
  std::vector<std::string> diagnostics;

  const Fraction& at(const DimVector& g) const;
  const RecursionEntry& top() const { return entries.back(); }
};

/// Every g <= f coordinatewise, ordered by total dimension and then
/// lexicographically.
std::vector<DimVector> dimension_vectors_below(const DimVector& f);

/// Solves, for each g <= f in increasing order,
///
///     L^(sum_i d_i g(e_i)) [R_g]/[G_g] = sum_{h <= g} [M_h] [R_(g-h)]/[G_(g-h)] L^(-<g-h, h>)
///
/// for [M_g]; the h = g summand is [M_g] itself. Tree mode only.
RecursionTable recursion_solve(const PathQuiver& pq, const std::vector<int>& dims, const RepVarietyMotives& r);

/// Left side minus right side of the identity at g, for a solved table.
Fraction recursion_residual(const PathQuiver& pq, const std::vector<int>& dims, const RepVarietyMotives& r,
                            const RecursionTable& table, const DimVector& g);

/// [R_g] for every g <= f by counting and interpolation.
RepVarietyMotives repvariety_motives(const PathQuiver& pq, const std::vector<int>& dims,
                                     std::uint64_t cap = kDefaultCap);

struct ConsistencyOptions {
  std::vector<std::uint32_t> primes = {2, 3, 5, 7, 11};
  std::uint64_t cap = kDefaultCap;
  std::uint64_t seed = 0;
};

struct ConsistencyReport {
  bool ok = true;
  std::vector<std::string> lines;       // one per check performed
  std::vector<std::string> mismatches;  // subset of failures, verbatim
};

/// Compares the top entry with the Poincare polynomial, each entry with the
/// point count of the corresponding quotient Grassmannian, and checks
/// coefficient signs.
ConsistencyReport consistency_check(const RecursionTable& table, const PathQuiver& pq, const std::vector<int>& dims,
                                    const ConsistencyOptions& options = {});

std::string format_dim_vector(const DimVector& g);

}  // namespace quivgr
