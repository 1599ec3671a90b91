#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quivgr/bimodule.hpp"
#include "quivgr/polynomial.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr {

inline constexpr std::uint64_t kDefaultCap = 100'000'000;

struct CountOptions {
  // Elementary iterations (subspaces visited, matrix tuples tried) before
  // EnumerationTooLarge is raised.
  std::uint64_t cap = kDefaultCap;
  // Vertex processing order; must be a topological order. Empty means the
  // quiver's own topological order.
  std::vector<std::size_t> vertex_order;
  // Count the choices at vertices without outgoing arrows by a Gaussian
  // binomial instead of enumerating them.
  bool closed_form_sinks = true;
};

/// Number of subrepresentations of dimension vector e.
mpz_class count_subrepresentations(const BoundQuiver& q, const Representation<PrimeField>& rep,
                                   const std::vector<std::size_t>& e, const CountOptions& options = {});

/// #Gr_e(M(V*))(F_q).
mpz_class count_grassmannian_points(const PathQuiver& pq, const std::vector<int>& dims, std::uint32_t q,
                                    const CountOptions& options = {});

/// Number of sub-bimodules of M(V*) whose quotient has dimension vector g.
mpz_class count_quotient_grassmannian_points(const PathQuiver& pq, const std::vector<int>& dims,
                                             const std::vector<std::size_t>& g, std::uint32_t q,
                                             const CountOptions& options = {});

/// Number of representations of dimension vector g over F_q satisfying
/// every relation square, by exhaustive search.
mpz_class count_repvariety_points(const BoundQuiver& bq, const std::vector<std::size_t>& g, std::uint32_t q,
                                  std::uint64_t cap = kDefaultCap);

/// sum over arrows u -> v of g_u g_v.
std::size_t repvariety_ambient_dimension(const BoundQuiver& bq, const std::vector<std::size_t>& g);
/// sum over vertices of e (dim M - e).
std::size_t grassmannian_ambient_dimension(const std::vector<std::size_t>& dim_m, const std::vector<std::size_t>& e);

struct CountSample {
  std::uint32_t q = 0;
  mpz_class count;
};

struct InterpolationResult {
  bool ok = false;
  Polynomial polynomial;
  std::size_t degree_bound = 0;
  std::vector<CountSample> held_out;  // samples not used to fit, all checked
  std::string failure;
};

/// Fits a polynomial of degree at most degree_bound through the first
/// degree_bound + 1 samples and checks it against the rest. Needs at least
/// degree_bound + 2 samples at distinct primes.
InterpolationResult try_interpolate(const std::vector<CountSample>& samples, std::size_t degree_bound);
/// As try_interpolate, raising NotPolynomialCount on failure.
Polynomial interpolate(const std::vector<CountSample>& samples, std::size_t degree_bound);

/// The first n primes.
std::vector<std::uint32_t> first_primes(std::size_t n);

/// Motive of the representation variety R_g, from counts at the first
/// (ambient dimension + 2) primes.
Polynomial repvariety_motive(const BoundQuiver& bq, const std::vector<std::size_t>& g,
                             std::uint64_t cap = kDefaultCap);

}  // namespace quivgr
