#include "quivgr/counting.hpp"

#include <algorithm>

namespace quivgr {

namespace {

mpz_class gaussian_binomial_exact(std::size_t n, std::size_t k, std::uint32_t q) {
  if (k > n) return 0;
  std::vector<mpz_class> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      mpz_class qj;
      mpz_ui_pow_ui(qj.get_mpz_t(), q, j);
      row[j] = row[j - 1] + qj * row[j];
    }
  return row[k];
}

[[noreturn]] void too_large(std::uint64_t cap) {
  fail(ErrorCode::EnumerationTooLarge, "counting",
       "enumeration exceeded the cap of " + std::to_string(cap) + " iterations");
}

class SubrepresentationCounter {
 public:
  SubrepresentationCounter(const BoundQuiver& q, const Representation<PrimeField>& rep,
                           const std::vector<std::size_t>& e, const CountOptions& options)
      : q_(q), rep_(rep), e_(e), options_(options) {
    validate_representation(q, rep);
    if (e.size() != q.vertex_count())
      fail(ErrorCode::InvalidArgument, "counting", "dimension vector length does not match the quiver");
    order_ = options.vertex_order.empty() ? q.topological_order() : options.vertex_order;
    std::vector<std::ptrdiff_t> pos(q.vertex_count(), -1);
    if (order_.size() != q.vertex_count())
      fail(ErrorCode::InvalidArgument, "counting", "vertex order is not a permutation");
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (order_[i] >= q.vertex_count() || pos[order_[i]] >= 0)
        fail(ErrorCode::InvalidArgument, "counting", "vertex order is not a permutation");
      pos[order_[i]] = static_cast<std::ptrdiff_t>(i);
    }
    for (const auto& a : q.arrows())
      if (pos[a.source] > pos[a.target])
        fail(ErrorCode::InvalidArgument, "counting", "vertex order is not topological");
    for (std::size_t v = 0; v < q.vertex_count(); ++v) chosen_.emplace_back(rep.field, rep.dims[v]);
  }

  mpz_class run() {
    for (std::size_t v = 0; v < q_.vertex_count(); ++v)
      if (e_[v] > rep_.dims[v]) return 0;
    return count(0);
  }

 private:
  void tick() {
    if (++iterations_ > options_.cap) too_large(options_.cap);
  }

  mpz_class count(std::size_t depth) {
    if (depth == order_.size()) return 1;
    const std::size_t v = order_[depth];
    const std::size_t n = rep_.dims[v];
    FpMatrix gens(rep_.field, 0, n);
    for (std::size_t a : q_.arrows_into(v)) {
      const auto img = chosen_[q_.arrows()[a].source].image(rep_.maps[a]);
      for (std::size_t i = 0; i < img.dimension(); ++i) gens.append_row(img.basis().row(i));
    }
    const auto forced = Subspace<PrimeField>::span(gens);
    if (forced.dimension() > e_[v]) return 0;
    if (options_.closed_form_sinks && q_.arrows_out_of(v).empty()) {
      tick();
      return gaussian_binomial_exact(n - forced.dimension(), e_[v] - forced.dimension(),
                                     rep_.field.characteristic()) *
             count(depth + 1);
    }
    mpz_class total = 0;
    for_each_subspace(rep_.field, n, e_[v], forced, [&](const Subspace<PrimeField>& s) {
      tick();
      chosen_[v] = s;
      total += count(depth + 1);
      return true;
    });
    return total;
  }

  const BoundQuiver& q_;
  const Representation<PrimeField>& rep_;
  const std::vector<std::size_t>& e_;
  const CountOptions& options_;
  std::vector<std::size_t> order_;
  std::vector<Subspace<PrimeField>> chosen_;
  std::uint64_t iterations_ = 0;
};

}  // namespace

mpz_class count_subrepresentations(const BoundQuiver& q, const Representation<PrimeField>& rep,
                                   const std::vector<std::size_t>& e, const CountOptions& options) {
  return SubrepresentationCounter(q, rep, e, options).run();
}

mpz_class count_grassmannian_points(const PathQuiver& pq, const std::vector<int>& dims, std::uint32_t q,
                                    const CountOptions& options) {
  const auto m = build_canonical_bimodule(pq, dims);
  return count_subrepresentations(pq.bound(), m.module.representation(PrimeField(q)), dim_vector_e(pq, dims),
                                  options);
}

mpz_class count_quotient_grassmannian_points(const PathQuiver& pq, const std::vector<int>& dims,
                                             const std::vector<std::size_t>& g, std::uint32_t q,
                                             const CountOptions& options) {
  const auto m = build_canonical_bimodule(pq, dims);
  const auto dim_m = m.module.dimension_vector();
  if (g.size() != dim_m.size())
    fail(ErrorCode::InvalidArgument, "counting", "dimension vector length does not match the quiver");
  std::vector<std::size_t> sub(dim_m.size());
  for (std::size_t w = 0; w < dim_m.size(); ++w) {
    if (g[w] > dim_m[w]) return 0;
    sub[w] = dim_m[w] - g[w];
  }
  return count_subrepresentations(pq.bound(), m.module.representation(PrimeField(q)), sub, options);
}

std::size_t repvariety_ambient_dimension(const BoundQuiver& bq, const std::vector<std::size_t>& g) {
  std::size_t total = 0;
  for (const auto& a : bq.arrows()) total += g[a.source] * g[a.target];
  return total;
}

std::size_t grassmannian_ambient_dimension(const std::vector<std::size_t>& dim_m, const std::vector<std::size_t>& e) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < dim_m.size(); ++w) total += e[w] * (dim_m[w] - e[w]);
  return total;
}

mpz_class count_repvariety_points(const BoundQuiver& bq, const std::vector<std::size_t>& g, std::uint32_t q,
                                  std::uint64_t cap) {
  if (g.size() != bq.vertex_count())
    fail(ErrorCode::InvalidArgument, "counting", "dimension vector length does not match the quiver");
  const PrimeField field(q);
  const std::size_t entries = repvariety_ambient_dimension(bq, g);
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), q, entries);
  if (space > cap)
    fail(ErrorCode::EnumerationTooLarge, "counting",
         std::to_string(q) + "^" + std::to_string(entries) + " tuples exceed the cap of " + std::to_string(cap));

  std::vector<FpMatrix> maps;
  struct Slot {
    std::size_t arrow, i, j;
  };
  std::vector<Slot> slots;
  for (std::size_t a = 0; a < bq.arrows().size(); ++a) {
    const auto& arr = bq.arrows()[a];
    maps.emplace_back(field, g[arr.target], g[arr.source]);
    for (std::size_t i = 0; i < g[arr.target]; ++i)
      for (std::size_t j = 0; j < g[arr.source]; ++j) slots.push_back({a, i, j});
  }
  mpz_class total = 0;
  while (true) {
    bool ok = true;
    for (const auto& sq : bq.squares())
      if (!(maps[sq.a2] * maps[sq.a1] == maps[sq.b2] * maps[sq.b1])) {
        ok = false;
        break;
      }
    if (ok) ++total;
    std::size_t d = 0;
    while (d < slots.size()) {
      auto& x = maps[slots[d].arrow](slots[d].i, slots[d].j);
      if (++x < q) break;
      x = 0;
      ++d;
    }
    if (d == slots.size()) break;
  }
  return total;
}

InterpolationResult try_interpolate(const std::vector<CountSample>& samples, std::size_t degree_bound) {
  if (samples.size() < degree_bound + 2)
    fail(ErrorCode::InvalidArgument, "counting",
         "interpolation to degree " + std::to_string(degree_bound) + " needs " + std::to_string(degree_bound + 2) +
             " samples, got " + std::to_string(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (samples[i].q == samples[j].q) fail(ErrorCode::InvalidArgument, "counting", "repeated sample point");

  InterpolationResult result;
  result.degree_bound = degree_bound;
  const std::size_t n = degree_bound + 1;
  result.held_out.assign(samples.begin() + static_cast<std::ptrdiff_t>(n), samples.end());

  // Newton divided differences, then expansion into the monomial basis.
  std::vector<mpq_class> x(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = samples[i].q;
    c[i] = mpq_class(samples[i].count);
  }
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - k]);
  std::vector<mpq_class> poly(1, c[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (t - x[k]) + c[k]
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * x[k];
    }
    next[0] += c[k];
    poly = std::move(next);
  }
  std::vector<mpz_class> coeffs;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    poly[i].canonicalize();
    if (poly[i].get_den() != 1) {
      result.failure = "coefficient of q^" + std::to_string(i) + " is " + poly[i].get_str() + ", not an integer";
      return result;
    }
    coeffs.push_back(poly[i].get_num());
  }
  result.polynomial = Polynomial(std::move(coeffs));
  for (const auto& s : result.held_out) {
    const mpz_class predicted = result.polynomial.evaluate(mpz_class(s.q));
    if (predicted != s.count) {
      result.failure = "held-out sample q=" + std::to_string(s.q) + " has count " + s.count.get_str() +
                       " but the fit predicts " + predicted.get_str();
      return result;
    }
  }
  result.ok = true;
  return result;
}

Polynomial interpolate(const std::vector<CountSample>& samples, std::size_t degree_bound) {
  auto r = try_interpolate(samples, degree_bound);
  if (!r.ok) fail(ErrorCode::NotPolynomialCount, "counting", r.failure);
  return r.polynomial;
}

std::vector<std::uint32_t> first_primes(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; out.size() < n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

Polynomial repvariety_motive(const BoundQuiver& bq, const std::vector<std::size_t>& g, std::uint64_t cap) {
  const std::size_t bound = repvariety_ambient_dimension(bq, g);
  std::vector<CountSample> samples;
  for (std::uint32_t p : first_primes(bound + 2)) samples.push_back({p, count_repvariety_points(bq, g, p, cap)});
  return interpolate(samples, bound);
}

}  // namespace quivgr
