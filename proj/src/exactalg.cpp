#include "quivgr/exactalg.hpp"

#include <limits>

namespace quivgr {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  // Pascal-type recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (std::size_t t = 0; t < j; ++t) qj = sat_mul(qj, q);
      row[j] = sat_add(row[j - 1], sat_mul(qj, row[j]));
    }
  }
  return row[k];
}

void for_each_subspace(const PrimeField& field, std::size_t n, std::size_t k,
                       const Subspace<PrimeField>& containing,
                       const std::function<bool(const Subspace<PrimeField>&)>& visit) {
  if (containing.ambient_dimension() != n || containing.dimension() > k || k > n)
    fail(ErrorCode::InfeasibleDimensions, "exactalg",
         "no " + std::to_string(k) + "-dimensional subspace of F^" + std::to_string(n) +
             " contains the given " + std::to_string(containing.dimension()) + "-dimensional one");

  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : containing.pivots()) is_pivot[p] = 1;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) complement.push_back(j);
  const std::size_t m = complement.size();
  const std::size_t r = k - containing.dimension();
  const std::uint32_t q = field.characteristic();

  std::vector<std::size_t> comb(r);
  for (std::size_t i = 0; i < r; ++i) comb[i] = i;

  while (true) {
    std::vector<char> chosen(m, 0);
    for (std::size_t c : comb) chosen[c] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = comb[i] + 1; j < m; ++j)
        if (!chosen[j]) free_slots.emplace_back(i, j);

    std::vector<std::uint32_t> digits(free_slots.size(), 0);
    while (true) {
      FpMatrix gens = containing.basis();
      std::vector<std::uint32_t> row(n, 0);
      for (std::size_t i = 0; i < r; ++i) {
        std::fill(row.begin(), row.end(), 0u);
        row[complement[comb[i]]] = 1;
        for (std::size_t s = 0; s < free_slots.size(); ++s)
          if (free_slots[s].first == i) row[complement[free_slots[s].second]] = digits[s];
        gens.append_row(row);
      }
      if (!visit(Subspace<PrimeField>::span(gens))) return;

      std::size_t d = 0;
      while (d < digits.size() && ++digits[d] == q) digits[d++] = 0;
      if (d == digits.size()) break;
    }

    // Next r-combination of {0..m-1} in lexicographic order.
    std::size_t i = r;
    while (i > 0 && comb[i - 1] == m - r + i - 1) --i;
    if (i == 0) return;
    ++comb[i - 1];
    for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
}

std::vector<Subspace<PrimeField>> enumerate_subspaces(const PrimeField& field, std::size_t n,
                                                      std::size_t k,
                                                      const Subspace<PrimeField>& containing) {
  std::vector<Subspace<PrimeField>> out;
  for_each_subspace(field, n, k, containing, [&](const Subspace<PrimeField>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace quivgr
