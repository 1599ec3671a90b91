#include "quivgr/motive.hpp"

#include <algorithm>

#include "quivgr/cells.hpp"
#include "quivgr/homology.hpp"

namespace quivgr {

Polynomial gl_motive(std::size_t n) {
  Polynomial p{1};
  for (std::size_t i = 0; i < n; ++i) p = p * (Polynomial::monomial(n) - Polynomial::monomial(i));
  return p;
}

const Fraction& RecursionTable::at(const DimVector& g) const {
  for (const auto& entry : entries)
    if (entry.g == g) return entry.value;
  fail(ErrorCode::InvalidArgument, "motive", "no table entry for " + format_dim_vector(g));
}

std::string format_dim_vector(const DimVector& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

std::vector<DimVector> dimension_vectors_below(const DimVector& f) {
  std::vector<DimVector> out;
  DimVector g(f.size(), 0);
  while (true) {
    out.push_back(g);
    std::size_t i = f.size();
    while (i > 0 && g[i - 1] == f[i - 1]) g[--i] = 0;
    if (i == 0) break;
    ++g[i - 1];
  }
  std::stable_sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
    std::size_t sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    return sa < sb;
  });
  return out;
}

namespace {

bool leq(const DimVector& h, const DimVector& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (h[i] > g[i]) return false;
  return true;
}

DimVector minus(const DimVector& g, const DimVector& h) {
  DimVector d(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) d[i] = g[i] - h[i];
  return d;
}

class Recursion {
 public:
  Recursion(const PathQuiver& pq, const std::vector<int>& dims, const RepVarietyMotives& r)
      : pq_(pq), dims_(dims), r_(r) {
    if (!pq.tree_mode())
      fail(ErrorCode::ParallelPathsUnsupported, "motive", "the recursion is only set up without parallel paths");
    f_ = dim_vector_f(pq, dims);
  }

  const DimVector& f() const { return f_; }

  // [R_g] / [G_g]
  Fraction ratio(const DimVector& g) const {
    auto it = r_.find(g);
    if (it == r_.end())
      fail(ErrorCode::MissingRepVarietyMotive, "motive", "no motive supplied for R_" + format_dim_vector(g));
    Polynomial group{1};
    for (std::size_t x : g) group = group * gl_motive(x);
    return Fraction(it->second, group);
  }

  Fraction left_side(const DimVector& g) const {
    long framing = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i)
      framing += static_cast<long>(dims_[i]) * static_cast<long>(g[pq_.lazy_vertex(i)]);
    return Fraction::lefschetz_power(framing) * ratio(g);
  }

  // The summand for h with [M_h] given.
  Fraction term(const DimVector& g, const DimVector& h, const Fraction& mh) const {
    const DimVector rest = minus(g, h);
    return mh * ratio(rest) * Fraction::lefschetz_power(-euler_form(pq_.bound(), rest, h));
  }

 private:
  const PathQuiver& pq_;
  const std::vector<int>& dims_;
  const RepVarietyMotives& r_;
  DimVector f_;
};

}  // namespace

RecursionTable recursion_solve(const PathQuiver& pq, const std::vector<int>& dims, const RepVarietyMotives& r) {
  Recursion rec(pq, dims, r);
  RecursionTable table;
  for (const auto& g : dimension_vectors_below(rec.f())) {
    Fraction value = rec.left_side(g);
    for (const auto& entry : table.entries)
      if (leq(entry.g, g)) value = value - rec.term(g, entry.g, entry.value);
    if (!value.is_polynomial())
      table.diagnostics.push_back("[M_" + format_dim_vector(g) + "] = " + value.to_string() + " is not a polynomial");
    table.entries.push_back({g, value});
  }
  if (!table.top().value.is_polynomial())
    fail(ErrorCode::NonPolynomialEntry, "motive",
         "top entry [M_" + format_dim_vector(table.top().g) + "] = " + table.top().value.to_string());
  return table;
}

Fraction recursion_residual(const PathQuiver& pq, const std::vector<int>& dims, const RepVarietyMotives& r,
                            const RecursionTable& table, const DimVector& g) {
  Recursion rec(pq, dims, r);
  Fraction right;
  for (const auto& entry : table.entries)
    if (leq(entry.g, g)) right = right + rec.term(g, entry.g, entry.value);
  return rec.left_side(g) - right;
}

RepVarietyMotives repvariety_motives(const PathQuiver& pq, const std::vector<int>& dims, std::uint64_t cap) {
  RepVarietyMotives out;
  for (const auto& g : dimension_vectors_below(dim_vector_f(pq, dims)))
    out.emplace(g, repvariety_motive(pq.bound(), g, cap));
  return out;
}

ConsistencyReport consistency_check(const RecursionTable& table, const PathQuiver& pq, const std::vector<int>& dims,
                                    const ConsistencyOptions& options) {
  ConsistencyReport report;
  auto mismatch = [&](const std::string& line) {
    report.ok = false;
    report.lines.push_back("MISMATCH " + line);
    report.mismatches.push_back(line);
  };
  const auto& top = table.top();
  try {
    const Polynomial p = poincare_polynomial(pq, dims, options.seed);
    if (top.value == Fraction(p))
      report.lines.push_back("top entry equals the Poincare polynomial " + p.to_string("L"));
    else
      mismatch("top entry " + top.value.to_string() + " differs from the Poincare polynomial " + p.to_string("L"));
  } catch (const Error& err) {
    mismatch(std::string("Poincare polynomial unavailable: ") + err.what());
  }

  const auto dim_m = build_canonical_bimodule(pq, dims).module.dimension_vector();
  for (const auto& entry : table.entries) {
    const std::string name = "[M_" + format_dim_vector(entry.g) + "]";
    if (!entry.value.is_polynomial()) {
      mismatch(name + " = " + entry.value.to_string() + " is not a polynomial");
      continue;
    }
    const Polynomial& value = entry.value.numerator();
    if (!value.has_nonnegative_coefficients()) mismatch(name + " = " + value.to_string("L") + " has a negative coefficient");

    std::vector<CountSample> samples;
    try {
      CountOptions co;
      co.cap = options.cap;
      for (std::uint32_t p : options.primes)
        samples.push_back({p, count_quotient_grassmannian_points(pq, dims, entry.g, p, co)});
    } catch (const Error& err) {
      report.lines.push_back(name + ": counting skipped (" + err.what() + ")");
      continue;
    }
    DimVector sub(dim_m.size());
    for (std::size_t w = 0; w < sub.size(); ++w) sub[w] = dim_m[w] - std::min(dim_m[w], entry.g[w]);
    const std::size_t bound = std::min(grassmannian_ambient_dimension(dim_m, sub),
                                       samples.size() >= 2 ? samples.size() - 2 : std::size_t{0});
    if (samples.size() < bound + 2) {
      report.lines.push_back(name + ": too few primes to interpolate");
      continue;
    }
    const auto fit = try_interpolate(samples, bound);
    if (!fit.ok) {
      mismatch(name + ": point counts are not polynomial (" + fit.failure + ")");
      continue;
    }
    if (fit.polynomial == value)
      report.lines.push_back(name + " = " + value.to_string("L") + " matches the point count");
    else
      mismatch(name + " = " + value.to_string("L") + " but the point count gives " + fit.polynomial.to_string("L"));
  }
  return report;
}

}  // namespace quivgr
