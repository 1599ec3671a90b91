#include "support.hpp"

#include <fstream>
#include <sstream>

#include "quivgr/cli.hpp"

#ifndef QUIVGR_FIXTURES
#define QUIVGR_FIXTURES "tests/fixtures"
#endif

namespace quivgr::testing {

std::string fixture_path(const std::string& name) { return std::string(QUIVGR_FIXTURES) + "/" + name; }

QuiverData load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name + ".quiver"));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return validate_quiver(s.str());
}

QuiverData with_dims(QuiverData data, std::vector<int> dims) {
  data.dims = std::move(dims);
  return data;
}

std::vector<std::string> tree_corpus() { return {"a2", "a3", "alt_a3", "d4"}; }

Model alternating_a5_model(int d1, int d2, int d3, int d4) {
  std::vector<std::vector<std::size_t>> blocks(4);
  std::size_t next = 0;
  for (int i = 0; i < d1; ++i) blocks[0].push_back(next++);
  for (int i = 0; i < d2; ++i) blocks[1].push_back(next++);
  for (int i = 0; i < d3; ++i) blocks[2].push_back(next++);
  for (int i = 0; i < d4; ++i) blocks[3].push_back(next++);
  auto cat = [&](std::initializer_list<int> which) {
    std::vector<std::size_t> out;
    for (int b : which) out.insert(out.end(), blocks[b].begin(), blocks[b].end());
    return out;
  };
  BoundQuiver q(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}}, {}, true);
  std::vector<std::vector<std::size_t>> basis = {cat({1, 2}), cat({0, 1, 2}), cat({0, 1}), cat({0, 1, 3}), cat({1, 3})};
  const auto u = [](int x) { return static_cast<std::size_t>(x); };
  return {CoordinateModule(q, next, basis), {u(d2), u(d1 + d2), u(d1), u(d1 + d2), u(d2)}};
}

std::vector<QMatrix> random_arrow_maps(const PathQuiver& pq, const std::vector<int>& dims, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  const RationalField f;
  std::vector<QMatrix> maps;
  for (const auto& a : pq.base().arrows()) {
    QMatrix m(f, static_cast<std::size_t>(dims[a.target]), static_cast<std::size_t>(dims[a.source]));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    maps.push_back(std::move(m));
  }
  return maps;
}

namespace {

SubmodulePoint<RationalField> random_sub(const BoundQuiver& q, const Representation<RationalField>& rep,
                                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> count(0, 1);
  std::vector<QMatrix> gens;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    QMatrix g(rep.field, 0, rep.dims[v]);
    if (rep.dims[v] > 0) {
      const int k = count(rng);
      std::vector<mpq_class> row(rep.dims[v]);
      for (int i = 0; i < k; ++i) {
        for (auto& x : row) x = entry(rng);
        g.append_row(row);
      }
    }
    gens.push_back(std::move(g));
  }
  return generated_subrepresentation(q, rep, gens);
}

}  // namespace

Representation<RationalField> random_bound_representation(const CoordinateModule& module, std::mt19937_64& rng) {
  const auto& q = module.quiver();
  const RationalField f;
  const auto m = module.representation(f);
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0:
      return subrepresentation(q, m, random_sub(q, m, rng));
    case 1:
      return quotient_representation(q, m, random_sub(q, m, rng));
    case 2: {
      const auto sub = subrepresentation(q, m, random_sub(q, m, rng));
      return quotient_representation(q, sub, random_sub(q, sub, rng));
    }
    default:
      return direct_sum(subrepresentation(q, m, random_sub(q, m, rng)),
                        quotient_representation(q, m, random_sub(q, m, rng)));
  }
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace quivgr::testing
