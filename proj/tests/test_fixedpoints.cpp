#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "quivgr/bimodule.hpp"
#include "quivgr/fixedpoints.hpp"
#include "support.hpp"

using namespace quivgr;
using quivgr::testing::load_fixture;

namespace {

const RationalField Q;

std::vector<std::string> names(const PathQuiver& pq, const std::vector<std::size_t>& vs) {
  std::vector<std::string> out;
  for (std::size_t v : vs) out.push_back(pq.vertex_name(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Counts coordinate sub-representations of dimension e directly: choose
// e(w) basis labels at each vertex and keep the choices closed under arrows.
std::size_t brute_force_coordinate_points(const CoordinateModule& m, const std::vector<std::size_t>& e) {
  const auto& q = m.quiver();
  const auto& order = q.topological_order();
  std::vector<std::vector<char>> chosen(q.vertex_count());
  std::size_t count = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == order.size()) {
      ++count;
      return;
    }
    const std::size_t v = order[k];
    const std::size_t n = m.basis(v).size();
    if (e[v] > n) return;
    std::vector<char> pick(n, 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(e[v]), pick.end(), 1);
    do {
      bool ok = true;
      for (std::size_t a : q.arrows_into(v)) {
        const std::size_t u = q.arrows()[a].source;
        for (std::size_t i = 0; i < m.basis(u).size(); ++i)
          if (chosen[u][i] && !pick[*m.position(v, m.basis(u)[i])]) ok = false;
      }
      if (!ok) continue;
      chosen[v] = pick;
      walk(k + 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
  };
  walk(0);
  return count;
}

}  // namespace

TEST(Support, Examples) {
  const auto a2 = build_path_quiver(load_fixture("a2").quiver);
  EXPECT_EQ(names(a2, support(a2, {0, 0})), (std::vector<std::string>{"a", "e_1"}));
  const auto k2 = build_path_quiver(load_fixture("k2").quiver);
  EXPECT_EQ(names(k2, support(k2, {1, 0})), (std::vector<std::string>{"a", "a.c", "b", "b.c", "c", "e_2"}));
  EXPECT_EQ(names(k2, support(k2, {2, 0})), (std::vector<std::string>{"a.c", "b.c", "c", "e_3"}));
  EXPECT_TRUE(is_arrow_closed(k2.bound(), support(k2, {1, 0})));
}

TEST(EnumerateFixedPoints, Examples) {
  const auto a2 = load_fixture("a2");
  EXPECT_EQ(enumerate_fixed_points(build_path_quiver(a2.quiver), a2.dims).size(), 2u);
  const auto a3 = load_fixture("a3");
  EXPECT_EQ(enumerate_fixed_points(build_path_quiver(a3.quiver), a3.dims).size(), 5u);
  const auto k2 = load_fixture("k2");
  EXPECT_EQ(enumerate_fixed_points(build_path_quiver(k2.quiver), k2.dims).size(), 13u);
}

TEST(EnumerateFixedPoints, A2Points) {
  const auto a2 = load_fixture("a2");
  const auto pq = build_path_quiver(a2.quiver);
  const auto m = build_canonical_bimodule(pq, a2.dims);
  std::vector<std::string> shown;
  for (const auto& fp : enumerate_fixed_points(pq, a2.dims)) shown.push_back(format_fixed_point(pq, m, fp));
  std::sort(shown.begin(), shown.end());
  EXPECT_EQ(shown, (std::vector<std::string>{"a: {1#1}", "a: {2#1}"}));
}

TEST(EnumerateFixedPoints, MatchesCoordinateBruteForce) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(0, 2);
  for (const auto& name : {"a2", "a3", "alt_a3", "d4", "k2"}) {
    const auto base = load_fixture(name);
    const auto pq = build_path_quiver(base.quiver);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> d(base.quiver.vertex_count());
      for (auto& x : d) x = dim(rng);
      const auto m = build_canonical_bimodule(pq, d);
      const auto e = dim_vector_e(pq, d);
      EXPECT_EQ(euler_characteristic(m.module, e), brute_force_coordinate_points(m.module, e)) << name;
    }
  }
}

TEST(EnumerateFixedPoints, PointsAreSubrepresentationsOfDimensionE) {
  for (const auto& name : {"a3", "d4", "k2"}) {
    const auto base = load_fixture(name);
    const auto pq = build_path_quiver(base.quiver);
    const std::vector<int> d(base.quiver.vertex_count(), 2);
    const auto m = build_canonical_bimodule(pq, d);
    const auto e = dim_vector_e(pq, d);
    const auto rep = m.module.representation(Q);
    const auto fps = enumerate_fixed_points(m.module, e);
    EXPECT_TRUE(std::is_sorted(fps.begin(), fps.end()));
    EXPECT_EQ(std::adjacent_find(fps.begin(), fps.end()), fps.end());
    for (const auto& fp : fps) {
      const auto p = coordinate_point(m.module, fp, Q);
      EXPECT_TRUE(is_subrepresentation(pq.bound(), rep, p));
      EXPECT_EQ(p.dimension_vector(), e);
      for (std::size_t r = 0; r < fp.ideals.size(); ++r) {
        EXPECT_TRUE(is_upper_ideal(pq.bound(), fp.ideals[r]));
        for (std::size_t w : fp.ideals[r].members) EXPECT_GT(e[w], 0u);
      }
    }
  }
}

TEST(EnumerateFixedPoints, LabelOrderDoesNotMatter) {
  std::mt19937_64 rng(32);
  const auto base = load_fixture("d4");
  const auto pq = build_path_quiver(base.quiver);
  const std::vector<int> d{1, 2, 1, 2};
  const auto m = build_canonical_bimodule(pq, d);
  const auto e = dim_vector_e(pq, d);
  const auto reference = enumerate_fixed_points(m.module, e);
  std::vector<std::size_t> order(m.module.label_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(enumerate_fixed_points(m.module, e, FixedPointOptions{order}), reference);
  }
}

TEST(DecomposeFixedPoint, A2) {
  const auto a2 = load_fixture("a2");
  const auto pq = build_path_quiver(a2.quiver);
  const auto m = build_canonical_bimodule(pq, a2.dims);
  const auto a = *pq.find_path({0});
  for (const auto& fp : enumerate_fixed_points(pq, a2.dims))
    EXPECT_EQ(decompose_fixed_point(m.module, fp), (FixedPointType{{{a}}}));
}

TEST(DecomposeFixedPoint, ZeroE) {
  const auto point = load_fixture("point");
  const auto pq = build_path_quiver(point.quiver);
  const auto m = build_canonical_bimodule(pq, point.dims);
  const auto fps = enumerate_fixed_points(pq, point.dims);
  ASSERT_EQ(fps.size(), 1u);
  EXPECT_TRUE(decompose_fixed_point(m.module, fps[0]).parts.empty());
  EXPECT_EQ(format_fixed_point(pq, m, fps[0]), "{}");
}

TEST(DecomposeFixedPoint, PartsAccountForE) {
  const auto base = load_fixture("k2");
  const auto pq = build_path_quiver(base.quiver);
  const std::vector<int> d{1, 2, 1};
  const auto m = build_canonical_bimodule(pq, d);
  const auto e = dim_vector_e(pq, d);
  std::size_t total_e = 0;
  for (auto x : e) total_e += x;
  for (const auto& fp : enumerate_fixed_points(m.module, e)) {
    const auto type = decompose_fixed_point(m.module, fp);
    std::size_t total = 0;
    for (const auto& part : type.parts) total += part.size();
    EXPECT_EQ(total, total_e);
    EXPECT_TRUE(std::is_sorted(type.parts.begin(), type.parts.end()));
  }
}

TEST(EulerCharacteristic, Examples) {
  const auto point = load_fixture("point");
  EXPECT_EQ(euler_characteristic(build_path_quiver(point.quiver), point.dims), 1u);
  const auto alt = load_fixture("alt");
  EXPECT_EQ(euler_characteristic(build_path_quiver(alt.quiver), alt.dims), 6u);
}

TEST(EulerCharacteristic, D4AgreesWithAlternatingA5Model) {
  const auto d4 = load_fixture("d4");
  const auto pq = build_path_quiver(d4.quiver);
  for (const std::vector<int>& d : {std::vector<int>{1, 1, 1, 1}, {1, 2, 1, 1}, {2, 1, 2, 1}}) {
    const auto model = quivgr::testing::alternating_a5_model(d[0], d[1], d[2], d[3]);
    EXPECT_EQ(euler_characteristic(pq, d), euler_characteristic(model.module, model.e));
  }
  const auto model = quivgr::testing::alternating_a5_model(1, 1, 1, 1);
  EXPECT_EQ(model.e, (std::vector<std::size_t>{1, 2, 1, 2, 1}));
  EXPECT_EQ(euler_characteristic(model.module, model.e), 13u);
}
