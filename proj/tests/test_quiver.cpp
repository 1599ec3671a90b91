#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quivgr/quiver.hpp"
#include "support.hpp"

using namespace quivgr;
using quivgr::testing::error_of;
using quivgr::testing::load_fixture;

namespace {

std::vector<std::string> names(const Quiver& q, const std::vector<Path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(path_name(q, p));
  return out;
}

// Random acyclic quiver on n vertices; arrows only go from lower to higher
// index, parallel arrows allowed.
Quiver random_dag(std::mt19937_64& rng, std::size_t n, std::size_t arrows) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Arrow> as;
  while (as.size() < arrows) {
    std::size_t s = pick(rng), t = pick(rng);
    if (s == t) continue;
    if (s > t) std::swap(s, t);
    as.push_back({"x" + std::to_string(as.size()), s, t});
  }
  return Quiver(vs, as);
}

// Number of paths, lazy ones included: N(v) = 1 + sum over arrows v->w of N(w).
std::size_t transfer_matrix_path_count(const Quiver& q) {
  std::vector<std::size_t> from(q.vertex_count(), 1);
  const auto& topo = q.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (std::size_t a : q.arrows_out_of(*it)) from[*it] += from[q.arrows()[a].target];
  std::size_t total = 0;
  for (auto x : from) total += x;
  return total;
}

bool is_contiguous_subpath(const Quiver& q, const Path& small, const Path& big) {
  if (small.is_lazy()) return big.passes_through(q, small.source);
  return std::search(big.arrows.begin(), big.arrows.end(), small.arrows.begin(), small.arrows.end()) !=
         big.arrows.end();
}

std::vector<std::size_t> through(const PathQuiver& pq, std::size_t base_vertex) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < pq.vertex_count(); ++v)
    if (pq.path(v).passes_through(pq.base(), base_vertex)) out.push_back(v);
  return out;
}

}  // namespace

TEST(ValidateQuiver, SmallestNontrivialQuiver) {
  const auto data = validate_quiver("vertex 1; vertex 2; arrow a 1 2");
  EXPECT_EQ(data.quiver.vertex_count(), 2u);
  EXPECT_EQ(data.quiver.arrow_count(), 1u);
  EXPECT_EQ(data.dims, (std::vector<int>{0, 0}));
}

TEST(ValidateQuiver, LoopIsACycle) {
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; arrow a 1 1"); }), ErrorCode::CycleDetected);
}

TEST(ValidateQuiver, LongerCycle) {
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 2 3; arrow c 3 1"); }),
            ErrorCode::CycleDetected);
}

TEST(ValidateQuiver, ReusedIdentifier) {
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; vertex 2; arrow a 1 2; arrow a 2 1"); }),
            ErrorCode::DuplicateIdentifier);
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; vertex 1"); }), ErrorCode::DuplicateIdentifier);
}

TEST(ValidateQuiver, DanglingEndpoint) {
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; arrow a 1 7"); }), ErrorCode::DanglingEndpoint);
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; dim 2 3"); }), ErrorCode::DanglingEndpoint);
}

TEST(ValidateQuiver, ParseErrors) {
  EXPECT_EQ(error_of([] { validate_quiver("vertex"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; arrow a 1"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; dim 1 -2"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { validate_quiver("vertex 1; dim 1 x"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { validate_quiver("vertex v-1"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { validate_quiver("edge 1 2"); }), ErrorCode::ParseError);
}

TEST(ValidateQuiver, CommentsAndDims) {
  const auto data = validate_quiver("# header\nvertex 1 # first\nvertex 2\narrow a 1 2\ndim 2 3\n");
  EXPECT_EQ(data.dims, (std::vector<int>{0, 3}));
}

TEST(ValidateQuiver, FormatRoundTrip) {
  for (const auto& name : {"a2", "a3", "alt_a3", "d4", "k2", "alt", "point"}) {
    const auto data = load_fixture(name);
    EXPECT_EQ(validate_quiver(format_quiver(data)), data) << name;
  }
}

TEST(ParallelPaths, Examples) {
  EXPECT_FALSE(has_parallel_paths(load_fixture("a3").quiver));
  EXPECT_TRUE(has_parallel_paths(validate_quiver("vertex 1; vertex 2; arrow a 1 2; arrow b 1 2").quiver));
  EXPECT_TRUE(has_parallel_paths(
      validate_quiver("vertex 1; vertex 2; vertex 3; vertex 4; arrow a 1 2; arrow b 2 4; arrow c 1 3; arrow d 3 4")
          .quiver));
  EXPECT_FALSE(has_parallel_paths(load_fixture("d4").quiver));
}

TEST(EnumeratePaths, A2) {
  const auto q = load_fixture("a2").quiver;
  EXPECT_EQ(names(q, enumerate_paths(q)), (std::vector<std::string>{"e_1", "e_2", "a"}));
}

TEST(EnumeratePaths, ParallelExample) {
  const auto q = load_fixture("k2").quiver;
  EXPECT_EQ(names(q, enumerate_paths(q)),
            (std::vector<std::string>{"e_1", "e_2", "e_3", "a", "b", "c", "a.c", "b.c"}));
}

TEST(EnumeratePaths, A3HasSixPaths) { EXPECT_EQ(enumerate_paths(load_fixture("a3").quiver).size(), 6u); }

TEST(EnumeratePaths, PathsCompose) {
  const auto q = load_fixture("d4").quiver;
  for (const auto& p : enumerate_paths(q)) {
    std::size_t at = p.source;
    for (std::size_t a : p.arrows) {
      ASSERT_EQ(q.arrows()[a].source, at);
      at = q.arrows()[a].target;
    }
    EXPECT_EQ(at, p.target);
  }
}

TEST(EnumeratePaths, CountMatchesTransferMatrix) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto q = random_dag(rng, 2 + trial % 5, trial % 8);
    EXPECT_EQ(enumerate_paths(q).size(), transfer_matrix_path_count(q));
    EXPECT_EQ(build_path_quiver(q).vertex_count(), transfer_matrix_path_count(q));
  }
}

TEST(BuildPathQuiver, A2) {
  const auto pq = build_path_quiver(load_fixture("a2").quiver);
  EXPECT_EQ(pq.vertex_count(), 3u);
  EXPECT_EQ(pq.bound().arrows().size(), 2u);
  EXPECT_EQ(pq.bound().squares().size(), 0u);
  const auto a = *pq.find_path({0});
  for (const auto& arrow : pq.bound().arrows()) EXPECT_EQ(arrow.target, a);
  EXPECT_TRUE(pq.tree_mode());
}

TEST(BuildPathQuiver, ParallelExample) {
  const auto pq = build_path_quiver(load_fixture("k2").quiver);
  EXPECT_EQ(pq.vertex_count(), 8u);
  EXPECT_EQ(pq.bound().arrows().size(), 10u);
  EXPECT_EQ(pq.bound().squares().size(), 2u);
  EXPECT_TRUE(pq.has_parallel_paths());
  EXPECT_FALSE(pq.tree_mode());
  EXPECT_FALSE(pq.bound().ext_complex_exact());
}

TEST(BuildPathQuiver, D4PairIndexing) {
  const auto pq = build_path_quiver(load_fixture("d4").quiver);
  ASSERT_EQ(pq.vertex_count(), 9u);
  std::set<std::string> pairs;
  for (std::size_t v = 0; v < pq.vertex_count(); ++v) {
    const auto [i, j] = pq.pair_of(v);
    pairs.insert(pq.base().vertex_id(i) + pq.base().vertex_id(j));
  }
  EXPECT_EQ(pairs, (std::set<std::string>{"31", "33", "32", "11", "21", "22", "42", "41", "44"}));
}

TEST(BuildPathQuiver, ModeSelection) {
  const auto k2 = load_fixture("k2").quiver;
  EXPECT_EQ(error_of([&] { build_path_quiver(k2, PathMode::Tree); }), ErrorCode::InvalidArgument);
  const auto forced = build_path_quiver(load_fixture("a3").quiver, PathMode::Paths);
  EXPECT_FALSE(forced.tree_mode());
}

TEST(BuildPathQuiver, ArrowsExtendByOne) {
  for (const auto& name : {"a3", "d4", "k2", "alt_a3"}) {
    const auto pq = build_path_quiver(load_fixture(name).quiver);
    const auto& q = pq.base();
    for (std::size_t k = 0; k < pq.bound().arrows().size(); ++k) {
      const auto& arrow = pq.bound().arrows()[k];
      const auto& from = pq.path(arrow.source);
      const auto& to = pq.path(arrow.target);
      const auto& ext = pq.extension(k);
      ASSERT_EQ(to.length(), from.length() + 1);
      std::vector<std::size_t> expected = from.arrows;
      if (ext.kind == ExtensionKind::Source) {
        EXPECT_EQ(q.arrows()[ext.base_arrow].target, from.source);
        expected.insert(expected.begin(), ext.base_arrow);
      } else {
        EXPECT_EQ(q.arrows()[ext.base_arrow].source, from.target);
        expected.push_back(ext.base_arrow);
      }
      EXPECT_EQ(to.arrows, expected) << name;
    }
  }
}

TEST(BuildPathQuiver, SquaresCommuteBothWays) {
  const auto pq = build_path_quiver(load_fixture("k2").quiver);
  const auto& arrows = pq.bound().arrows();
  for (const auto& sq : pq.bound().squares()) {
    EXPECT_EQ(arrows[sq.a1].source, sq.source);
    EXPECT_EQ(arrows[sq.b1].source, sq.source);
    EXPECT_EQ(arrows[sq.a2].target, sq.target);
    EXPECT_EQ(arrows[sq.b2].target, sq.target);
    EXPECT_EQ(arrows[sq.a1].target, arrows[sq.a2].source);
    EXPECT_EQ(arrows[sq.b1].target, arrows[sq.b2].source);
    EXPECT_NE(sq.a1, sq.b1);
  }
}

TEST(BuildPathQuiver, TreePairProjectionMatchesPairArrows) {
  for (const auto& name : quivgr::testing::tree_corpus()) {
    const auto pq = build_path_quiver(load_fixture(name).quiver);
    const auto& q = pq.base();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t v = 0; v < pq.vertex_count(); ++v) EXPECT_TRUE(seen.insert(pq.pair_of(v)).second) << name;
    // Pair arrows: (i, j) -> (i', j) for alpha: i -> i', and (i, j) -> (i, j') for alpha: j' -> j.
    std::set<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> expected, actual;
    for (const auto& [i, j] : seen)
      for (const auto& a : q.arrows()) {
        if (a.source == i && seen.count({a.target, j})) expected.insert({{i, j}, {a.target, j}});
        if (a.target == j && seen.count({i, a.source})) expected.insert({{i, j}, {i, a.source}});
      }
    for (const auto& arrow : pq.bound().arrows()) actual.insert({pq.pair_of(arrow.source), pq.pair_of(arrow.target)});
    EXPECT_EQ(actual, expected) << name;
  }
}

TEST(BuildPathQuiver, OrderIsSubpathPartialOrder) {
  for (const auto& name : {"a3", "d4", "k2", "alt_a3"}) {
    const auto pq = build_path_quiver(load_fixture(name).quiver);
    const std::size_t n = pq.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
      EXPECT_TRUE(pq.precedes(u, u));
      for (std::size_t v = 0; v < n; ++v) {
        EXPECT_EQ(pq.precedes(u, v), is_contiguous_subpath(pq.base(), pq.path(u), pq.path(v))) << name;
        if (u != v && pq.precedes(u, v)) EXPECT_FALSE(pq.precedes(v, u));
        for (std::size_t w = 0; w < n; ++w)
          if (pq.precedes(u, v) && pq.precedes(v, w)) EXPECT_TRUE(pq.precedes(u, w));
      }
    }
  }
}

TEST(UpperIdeals, Chain) {
  const BoundQuiver chain(2, {{0, 1}}, {}, true);
  const std::vector<std::size_t> all{0, 1};
  const auto ideals = upper_ideals(chain, all);
  ASSERT_EQ(ideals.size(), 3u);
  EXPECT_TRUE(ideals[0].members.empty());
  EXPECT_EQ(ideals[1].members, (std::vector<std::size_t>{1}));
  EXPECT_EQ(ideals[2].members, (std::vector<std::size_t>{0, 1}));
}

TEST(UpperIdeals, Antichain) {
  const BoundQuiver antichain(2, {}, {}, true);
  const std::vector<std::size_t> all{0, 1};
  EXPECT_EQ(upper_ideals(antichain, all).size(), 4u);
}

TEST(UpperIdeals, SupportOfMiddleLabelInParallelExample) {
  const auto pq = build_path_quiver(load_fixture("k2").quiver);
  const auto supp = through(pq, 1);
  ASSERT_EQ(supp.size(), 6u);
  // Poset e_2 < a, b, c; a < a.c; b < b.c; c < a.c, b.c. Its antichains
  // number 1 + 6 + 6 + 1 = 14.
  const auto ideals = upper_ideals(pq.bound(), supp);
  EXPECT_EQ(ideals.size(), 14u);
  // Brute force over all subsets.
  std::size_t closed = 0;
  for (unsigned mask = 0; mask < (1u << supp.size()); ++mask) {
    std::set<std::size_t> s;
    for (std::size_t k = 0; k < supp.size(); ++k)
      if (mask >> k & 1) s.insert(supp[k]);
    bool ok = true;
    for (const auto& a : pq.bound().arrows())
      if (s.count(a.source) && !s.count(a.target)) ok = false;
    closed += ok;
  }
  EXPECT_EQ(closed, ideals.size());
  for (const auto& c : ideals) EXPECT_TRUE(is_upper_ideal(pq.bound(), c));
}

TEST(UpperIdeals, RejectsSupportThatIsNotArrowClosed) {
  const BoundQuiver chain(2, {{0, 1}}, {}, true);
  const std::vector<std::size_t> first{0};
  EXPECT_EQ(error_of([&] { upper_ideals(chain, first); }), ErrorCode::SupportNotArrowClosed);
}

TEST(DecomposeIdeal, Examples) {
  const auto pq = build_path_quiver(load_fixture("k2").quiver);
  const auto supp = through(pq, 1);
  const auto a = *pq.find_path({0}), ac = *pq.find_path({0, 2}), bc = *pq.find_path({1, 2});
  EXPECT_TRUE(decompose_ideal(pq.bound(), UpperIdeal{supp, {}}).empty());
  auto sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(decompose_ideal(pq.bound(), UpperIdeal{supp, sorted({a, ac})}).size(), 1u);
  EXPECT_EQ(decompose_ideal(pq.bound(), UpperIdeal{supp, sorted({ac, bc})}).size(), 2u);
}

TEST(DecomposeIdeal, PartsPartitionTheIdeal) {
  for (const auto& name : {"d4", "k2", "a3"}) {
    const auto pq = build_path_quiver(load_fixture(name).quiver);
    for (std::size_t base = 0; base < pq.base().vertex_count(); ++base) {
      const auto supp = through(pq, base);
      for (const auto& c : upper_ideals(pq.bound(), supp)) {
        std::vector<std::size_t> all;
        for (const auto& part : decompose_ideal(pq.bound(), c)) {
          EXPECT_FALSE(part.members.empty());
          EXPECT_TRUE(is_upper_ideal(pq.bound(), part));
          all.insert(all.end(), part.members.begin(), part.members.end());
        }
        std::sort(all.begin(), all.end());
        EXPECT_EQ(all, c.members);
        EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
      }
    }
  }
}
