#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quivgr/bimodule.hpp"
#include "quivgr/error.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr::testing {

QuiverData load_fixture(const std::string& name);

/// Fixture with its `dim` lines replaced.
QuiverData with_dims(QuiverData data, std::vector<int> dims);

/// The tree-mode corpus: A2, A3, alternating A3, D4.
std::vector<std::string> tree_corpus();

/// Quiver Grassmannian model on the alternating A5 quiver
/// x1 -> x2 <- x3 -> x4 <- x5 for the D4 fixture with dims (d1, d2, d3, d4).
/// Labels are numbered D1, D2, D3, D4 in that order.
struct Model {
  CoordinateModule module;
  std::vector<std::size_t> e;
};
Model alternating_a5_model(int d1, int d2, int d3, int d4);

/// Random matrices V_a of shape d(target) x d(source), entries in [-3, 3].
std::vector<QMatrix> random_arrow_maps(const PathQuiver& pq, const std::vector<int>& dims, std::mt19937_64& rng);

/// A random representation satisfying the relations, built as a
/// subrepresentation, quotient or sum of such pieces of the coordinate module.
Representation<RationalField> random_bound_representation(const CoordinateModule& module, std::mt19937_64& rng);

/// Runs the CLI in-process.
struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};
CliResult run_cli(const std::vector<std::string>& args);

std::string fixture_path(const std::string& name);

/// Code of the quivgr::Error thrown by f, if any.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace quivgr::testing
