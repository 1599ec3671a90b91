#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quivgr {

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// A finite acyclic quiver. The constructor validates identifiers, endpoints
/// and acyclicity, so every Quiver value in circulation is well formed.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_id(std::size_t v) const { return vertices_[v]; }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_arrow(std::string_view id) const;

  const std::vector<std::size_t>& arrows_into(std::size_t v) const { return in_[v]; }
  const std::vector<std::size_t>& arrows_out_of(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& topological_order() const { return topo_; }

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> topo_;
};

bool operator==(const Arrow& a, const Arrow& b);

/// A quiver together with the per-vertex dimensions read from `dim` lines.
/// Vertices without a `dim` line get dimension 0.
struct QuiverData {
  Quiver quiver;
  std::vector<int> dims;

  friend bool operator==(const QuiverData&, const QuiverData&) = default;
};

/// Parses the line-oriented quiver format:
///
///     vertex <id>
///     arrow <id> <source> <target>
///     dim <vertex> <nonnegative integer>
///
/// `#` starts a comment, `;` separates statements on one line. Errors are
/// reported with ParseError, DuplicateIdentifier, DanglingEndpoint and
/// CycleDetected, checked in that order.
QuiverData validate_quiver(std::string_view text);

/// Inverse of validate_quiver up to whitespace and comments.
std::string format_quiver(const QuiverData& data);

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // in traversal order, source to target

  bool is_lazy() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  // Vertices visited, source first.
  std::vector<std::size_t> vertices(const Quiver& q) const;
  bool passes_through(const Quiver& q, std::size_t v) const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// `e_<v>` for lazy paths, arrow ids joined by `.` otherwise.
std::string path_name(const Quiver& q, const Path& p);

bool has_parallel_paths(const Quiver& q);

/// All paths, lazy ones included, ordered by length and then
/// lexicographically by arrow index sequence (lazy paths by vertex order).
std::vector<Path> enumerate_paths(const Quiver& q);

struct BoundArrow {
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Commutativity relation a2*a1 = b2*b1 between two length-two paths
/// from `source` to `target`.
struct RelationSquare {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t a1 = 0, a2 = 0;
  std::size_t b1 = 0, b2 = 0;
};

/// A quiver bound by commutativity squares, with vertices and arrows
/// addressed by index. This is the common currency of the representation
/// modules; the path quiver produces one, tests may build others directly.
class BoundQuiver {
 public:
  BoundQuiver() = default;
  // `ext_complex_exact` declares that the three-term Hom complex built from
  // vertices, arrows and squares computes Ext^1 and Ext^2. It is forced on
  // for quivers without squares (hereditary case).
  BoundQuiver(std::size_t vertex_count, std::vector<BoundArrow> arrows,
              std::vector<RelationSquare> squares, bool ext_complex_exact);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<BoundArrow>& arrows() const { return arrows_; }
  const std::vector<RelationSquare>& squares() const { return squares_; }
  bool ext_complex_exact() const { return ext_complex_exact_; }

  const std::vector<std::size_t>& arrows_into(std::size_t v) const { return in_[v]; }
  const std::vector<std::size_t>& arrows_out_of(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& topological_order() const { return topo_; }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<BoundArrow> arrows_;
  std::vector<RelationSquare> squares_;
  bool ext_complex_exact_ = true;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> topo_;
};

enum class PathMode { Auto, Tree, Paths };

enum class ExtensionKind {
  Source,  // prepend an arrow ending at the path's source
  Target,  // append an arrow starting at the path's target
};

struct ExtensionArrow {
  ExtensionKind kind = ExtensionKind::Source;
  std::size_t base_arrow = 0;
};

/// The quiver whose vertices are the paths of a base quiver and whose arrows
/// extend a path by one arrow at either end, bound by the squares saying
/// that extending at both ends commutes.
class PathQuiver {
 public:
  const Quiver& base() const { return base_; }
  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(std::size_t v) const { return paths_[v]; }
  const BoundQuiver& bound() const { return bound_; }
  std::size_t vertex_count() const { return paths_.size(); }
  const ExtensionArrow& extension(std::size_t arrow) const { return extensions_[arrow]; }

  bool has_parallel_paths() const { return parallel_; }
  // Tree-mode guarantees (pair indexing, Ext machinery) are available.
  bool tree_mode() const { return tree_mode_; }

  std::size_t lazy_vertex(std::size_t base_vertex) const { return lazy_[base_vertex]; }
  std::optional<std::size_t> find_path(const std::vector<std::size_t>& arrows) const;
  std::string vertex_name(std::size_t v) const { return path_name(base_, paths_[v]); }

  // (target, source) of the path: the pair index (i, j) of a path j ~> i.
  std::pair<std::size_t, std::size_t> pair_of(std::size_t v) const;

  // Subpath order, computed as reachability along extension arrows.
  bool precedes(std::size_t u, std::size_t v) const { return order_[u][v] != 0; }

 private:
  friend PathQuiver build_path_quiver(const Quiver& q, PathMode mode);

  Quiver base_;
  std::vector<Path> paths_;
  std::vector<ExtensionArrow> extensions_;
  BoundQuiver bound_;
  std::vector<std::size_t> lazy_;
  std::map<std::vector<std::size_t>, std::size_t> by_arrows_;
  std::vector<std::vector<char>> order_;
  bool parallel_ = false;
  bool tree_mode_ = false;
};

/// Mode Tree on a quiver with parallel paths is an InvalidArgument error;
/// mode Paths disables tree-mode guarantees even for trees.
PathQuiver build_path_quiver(const Quiver& q, PathMode mode = PathMode::Auto);

struct UpperIdeal {
  std::vector<std::size_t> support;  // sorted
  std::vector<std::size_t> members;  // sorted subset of support

  bool contains(std::size_t v) const;
  friend bool operator==(const UpperIdeal&, const UpperIdeal&) = default;
  friend auto operator<=>(const UpperIdeal&, const UpperIdeal&) = default;
};

bool is_arrow_closed(const BoundQuiver& q, std::span<const std::size_t> vertices);
bool is_upper_ideal(const BoundQuiver& q, const UpperIdeal& ideal);

/// Visits every subset of `support` closed under arrows, starting with the
/// empty set. The order is lexicographic in the membership vectors over the
/// sorted support, with absence before presence.
void for_each_upper_ideal(const BoundQuiver& q, std::span<const std::size_t> support,
                          const std::function<void(const std::vector<std::size_t>&)>& visit);

std::vector<UpperIdeal> upper_ideals(const BoundQuiver& q,
                                     std::span<const std::size_t> support);

/// Connected components of the ideal under arrows joining two members.
std::vector<UpperIdeal> decompose_ideal(const BoundQuiver& q, const UpperIdeal& ideal);

}  // namespace quivgr
