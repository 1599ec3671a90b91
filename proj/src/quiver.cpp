#include "quivgr/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "quivgr/error.hpp"

namespace quivgr {

namespace {

constexpr std::string_view kModule = "quiver";

// Kahn's algorithm; returns nullopt when a directed cycle exists.
std::optional<std::vector<std::size_t>> kahn_order(
    std::size_t n, const std::vector<std::vector<std::size_t>>& successors) {
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& out : successors)
    for (std::size_t w : out) ++indegree[w];
  // Smallest ready vertex first keeps the order deterministic.
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.insert(v);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (std::size_t w : successors[v])
      if (--indegree[w] == 0) ready.insert(w);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool is_identifier(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) != 0; });
}

}  // namespace

bool operator==(const Arrow& a, const Arrow& b) {
  return a.id == b.id && a.source == b.source && a.target == b.target;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string_view> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) fail(ErrorCode::DuplicateIdentifier, kModule, "vertex '" + v + "'");
  seen.clear();
  for (const auto& a : arrows_)
    if (!seen.insert(a.id).second)
      fail(ErrorCode::DuplicateIdentifier, kModule, "arrow '" + a.id + "'");
  in_.assign(vertices_.size(), {});
  out_.assign(vertices_.size(), {});
  std::vector<std::vector<std::size_t>> successors(vertices_.size());
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      fail(ErrorCode::DanglingEndpoint, kModule, "arrow '" + a.id + "'");
    out_[a.source].push_back(i);
    in_[a.target].push_back(i);
    successors[a.source].push_back(a.target);
  }
  auto order = kahn_order(vertices_.size(), successors);
  if (!order) fail(ErrorCode::CycleDetected, kModule, "the quiver has a directed cycle");
  topo_ = std::move(*order);
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view id) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == id) return v;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].id == id) return a;
  return std::nullopt;
}

bool operator==(const Quiver& a, const Quiver& b) {
  return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
}

QuiverData validate_quiver(std::string_view text) {
  struct RawArrow {
    std::string id, source, target;
  };
  std::vector<std::string> vertices;
  std::vector<RawArrow> raw_arrows;
  std::vector<std::pair<std::string, int>> raw_dims;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t stmt_pos = 0;
    while (stmt_pos <= line.size()) {
      std::size_t stmt_end = line.find(';', stmt_pos);
      if (stmt_end == std::string_view::npos) stmt_end = line.size();
      std::istringstream in{std::string(line.substr(stmt_pos, stmt_end - stmt_pos))};
      stmt_pos = stmt_end + 1;
      std::vector<std::string> tok;
      for (std::string t; in >> t;) tok.push_back(std::move(t));
      if (tok.empty()) continue;

      auto where = "line " + std::to_string(line_no) + ": ";
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[0] == "dim" && i == 2) continue;
        if (!is_identifier(tok[i]))
          fail(ErrorCode::ParseError, kModule, where + "invalid identifier '" + tok[i] + "'");
      }
      if (tok[0] == "vertex") {
        if (tok.size() != 2) fail(ErrorCode::ParseError, kModule, where + "expected 'vertex <id>'");
        vertices.push_back(tok[1]);
      } else if (tok[0] == "arrow") {
        if (tok.size() != 4)
          fail(ErrorCode::ParseError, kModule, where + "expected 'arrow <id> <source> <target>'");
        raw_arrows.push_back({tok[1], tok[2], tok[3]});
      } else if (tok[0] == "dim") {
        if (tok.size() != 3)
          fail(ErrorCode::ParseError, kModule, where + "expected 'dim <vertex> <n>'");
        int value = 0;
        const std::string& s = tok[2];
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
          fail(ErrorCode::ParseError, kModule, where + "dimension must be a nonnegative integer");
        raw_dims.emplace_back(tok[1], value);
      } else {
        fail(ErrorCode::ParseError, kModule, where + "unknown statement '" + tok[0] + "'");
      }
    }
  }

  {
    std::set<std::string> seen;
    for (const auto& v : vertices)
      if (!seen.insert(v).second)
        fail(ErrorCode::DuplicateIdentifier, kModule, "vertex '" + v + "'");
    seen.clear();
    for (const auto& a : raw_arrows)
      if (!seen.insert(a.id).second)
        fail(ErrorCode::DuplicateIdentifier, kModule, "arrow '" + a.id + "'");
    seen.clear();
    for (const auto& [v, d] : raw_dims)
      if (!seen.insert(v).second)
        fail(ErrorCode::DuplicateIdentifier, kModule, "dim for vertex '" + v + "'");
  }

  auto index_of = [&](const std::string& id, const std::string& context) {
    auto it = std::find(vertices.begin(), vertices.end(), id);
    if (it == vertices.end())
      fail(ErrorCode::DanglingEndpoint, kModule, context + " references unknown vertex '" + id + "'");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  std::vector<Arrow> arrows;
  for (const auto& a : raw_arrows)
    arrows.push_back({a.id, index_of(a.source, "arrow '" + a.id + "'"),
                      index_of(a.target, "arrow '" + a.id + "'")});
  std::vector<int> dims(vertices.size(), 0);
  for (const auto& [v, d] : raw_dims) dims[index_of(v, "dim")] = d;

  return QuiverData{Quiver(std::move(vertices), std::move(arrows)), std::move(dims)};
}

std::string format_quiver(const QuiverData& data) {
  std::ostringstream out;
  const Quiver& q = data.quiver;
  for (const auto& v : q.vertices()) out << "vertex " << v << '\n';
  for (const auto& a : q.arrows())
    out << "arrow " << a.id << ' ' << q.vertex_id(a.source) << ' ' << q.vertex_id(a.target) << '\n';
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    out << "dim " << q.vertex_id(v) << ' ' << data.dims[v] << '\n';
  return out.str();
}

std::vector<std::size_t> Path::vertices(const Quiver& q) const {
  std::vector<std::size_t> out{source};
  for (std::size_t a : arrows) out.push_back(q.arrows()[a].target);
  return out;
}

bool Path::passes_through(const Quiver& q, std::size_t v) const {
  if (source == v) return true;
  return std::any_of(arrows.begin(), arrows.end(),
                     [&](std::size_t a) { return q.arrows()[a].target == v; });
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.is_lazy()) return "e_" + q.vertex_id(p.source);
  std::string name;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) name += '.';
    name += q.arrows()[p.arrows[i]].id;
  }
  return name;
}

bool has_parallel_paths(const Quiver& q) {
  // Path counts from every source, saturated at 2, by a DP in topological order.
  const std::size_t n = q.vertex_count();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> count(n, 0);
    count[s] = 1;
    for (std::size_t v : q.topological_order()) {
      if (count[v] == 0) continue;
      for (std::size_t a : q.arrows_out_of(v)) {
        int& c = count[q.arrows()[a].target];
        c = std::min(2, c + count[v]);
      }
    }
    for (std::size_t t = 0; t < n; ++t)
      if (count[t] >= 2) return true;
  }
  return false;
}

std::vector<Path> enumerate_paths(const Quiver& q) {
  std::vector<Path> all;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back(Path{v, v, {}});
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const Path& p : layer) {
      for (std::size_t a : q.arrows_out_of(p.target)) {
        Path ext = p;
        ext.arrows.push_back(a);
        ext.target = q.arrows()[a].target;
        next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
    layer = std::move(next);
  }
  return all;
}

BoundQuiver::BoundQuiver(std::size_t vertex_count, std::vector<BoundArrow> arrows,
                         std::vector<RelationSquare> squares, bool ext_complex_exact)
    : vertex_count_(vertex_count),
      arrows_(std::move(arrows)),
      squares_(std::move(squares)),
      ext_complex_exact_(ext_complex_exact || squares_.empty()),
      in_(vertex_count),
      out_(vertex_count) {
  std::vector<std::vector<std::size_t>> successors(vertex_count);
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    if (a.source >= vertex_count || a.target >= vertex_count)
      fail(ErrorCode::DanglingEndpoint, kModule, "bound arrow endpoint out of range");
    out_[a.source].push_back(i);
    in_[a.target].push_back(i);
    successors[a.source].push_back(a.target);
  }
  for (const auto& sq : squares_) {
    auto ok = [&](std::size_t a) { return a < arrows_.size(); };
    if (!ok(sq.a1) || !ok(sq.a2) || !ok(sq.b1) || !ok(sq.b2) ||
        arrows_[sq.a1].source != sq.source || arrows_[sq.b1].source != sq.source ||
        arrows_[sq.a2].target != sq.target || arrows_[sq.b2].target != sq.target ||
        arrows_[sq.a1].target != arrows_[sq.a2].source ||
        arrows_[sq.b1].target != arrows_[sq.b2].source)
      fail(ErrorCode::InvalidArgument, kModule, "malformed relation square");
  }
  auto order = kahn_order(vertex_count, successors);
  if (!order) fail(ErrorCode::CycleDetected, kModule, "bound quiver has a directed cycle");
  topo_ = std::move(*order);
}

std::optional<std::size_t> PathQuiver::find_path(const std::vector<std::size_t>& arrows) const {
  auto it = by_arrows_.find(arrows);
  if (it == by_arrows_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, std::size_t> PathQuiver::pair_of(std::size_t v) const {
  return {paths_[v].target, paths_[v].source};
}

PathQuiver build_path_quiver(const Quiver& q, PathMode mode) {
  PathQuiver pq;
  pq.base_ = q;
  pq.paths_ = enumerate_paths(q);
  pq.parallel_ = has_parallel_paths(q);
  if (mode == PathMode::Tree && pq.parallel_)
    fail(ErrorCode::InvalidArgument, kModule, "tree mode requested but the quiver has parallel paths");
  pq.tree_mode_ = !pq.parallel_ && mode != PathMode::Paths;

  const std::size_t n = pq.paths_.size();
  pq.lazy_.assign(q.vertex_count(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    const Path& p = pq.paths_[v];
    if (p.is_lazy()) pq.lazy_[p.source] = v;
    else pq.by_arrows_.emplace(p.arrows, v);
  }
  auto vertex_of = [&](const Path& p) {
    return p.is_lazy() ? pq.lazy_[p.source] : pq.by_arrows_.at(p.arrows);
  };
  auto extend_source = [&](const Path& p, std::size_t a) {
    Path r{q.arrows()[a].source, p.target, {a}};
    r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
    return r;
  };
  auto extend_target = [&](const Path& p, std::size_t b) {
    Path r = p;
    r.arrows.push_back(b);
    r.target = q.arrows()[b].target;
    return r;
  };

  std::vector<BoundArrow> arrows;
  std::map<std::tuple<std::size_t, ExtensionKind, std::size_t>, std::size_t> arrow_index;
  for (std::size_t v = 0; v < n; ++v) {
    const Path& p = pq.paths_[v];
    for (std::size_t a : q.arrows_into(p.source)) {
      arrow_index[{v, ExtensionKind::Source, a}] = arrows.size();
      arrows.push_back({v, vertex_of(extend_source(p, a))});
      pq.extensions_.push_back({ExtensionKind::Source, a});
    }
    for (std::size_t b : q.arrows_out_of(p.target)) {
      arrow_index[{v, ExtensionKind::Target, b}] = arrows.size();
      arrows.push_back({v, vertex_of(extend_target(p, b))});
      pq.extensions_.push_back({ExtensionKind::Target, b});
    }
  }

  std::vector<RelationSquare> squares;
  for (std::size_t v = 0; v < n; ++v) {
    const Path& p = pq.paths_[v];
    for (std::size_t a : q.arrows_into(p.source)) {
      for (std::size_t b : q.arrows_out_of(p.target)) {
        Path pa = extend_source(p, a);
        Path pb = extend_target(p, b);
        std::size_t va = vertex_of(pa), vb = vertex_of(pb);
        RelationSquare sq;
        sq.source = v;
        sq.target = vertex_of(extend_target(pa, b));
        sq.a1 = arrow_index.at({v, ExtensionKind::Source, a});
        sq.a2 = arrow_index.at({va, ExtensionKind::Target, b});
        sq.b1 = arrow_index.at({v, ExtensionKind::Target, b});
        sq.b2 = arrow_index.at({vb, ExtensionKind::Source, a});
        squares.push_back(sq);
      }
    }
  }
  pq.bound_ = BoundQuiver(n, std::move(arrows), std::move(squares), pq.tree_mode_);

  // Reachability closure, filled in reverse topological order.
  pq.order_.assign(n, std::vector<char>(n, 0));
  const auto& topo = pq.bound_.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    std::size_t v = *it;
    pq.order_[v][v] = 1;
    for (std::size_t a : pq.bound_.arrows_out_of(v)) {
      const auto& row = pq.order_[pq.bound_.arrows()[a].target];
      for (std::size_t w = 0; w < n; ++w)
        if (row[w]) pq.order_[v][w] = 1;
    }
  }
  return pq;
}

bool UpperIdeal::contains(std::size_t v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

bool is_arrow_closed(const BoundQuiver& q, std::span<const std::size_t> vertices) {
  std::vector<char> in(q.vertex_count(), 0);
  for (std::size_t v : vertices) in[v] = 1;
  for (const auto& a : q.arrows())
    if (in[a.source] && !in[a.target]) return false;
  return true;
}

bool is_upper_ideal(const BoundQuiver& q, const UpperIdeal& ideal) {
  std::vector<char> in_support(q.vertex_count(), 0), in_ideal(q.vertex_count(), 0);
  for (std::size_t v : ideal.support) in_support[v] = 1;
  for (std::size_t v : ideal.members) {
    if (!in_support[v]) return false;
    in_ideal[v] = 1;
  }
  for (const auto& a : q.arrows())
    if (in_ideal[a.source] && in_support[a.target] && !in_ideal[a.target]) return false;
  return true;
}

void for_each_upper_ideal(const BoundQuiver& q, std::span<const std::size_t> support,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  if (!is_arrow_closed(q, sorted))
    fail(ErrorCode::SupportNotArrowClosed, kModule, "support is not closed under arrows");

  enum : char { Undecided, Out, In, Outside };
  std::vector<char> state(q.vertex_count(), Outside);
  for (std::size_t v : sorted) state[v] = Undecided;

  // Marks v and everything forced along with it; records the changes so the
  // caller can undo them.
  auto propagate = [&](std::size_t v, char value, std::vector<std::size_t>& changed) {
    std::vector<std::size_t> stack{v};
    state[v] = value;
    changed.push_back(v);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      const auto& next = value == In ? q.arrows_out_of(u) : q.arrows_into(u);
      for (std::size_t a : next) {
        std::size_t w = value == In ? q.arrows()[a].target : q.arrows()[a].source;
        if (state[w] == Undecided) {
          state[w] = value;
          changed.push_back(w);
          stack.push_back(w);
        }
      }
    }
  };

  std::vector<std::size_t> members;
  std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    std::size_t i = from;
    while (i < sorted.size() && state[sorted[i]] != Undecided) ++i;
    if (i == sorted.size()) {
      members.clear();
      for (std::size_t v : sorted)
        if (state[v] == In) members.push_back(v);
      visit(members);
      return;
    }
    for (char value : {Out, In}) {
      std::vector<std::size_t> changed;
      propagate(sorted[i], value, changed);
      recurse(i + 1);
      for (std::size_t w : changed) state[w] = Undecided;
    }
  };
  recurse(0);
}

std::vector<UpperIdeal> upper_ideals(const BoundQuiver& q, std::span<const std::size_t> support) {
  std::vector<std::size_t> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<UpperIdeal> out;
  for_each_upper_ideal(q, sorted, [&](const std::vector<std::size_t>& m) {
    out.push_back(UpperIdeal{sorted, m});
  });
  return out;
}

std::vector<UpperIdeal> decompose_ideal(const BoundQuiver& q, const UpperIdeal& ideal) {
  std::vector<std::size_t> parent(q.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> in(q.vertex_count(), 0);
  for (std::size_t v : ideal.members) in[v] = 1;
  for (const auto& a : q.arrows())
    if (in[a.source] && in[a.target]) parent[find(a.source)] = find(a.target);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v : ideal.members) groups[find(v)].push_back(v);
  std::vector<UpperIdeal> parts;
  for (auto& [root, members] : groups) parts.push_back(UpperIdeal{ideal.support, std::move(members)});
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace quivgr
