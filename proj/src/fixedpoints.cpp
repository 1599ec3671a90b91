#include "quivgr/fixedpoints.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace quivgr {

std::vector<std::size_t> support(const PathQuiver& pq, const BasisLabel& r) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < pq.vertex_count(); ++w)
    if (pq.path(w).passes_through(pq.base(), r.origin)) out.push_back(w);
  return out;
}

namespace {

class Search {
 public:
  Search(const CoordinateModule& module, const std::vector<std::size_t>& e, const FixedPointOptions& options,
         const std::function<void(const FixedPoint&)>& visit)
      : module_(module), e_(e), visit_(visit) {
    const std::size_t labels = module.label_count();
    order_ = options.label_order;
    if (order_.empty()) {
      order_.resize(labels);
      std::iota(order_.begin(), order_.end(), 0);
      std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        return module.support(a).size() > module.support(b).size();
      });
    }
    std::vector<std::size_t> check = order_;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
      if (check[i] != i) fail(ErrorCode::InvalidArgument, "fixedpoints", "label order is not a permutation");
    if (check.size() != labels) fail(ErrorCode::InvalidArgument, "fixedpoints", "label order is not a permutation");
    if (e.size() != module.quiver().vertex_count())
      fail(ErrorCode::InvalidArgument, "fixedpoints", "dimension vector length does not match the quiver");

    // Labels sharing a support share their ideal lists.
    std::map<std::vector<std::size_t>, std::size_t> seen;
    ideal_list_.resize(labels);
    for (std::size_t r = 0; r < labels; ++r) {
      const auto& sup = module.support(r);
      auto [it, fresh] = seen.emplace(sup, ideals_.size());
      if (fresh) ideals_.push_back(upper_ideals(module.quiver(), sup));
      ideal_list_[r] = it->second;
    }
    count_.assign(e.size(), 0);
    remaining_.assign(e.size(), 0);
    for (std::size_t r = 0; r < labels; ++r)
      for (std::size_t w : module.support(r)) ++remaining_[w];
    current_.ideals.resize(labels);
  }

  void run() {
    for (std::size_t w = 0; w < e_.size(); ++w)
      if (remaining_[w] < e_[w]) return;
    descend(0);
  }

 private:
  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      visit_(current_);
      return;
    }
    const std::size_t r = order_[depth];
    const auto& sup = module_.support(r);
    for (std::size_t w : sup) --remaining_[w];
    for (const auto& ideal : ideals_[ideal_list_[r]]) {
      for (std::size_t w : ideal.members) ++count_[w];
      bool ok = true;
      for (std::size_t w : sup)
        if (count_[w] > e_[w] || count_[w] + remaining_[w] < e_[w]) {
          ok = false;
          break;
        }
      if (ok) {
        current_.ideals[r] = ideal;
        descend(depth + 1);
      }
      for (std::size_t w : ideal.members) --count_[w];
    }
    for (std::size_t w : sup) ++remaining_[w];
  }

  const CoordinateModule& module_;
  const std::vector<std::size_t>& e_;
  const std::function<void(const FixedPoint&)>& visit_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<UpperIdeal>> ideals_;
  std::vector<std::size_t> ideal_list_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> remaining_;
  FixedPoint current_;
};

}  // namespace

void for_each_fixed_point(const CoordinateModule& module, const std::vector<std::size_t>& e,
                          const FixedPointOptions& options,
                          const std::function<void(const FixedPoint&)>& visit) {
  Search(module, e, options, visit).run();
}

std::vector<FixedPoint> enumerate_fixed_points(const CoordinateModule& module, const std::vector<std::size_t>& e,
                                               const FixedPointOptions& options) {
  std::vector<FixedPoint> out;
  for_each_fixed_point(module, e, options, [&](const FixedPoint& fp) { out.push_back(fp); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FixedPoint> enumerate_fixed_points(const PathQuiver& pq, const std::vector<int>& dims,
                                               const FixedPointOptions& options) {
  return enumerate_fixed_points(build_canonical_bimodule(pq, dims).module, dim_vector_e(pq, dims),
                                options);
}

std::size_t euler_characteristic(const CoordinateModule& module, const std::vector<std::size_t>& e) {
  std::size_t n = 0;
  for_each_fixed_point(module, e, {}, [&](const FixedPoint&) { ++n; });
  return n;
}

std::size_t euler_characteristic(const PathQuiver& pq, const std::vector<int>& dims) {
  return euler_characteristic(build_canonical_bimodule(pq, dims).module, dim_vector_e(pq, dims));
}

FixedPointType decompose_fixed_point(const CoordinateModule& module, const FixedPoint& fp) {
  FixedPointType type;
  for (const auto& ideal : fp.ideals)
    for (auto& part : decompose_ideal(module.quiver(), ideal)) type.parts.push_back(std::move(part.members));
  std::sort(type.parts.begin(), type.parts.end());
  return type;
}

std::vector<std::vector<std::size_t>> vertex_view(const CoordinateModule& module, const FixedPoint& fp) {
  std::vector<std::vector<std::size_t>> view(module.quiver().vertex_count());
  for (std::size_t r = 0; r < fp.ideals.size(); ++r)
    for (std::size_t w : fp.ideals[r].members) view[w].push_back(r);
  return view;
}

std::string format_fixed_point(const PathQuiver& pq, const CanonicalBimodule& m, const FixedPoint& fp) {
  const auto view = vertex_view(m.module, fp);
  std::string out;
  for (std::size_t w = 0; w < view.size(); ++w) {
    if (view[w].empty()) continue;
    if (!out.empty()) out += "; ";
    out += pq.vertex_name(w) + ": {";
    for (std::size_t i = 0; i < view[w].size(); ++i) {
      if (i) out += ", ";
      out += label_name(pq.base(), m.labels[view[w][i]]);
    }
    out += "}";
  }
  return out.empty() ? "{}" : out;
}

}  // namespace quivgr
