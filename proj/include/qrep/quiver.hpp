#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qrep/errors.hpp"

namespace qrep {

struct Arrow {
  std::string id;
  int s;
  int t;
  bool operator==(const Arrow&) const = default;
};

/// A path as a list of arrow indices in traversal order (first arrow first).
/// The empty list is the trivial path at `start`.
struct Path {
  int start;
  int end;
  std::vector<std::size_t> arrows;
  bool operator==(const Path&) const = default;
};

/// Finite acyclic quiver. Vertices are sorted integers, arrows are sorted by
/// id; indices into these sorted lists are used everywhere else.
class Quiver {
 public:
  Quiver(std::vector<int> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    if (vertices_.empty()) throw InputError("quiver: at least one vertex is required");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw InputError("quiver: duplicate vertex id");
    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vertices_.size(); ++i) vindex_[vertices_[i]] = i;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      const auto& a = arrows_[i];
      if (i > 0 && arrows_[i - 1].id == a.id) throw InputError("quiver: duplicate arrow id '" + a.id + "'");
      if (!vindex_.count(a.s) || !vindex_.count(a.t))
        throw InputError("quiver: arrow '" + a.id + "' has an unknown endpoint");
      aindex_[a.id] = i;
      out_[vindex_[a.s]].push_back(i);
      in_[vindex_[a.t]].push_back(i);
    }
    compute_order();
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool has_vertex(int v) const { return vindex_.count(v) > 0; }
  std::size_t vertex_index(int v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw InputError("unknown vertex " + std::to_string(v));
    return it->second;
  }
  bool has_arrow(const std::string& id) const { return aindex_.count(id) > 0; }
  std::size_t arrow_index(const std::string& id) const {
    auto it = aindex_.find(id);
    if (it == aindex_.end()) throw InputError("unknown arrow '" + id + "'");
    return it->second;
  }
  std::size_t source(std::size_t a) const { return vindex_.at(arrows_[a].s); }
  std::size_t target(std::size_t a) const { return vindex_.at(arrows_[a].t); }

  /// Arrow indices leaving (resp. entering) vertex index v, sorted by id.
  std::vector<std::size_t> out_arrows(std::size_t v) const {
    auto it = out_.find(v);
    return it == out_.end() ? std::vector<std::size_t>{} : it->second;
  }
  std::vector<std::size_t> in_arrows(std::size_t v) const {
    auto it = in_.find(v);
    return it == in_.end() ? std::vector<std::size_t>{} : it->second;
  }

  /// Q(v, w): all paths from v to w (vertex ids), lexicographic in arrow ids.
  std::vector<Path> paths(int v, int w) const {
    std::vector<Path> out;
    std::vector<std::size_t> cur;
    std::size_t target_index = vertex_index(w);
    walk(vertex_index(v), target_index, v, w, cur, out);
    return out;
  }
  /// Same, with vertex indices.
  std::vector<Path> paths_idx(std::size_t v, std::size_t w) const { return paths(vertices_[v], vertices_[w]); }

  /// Vertex ids in Kahn order, always taking the smallest available id.
  const std::vector<int>& topological_order() const { return topo_; }
  std::vector<int> reverse_topological_order() const { return {topo_.rbegin(), topo_.rend()}; }

  Quiver opposite() const {
    std::vector<Arrow> rev;
    for (const auto& a : arrows_) rev.push_back({a.id, a.t, a.s});
    return Quiver(vertices_, rev);
  }

  bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

 private:
  void walk(std::size_t at, std::size_t goal, int v, int w, std::vector<std::size_t>& cur,
            std::vector<Path>& out) const {
    if (at == goal) out.push_back({v, w, cur});
    for (auto a : out_arrows(at)) {
      cur.push_back(a);
      walk(target(a), goal, v, w, cur, out);
      cur.pop_back();
    }
  }

  void compute_order() {
    std::vector<std::size_t> indeg(vertices_.size(), 0);
    for (std::size_t a = 0; a < arrows_.size(); ++a) ++indeg[target(a)];
    std::set<std::size_t> ready;  // vertex indices; index order = id order
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (indeg[v] == 0) ready.insert(v);
    while (!ready.empty()) {
      auto v = *ready.begin();
      ready.erase(ready.begin());
      topo_.push_back(vertices_[v]);
      for (auto a : out_arrows(v))
        if (--indeg[target(a)] == 0) ready.insert(target(a));
    }
    if (topo_.size() != vertices_.size()) throw InputError("quiver has a directed cycle");
  }

  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::map<int, std::size_t> vindex_;
  std::map<std::string, std::size_t> aindex_;
  std::map<std::size_t, std::vector<std::size_t>> out_, in_;
  std::vector<int> topo_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// One vertex, no arrows. Complexes of modules live over this quiver.
inline QuiverPtr point_quiver() {
  static const QuiverPtr q = std::make_shared<const Quiver>(std::vector<int>{0}, std::vector<Arrow>{});
  return q;
}

/// Named quivers: A1, A2 (1 -a-> 2), A3 (1 -a-> 2 -b-> 3),
/// and fork (1 -a-> 2, 1 -b-> 3).
inline QuiverPtr named_quiver(const std::string& name) {
  if (name == "A1") return std::make_shared<const Quiver>(std::vector<int>{1}, std::vector<Arrow>{});
  if (name == "A2") return std::make_shared<const Quiver>(std::vector<int>{1, 2}, std::vector<Arrow>{{"a", 1, 2}});
  if (name == "A3")
    return std::make_shared<const Quiver>(std::vector<int>{1, 2, 3}, std::vector<Arrow>{{"a", 1, 2}, {"b", 2, 3}});
  if (name == "fork")
    return std::make_shared<const Quiver>(std::vector<int>{1, 2, 3}, std::vector<Arrow>{{"a", 1, 2}, {"b", 1, 3}});
  if (name == "point") return point_quiver();
  throw InputError("unknown quiver name '" + name + "'");
}

}  // namespace qrep
