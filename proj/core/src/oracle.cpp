#include "hvortho/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace hvortho {

EnumerationResult enumerate_assignments(const LabeledGraph& g, const RotationSystem& rot,
                                        const OracleBudget& budget) {
  const FaceSet faces = faces_from_rotation(g, rot);
  const CornerClassification cls = classify_corners(g, faces);
  const int k = static_cast<int>(cls.free.size());
  if (k > budget.max_free_corners)
    throw Error(ErrorKind::BudgetExceeded, kNone,
                std::to_string(k) + " free corners exceed the budget of " +
                    std::to_string(budget.max_free_corners));

  EnumerationResult result;
  std::vector<int> angle = cls.fixed;
  std::vector<int> face_sum(static_cast<std::size_t>(faces.size()), 0);
  std::vector<int> face_open(static_cast<std::size_t>(faces.size()), 0);
  std::vector<int> vertex_sum(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> vertex_open(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> target(static_cast<std::size_t>(faces.size()));
  for (FaceId f = 0; f < faces.size(); ++f)
    target[f] = required_face_sum(faces.faces[f].degree(), faces.faces[f].outer);
  for (CornerId c = 0; c < static_cast<CornerId>(angle.size()); ++c) {
    FaceId f = faces.face_of_dart[c];
    VertexId v = head(g, c);
    if (cls.is_free(c)) {
      ++face_open[f];
      ++vertex_open[v];
    } else {
      face_sum[f] += angle[c];
      vertex_sum[v] += angle[c];
    }
  }
  const auto deg = g.degrees();
  for (FaceId f = 0; f < faces.size(); ++f)
    if (face_open[f] == 0 && face_sum[f] != target[f]) return result;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (deg[v] > 0 && vertex_open[v] == 0 && vertex_sum[v] != 4) return result;

  // Depth-first over free corners; a face or vertex is checked once all of
  // its free corners are set.
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == k) {
      ++result.tried;
      return true;
    }
    const CornerId c = cls.free[i];
    const FaceId f = faces.face_of_dart[c];
    const VertexId v = head(g, c);
    for (int value : {1, 3}) {
      angle[c] = value;
      face_sum[f] += value;
      vertex_sum[v] += value;
      --face_open[f];
      --vertex_open[v];
      bool ok = (face_open[f] > 0 || face_sum[f] == target[f]) &&
                (vertex_open[v] > 0 || vertex_sum[v] == 4);
      if (!ok) ++result.tried;
      if (ok && self(self, i + 1)) return true;
      face_sum[f] -= value;
      vertex_sum[v] -= value;
      ++face_open[f];
      ++vertex_open[v];
    }
    return false;
  };
  if (dfs(dfs, 0)) {
    result.exists = true;
    result.witness.angle = angle;
    verify_assignment(g, faces, result.witness);
  }
  return result;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

struct Box {
  std::int64_t x0, x1, y0, y1;
};

Box box_of(Point a, Point b) {
  return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

bool on_box(const Box& b, Point p) {
  return p.x >= b.x0 && p.x <= b.x1 && p.y >= b.y0 && p.y <= b.y1;
}

class GridSearch {
 public:
  GridSearch(const LabeledGraph& g, const OracleBudget& budget, GridSearchStats& stats)
      : g_(g), budget_(budget), stats_(stats), adj_(static_cast<std::size_t>(g.vertex_count())),
        xc_(static_cast<std::size_t>(g.vertex_count())),
        yc_(static_cast<std::size_t>(g.vertex_count())),
        placed_(static_cast<std::size_t>(g.vertex_count()), false) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      adj_[g.edge(e).u].push_back({g.edge(e).v, e});
      adj_[g.edge(e).v].push_back({g.edge(e).u, e});
    }
  }

  // Same-axis classes. False when some class cannot be drawn on one line.
  bool build_classes() {
    const int n = g_.vertex_count();
    UnionFind xs(n), ys(n);
    std::vector<int> hdeg(static_cast<std::size_t>(n), 0), vdeg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g_.edges()) {
      auto& deg = e.label == Label::H ? hdeg : vdeg;
      if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
      // A cycle of parallel edges cannot be drawn.
      if (!(e.label == Label::H ? ys : xs).unite(e.u, e.v)) return false;
    }
    for (VertexId v = 0; v < n; ++v) {
      xc_[v] = xs.find(v);
      yc_[v] = ys.find(v);
    }
    std::vector<std::pair<int, int>> both(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) both[v] = {xc_[v], yc_[v]};
    std::sort(both.begin(), both.end());
    return std::adjacent_find(both.begin(), both.end()) == both.end();
  }

  // Searches one connected component; fills pos for its vertices.
  bool solve(const std::vector<VertexId>& component, std::vector<Point>& pos) {
    order_ = placement_order(component);
    xlev_.assign(static_cast<std::size_t>(g_.vertex_count()), -1);
    ylev_.assign(static_cast<std::size_t>(g_.vertex_count()), -1);
    nx_ = ny_ = 0;
    max_levels_ = budget_.max_grid > 0 ? budget_.max_grid : static_cast<int>(component.size());
    classes_.clear();
    for (VertexId v : component) {
      classes_.push_back(xc_[v]);
      if (yc_[v] != xc_[v]) classes_.push_back(yc_[v]);
    }
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
    edges_.clear();
    placed_list_.clear();
    if (!place(0)) return false;
    for (VertexId v : component) pos[v] = point(v);
    return true;
  }

 private:
  struct Option {
    int level;
    bool fresh;
  };

  Point point(VertexId v) const { return {xlev_[xc_[v]], ylev_[yc_[v]]}; }

  std::vector<VertexId> placement_order(const std::vector<VertexId>& component) const {
    std::vector<VertexId> order;
    std::vector<int> placed_nbrs(static_cast<std::size_t>(g_.vertex_count()), 0);
    std::vector<bool> taken(static_cast<std::size_t>(g_.vertex_count()), false);
    std::vector<bool> xfixed(static_cast<std::size_t>(g_.vertex_count()), false);
    std::vector<bool> yfixed(static_cast<std::size_t>(g_.vertex_count()), false);
    for (std::size_t step = 0; step < component.size(); ++step) {
      VertexId best = kNone;
      std::tuple<int, int, int> best_key{-1, -1, -1};
      for (VertexId v : component) {
        if (taken[v]) continue;
        int fixed = static_cast<int>(xfixed[xc_[v]]) + static_cast<int>(yfixed[yc_[v]]);
        std::tuple<int, int, int> key{placed_nbrs[v], fixed, static_cast<int>(adj_[v].size())};
        if (best == kNone || key > best_key) {
          best = v;
          best_key = key;
        }
      }
      taken[best] = true;
      xfixed[xc_[best]] = yfixed[yc_[best]] = true;
      for (auto [u, e] : adj_[best]) ++placed_nbrs[u];
      order.push_back(best);
    }
    return order;
  }

  std::vector<Option> options(int level, int count) const {
    std::vector<Option> out;
    if (level >= 0) {
      out.push_back({level, false});
      return out;
    }
    for (int l = 0; l < count; ++l) out.push_back({l, false});
    if (count + 1 <= max_levels_) {
      // The first split of an axis is taken in one direction only; the
      // mirrored drawing covers the other.
      if (count == 1) out.push_back({1, true});
      else
        for (int j = 0; j <= count; ++j) out.push_back({j, true});
    }
    return out;
  }

  void apply(std::vector<int>& lev, int& count, int cls, Option o) {
    if (o.fresh) {
      for (int c : classes_)
        if (lev[c] >= o.level) ++lev[c];
      ++count;
    }
    lev[cls] = o.level;
  }

  void undo(std::vector<int>& lev, int& count, int cls, Option o) {
    lev[cls] = -1;
    if (o.fresh) {
      for (int c : classes_)
        if (lev[c] > o.level) --lev[c];
      --count;
    }
  }

  bool segment_pair_ok(EdgeId a, EdgeId b) const {
    const Edge& ea = g_.edge(a);
    const Edge& eb = g_.edge(b);
    Box A = box_of(point(ea.u), point(ea.v));
    Box B = box_of(point(eb.u), point(eb.v));
    Box I{std::max(A.x0, B.x0), std::min(A.x1, B.x1), std::max(A.y0, B.y0), std::min(A.y1, B.y1)};
    if (I.x0 > I.x1 || I.y0 > I.y1) return true;
    VertexId shared = kNone;
    if (ea.u == eb.u || ea.u == eb.v) shared = ea.u;
    else if (ea.v == eb.u || ea.v == eb.v) shared = ea.v;
    if (shared == kNone) return false;
    Point p = point(shared);
    return I.x0 == I.x1 && I.y0 == I.y1 && I.x0 == p.x && I.y0 == p.y;
  }

  bool placement_ok(VertexId w, const std::vector<EdgeId>& fresh) const {
    const Point p = point(w);
    for (std::size_t i = 0; i < placed_list_.size(); ++i)
      if (point(placed_list_[i]) == p) return false;
    for (EdgeId e : edges_)
      if (on_box(box_of(point(g_.edge(e).u), point(g_.edge(e).v)), p)) return false;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      const Edge& ed = g_.edge(fresh[i]);
      Box b = box_of(point(ed.u), point(ed.v));
      for (VertexId z : placed_list_)
        if (z != ed.u && z != ed.v && on_box(b, point(z))) return false;
      for (EdgeId e : edges_)
        if (!segment_pair_ok(fresh[i], e)) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (!segment_pair_ok(fresh[i], fresh[j])) return false;
    }
    return true;
  }

  bool place(std::size_t k) {
    if (k == order_.size()) return true;
    if (budget_.max_nodes > 0 && stats_.nodes >= budget_.max_nodes)
      throw Error(ErrorKind::BudgetExceeded, kNone, "grid search node budget exhausted");
    const VertexId w = order_[k];
    std::vector<EdgeId> fresh;
    for (auto [u, e] : adj_[w])
      if (placed_[u]) fresh.push_back(e);
    for (Option ox : options(xlev_[xc_[w]], nx_)) {
      const bool xfree = xlev_[xc_[w]] < 0;
      if (xfree) apply(xlev_, nx_, xc_[w], ox);
      for (Option oy : options(ylev_[yc_[w]], ny_)) {
        const bool yfree = ylev_[yc_[w]] < 0;
        if (yfree) apply(ylev_, ny_, yc_[w], oy);
        ++stats_.nodes;
        if (placement_ok(w, fresh)) {
          placed_[w] = true;
          placed_list_.push_back(w);
          for (EdgeId e : fresh) edges_.push_back(e);
          if (place(k + 1)) return true;
          edges_.resize(edges_.size() - fresh.size());
          placed_list_.pop_back();
          placed_[w] = false;
        }
        if (yfree) undo(ylev_, ny_, yc_[w], oy);
      }
      if (xfree) undo(xlev_, nx_, xc_[w], ox);
    }
    return false;
  }

  const LabeledGraph& g_;
  const OracleBudget& budget_;
  GridSearchStats& stats_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
  std::vector<int> xc_, yc_;
  std::vector<bool> placed_;
  std::vector<VertexId> placed_list_;
  std::vector<VertexId> order_;
  std::vector<int> classes_;
  std::vector<int> xlev_, ylev_;
  int nx_ = 0, ny_ = 0, max_levels_ = 0;
  std::vector<EdgeId> edges_;
};

}  // namespace

std::optional<Drawing> grid_search_drawing(const LabeledGraph& g, const OracleBudget& budget,
                                           GridSearchStats* stats) {
  validate_graph(g);
  if (g.vertex_count() > budget.max_vertices)
    throw Error(ErrorKind::BudgetExceeded, kNone,
                std::to_string(g.vertex_count()) + " vertices exceed the budget of " +
                    std::to_string(budget.max_vertices));
  GridSearchStats local;
  GridSearchStats& st = stats ? *stats : local;
  st = {};
  GridSearch search(g, budget, st);
  if (!search.build_classes()) {
    st.prechecked_out = true;
    return std::nullopt;
  }

  const int n = g.vertex_count();
  UnionFind comp(n);
  for (const Edge& e : g.edges()) comp.unite(e.u, e.v);
  std::vector<std::vector<VertexId>> components;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (VertexId v = 0; v < n; ++v) {
    int r = comp.find(v);
    if (index[r] < 0) {
      index[r] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[index[r]].push_back(v);
  }

  Drawing d;
  d.pos.assign(static_cast<std::size_t>(n), Point{});
  std::int64_t offset = 0;
  for (const auto& component : components) {
    if (!search.solve(component, d.pos)) return std::nullopt;
    std::int64_t width = 0;
    for (VertexId v : component) {
      width = std::max(width, d.pos[v].x + 1);
      d.pos[v].x += offset;
    }
    offset += width;
  }
  return normalize(d);
}

}  // namespace hvortho
