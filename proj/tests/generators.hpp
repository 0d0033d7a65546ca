#pragma once

// Instance families for the outerplanar and performance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hvortho/graph.hpp"
#include "hvortho/outerplanar.hpp"

namespace testing_support {

using namespace hvortho;

using Chords = std::vector<std::pair<int, int>>;

/// Non-crossing chord sets of a convex n-gon with corners 0..n-1.
inline std::vector<Chords> polygon_dissections(int n) {
  Chords all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) all.push_back({a, b});
  auto cross = [](std::pair<int, int> x, std::pair<int, int> y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  };
  std::vector<Chords> out;
  Chords cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == all.size()) {
      out.push_back(cur);
      return;
    }
    rec(i + 1);
    for (auto c : cur)
      if (cross(c, all[i])) return;
    cur.push_back(all[i]);
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

/// One representative per orbit under rotations and reflections of the n-gon.
inline std::vector<Chords> dissections_up_to_symmetry(int n) {
  auto canon = [n](const Chords& c) {
    Chords best;
    bool first = true;
    for (int r = 0; r < n; ++r)
      for (int flip = 0; flip < 2; ++flip) {
        Chords t;
        for (auto [a, b] : c) {
          int x = flip ? (n - a) % n : a, y = flip ? (n - b) % n : b;
          x = (x + r) % n, y = (y + r) % n;
          t.push_back({std::min(x, y), std::max(x, y)});
        }
        std::sort(t.begin(), t.end());
        if (first || t < best) best = t, first = false;
      }
    return best;
  };
  std::set<Chords> seen;
  std::vector<Chords> out;
  for (const Chords& c : polygon_dissections(n))
    if (seen.insert(canon(c)).second) out.push_back(c);
  return out;
}

/// Cycle edges (i, i+1) first, then the chords; bit i of mask labels edge i
/// V. `perm` renames the polygon corners.
inline LabeledGraph dissection_graph(int n, const Chords& chords, std::uint32_t mask,
                                     const std::vector<int>& perm = {}) {
  auto name = [&](int i) { return perm.empty() ? i : perm[i]; };
  LabeledGraph g(n);
  int i = 0;
  auto lab = [&]() { return (mask >> i++) & 1 ? Label::V : Label::H; };
  for (int k = 0; k < n; ++k) g.add_edge(name(k), name((k + 1) % n), lab());
  for (auto [a, b] : chords) g.add_edge(name(a), name(b), lab());
  return g;
}

inline int dissection_edges(int n, const Chords& chords) { return n + static_cast<int>(chords.size()); }

/// k unit squares in a row: H rails 0..k and k+1..2k+1, V rungs.
inline LabeledGraph ladder(int k) {
  LabeledGraph g(2 * (k + 1));
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, i + 1, Label::H);
    g.add_edge(k + 1 + i, k + 2 + i, Label::H);
  }
  for (int i = 0; i <= k; ++i) g.add_edge(i, k + 1 + i, Label::V);
  return g;
}

/// Ladder whose top rail is a staircase: t_i -H- s_i -V- t_{i+1}. Shared
/// rungs continue a vertical step on one side and meet H rails on the other.
inline LabeledGraph bent_ladder(int k) {
  auto t = [](int i) { return 2 * i; };
  auto b = [](int i) { return 2 * i + 1; };
  auto s = [k](int i) { return 2 * (k + 1) + i; };
  LabeledGraph g(3 * k + 2);
  for (int i = 0; i <= k; ++i) g.add_edge(t(i), b(i), Label::V);
  for (int i = 0; i < k; ++i) {
    g.add_edge(t(i), s(i), Label::H);
    g.add_edge(s(i), t(i + 1), Label::V);
    g.add_edge(b(i), b(i + 1), Label::H);
  }
  return g;
}

/// Central 2k-gon with alternating labels and a rectangle on each of its k
/// V edges; k + 1 faces in a star around the centre.
inline LabeledGraph fan(int k) {
  const int c = 2 * k;
  LabeledGraph g(c + 2 * k);
  for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c, i % 2 == 0 ? Label::H : Label::V);
  for (int j = 0; j < k; ++j) {
    const int i = 2 * j + 1;  // V edge (i, i+1)
    const int x = c + 2 * j, y = x + 1;
    g.add_edge(i, x, Label::H);
    g.add_edge(x, y, Label::V);
    g.add_edge(y, (i + 1) % c, Label::H);
  }
  return g;
}

/// Grows a biconnected outerplanar graph face by face, gluing each new face
/// on an outer edge and keeping it only when the graph stays drawable.
inline LabeledGraph random_glued(int faces, std::mt19937& rng) {
  struct Ed {
    int u, v;
    Label l;
  };
  std::vector<Ed> edges{{0, 1, Label::H}, {1, 2, Label::V}, {2, 3, Label::H}, {3, 0, Label::V}};
  std::vector<int> outer{0, 1, 2, 3};
  int n = 4;
  auto build = [&](const std::vector<Ed>& es, int nv) {
    LabeledGraph g(nv);
    for (auto e : es) g.add_edge(e.u, e.v, e.l);
    return g;
  };
  auto label_of_pair = [&](int u, int v) {
    for (auto e : edges)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.l;
    return Label::H;
  };
  int made = 1;
  for (int attempt = 0; made < faces && attempt < faces * 200; ++attempt) {
    const std::size_t at = rng() % outer.size();
    const int u = outer[at], w = outer[(at + 1) % outer.size()];
    const Label s = label_of_pair(u, w);
    std::vector<Label> path;
    if (rng() % 3) {
      path = {other(s), s, other(s)};
    } else {
      const int len = 3 + 2 * static_cast<int>(rng() % 2);
      for (int i = 0; i < len; ++i) path.push_back(rng() % 2 ? Label::H : Label::V);
    }
    std::vector<Ed> trial = edges;
    std::vector<int> fresh;
    int prev = u;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      fresh.push_back(n + static_cast<int>(i));
      trial.push_back({prev, fresh.back(), path[i]});
      prev = fresh.back();
    }
    trial.push_back({prev, w, path.back()});
    const int nv = n + static_cast<int>(fresh.size());
    LabeledGraph g = build(trial, nv);
    bool ok = false;
    try {
      ok = check_conditions(g).ok();
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) continue;
    edges = trial;
    n = nv;
    outer.insert(outer.begin() + static_cast<std::ptrdiff_t>(at) + 1, fresh.begin(), fresh.end());
    ++made;
  }
  return build(edges, n);
}

/// Connected subgraph of the w x h grid (random spanning tree plus each
/// remaining grid edge with probability `extra`), labelled by geometry and
/// embedded as drawn.
struct PlaneInstance {
  LabeledGraph graph;
  RotationSystem rot;
  std::vector<std::pair<int, int>> xy;
};

inline PlaneInstance grid_instance(int w, int h, double extra, std::mt19937& rng) {
  const int n = w * h;
  auto id = [w](int x, int y) { return y * w + x; };
  std::vector<std::pair<int, int>> cand;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) cand.push_back({id(x, y), id(x + 1, y)});
      if (y + 1 < h) cand.push_back({id(x, y), id(x, y + 1)});
    }
  std::shuffle(cand.begin(), cand.end(), rng);
  std::vector<int> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  std::bernoulli_distribution keep(extra);
  PlaneInstance inst;
  inst.graph = LabeledGraph(n);
  for (int v = 0; v < n; ++v) inst.xy.push_back({v % w, v / w});
  for (auto [a, b] : cand) {
    const bool joins = find(a) != find(b);
    if (joins) root[find(a)] = find(b);
    if (joins || keep(rng)) inst.graph.add_edge(a, b, b == a + 1 ? Label::H : Label::V);
  }
  // Clockwise from north: N, E, S, W.
  std::vector<std::vector<VertexId>> nb(static_cast<std::size_t>(n));
  for (const Edge& e : inst.graph.edges()) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  auto rank = [&](VertexId v, VertexId u) {
    const int dx = inst.xy[u].first - inst.xy[v].first, dy = inst.xy[u].second - inst.xy[v].second;
    return dy > 0 ? 0 : dx > 0 ? 1 : dy < 0 ? 2 : 3;
  };
  for (VertexId v = 0; v < n; ++v)
    std::sort(nb[v].begin(), nb[v].end(), [&](VertexId a, VertexId b) { return rank(v, a) < rank(v, b); });
  inst.rot = RotationSystem::from_neighbors(inst.graph, nb);
  // Vertex (0,0) has no west or south edge; the unbounded face is left of its
  // first dart clockwise from west.
  const DartId first = inst.rot.around[0].front();
  inst.rot.outer_dart = first;
  return inst;
}

}  // namespace testing_support
