#pragma once

// Shared fixtures for the test binaries: small graph builders and
// embeddings derived from explicit coordinates.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hvortho/graph.hpp"

namespace testing_support {

using namespace hvortho;

inline Label label_from(char c) { return c == 'H' ? Label::H : Label::V; }

/// Edges as (u, v, 'H'|'V').
struct E {
  int u, v;
  char l;
};

inline LabeledGraph make_graph(int n, const std::vector<E>& edges) {
  LabeledGraph g(n);
  for (auto e : edges) g.add_edge(e.u, e.v, label_from(e.l));
  return g;
}

/// Clockwise neighbour order from a straight-line sketch, outer face given
/// by its boundary vertices.
inline RotationSystem rotation_from_sketch(const LabeledGraph& g,
                                           const std::vector<std::pair<double, double>>& xy,
                                           const std::vector<VertexId>& outer) {
  std::vector<std::vector<VertexId>> nb(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto ang = [&](VertexId u) {
      return std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first);
    };
    std::sort(nb[v].begin(), nb[v].end(), [&](VertexId a, VertexId b) { return ang(a) > ang(b); });
  }
  RotationSystem rot = RotationSystem::from_neighbors(g, nb);
  rot.outer_dart = find_face_dart(g, rot, outer);
  return rot;
}

/// Cycle 0..k-1; bit i of mask labels edge (i, i+1) V, otherwise H.
inline LabeledGraph cycle_graph(int k, unsigned mask) {
  LabeledGraph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k, (mask >> i) & 1 ? Label::V : Label::H);
  return g;
}

inline LabeledGraph cycle_graph(const std::string& labels) {
  LabeledGraph g(static_cast<int>(labels.size()));
  const int k = static_cast<int>(labels.size());
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k, label_from(labels[i]));
  return g;
}

/// Vertices on a circle counter-clockwise.
inline std::vector<std::pair<double, double>> circle_sketch(int k) {
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < k; ++i) {
    double t = 2 * M_PI * i / k;
    xy.push_back({std::cos(t), std::sin(t)});
  }
  return xy;
}

inline std::vector<VertexId> iota_vertices(int k) {
  std::vector<VertexId> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[i] = i;
  return v;
}

/// Cycle drawn counter-clockwise; the outer boundary is listed clockwise.
inline RotationSystem cycle_rotation(const LabeledGraph& g) {
  auto outer = iota_vertices(g.vertex_count());
  std::reverse(outer.begin() + 1, outer.end());
  return rotation_from_sketch(g, circle_sketch(g.vertex_count()), outer);
}

/// Two poles 0 and 1 joined by three paths of length two through 2, 3, 4.
inline LabeledGraph theta_graph(unsigned mask) {
  LabeledGraph g(5);
  const int pairs[6][2] = {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}};
  for (int i = 0; i < 6; ++i) g.add_edge(pairs[i][0], pairs[i][1], (mask >> i) & 1 ? Label::V : Label::H);
  return g;
}

inline RotationSystem theta_rotation(const LabeledGraph& g) {
  return rotation_from_sketch(g, {{0, 0}, {2, 0}, {1, 1}, {1, 0}, {1, -1}}, {0, 4, 1, 2});
}

/// K4: outer triangle 0,1,2 and centre 3.
inline LabeledGraph k4_graph(unsigned mask) {
  LabeledGraph g(4);
  const int pairs[6][2] = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  for (int i = 0; i < 6; ++i) g.add_edge(pairs[i][0], pairs[i][1], (mask >> i) & 1 ? Label::V : Label::H);
  return g;
}

inline RotationSystem k4_rotation(const LabeledGraph& g) {
  return rotation_from_sketch(g, {{0, 0}, {2, 0}, {1, 2}, {1, 0.7}}, {0, 1, 2});
}

}  // namespace testing_support
