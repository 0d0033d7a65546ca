#include "hvortho/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

namespace hvortho {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::ParallelEdge: return "ParallelEdge";
    case ErrorKind::BadVertexId: return "BadVertexId";
    case ErrorKind::BadRotation: return "BadRotation";
    case ErrorKind::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorKind::MissingOuterFace: return "MissingOuterFace";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotBiconnected: return "NotBiconnected";
    case ErrorKind::NotOuterplanar: return "NotOuterplanar";
    case ErrorKind::LabelDegreeViolation: return "LabelDegreeViolation";
    case ErrorKind::NonAlternatingDegree4: return "NonAlternatingDegree4";
    case ErrorKind::InfeasibleFace: return "InfeasibleFace";
    case ErrorKind::GlobalImbalance: return "GlobalImbalance";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::VertexSumViolation: return "VertexSumViolation";
    case ErrorKind::FaceSumViolation: return "FaceSumViolation";
    case ErrorKind::InconsistentPropagation: return "InconsistentPropagation";
    case ErrorKind::CyclicConstraint: return "CyclicConstraint";
    case ErrorKind::ConditionsViolated: return "ConditionsViolated";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

std::vector<std::vector<EdgeId>> LabeledGraph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(static_cast<std::size_t>(n_));
  for (EdgeId e = 0; e < edge_count(); ++e) {
    inc[edges_[e].u].push_back(e);
    inc[edges_[e].v].push_back(e);
  }
  return inc;
}

std::vector<int> LabeledGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

EdgeId LabeledGraph::find_edge(VertexId u, VertexId v) const {
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
  }
  return kNone;
}

void validate_graph(const LabeledGraph& g) {
  if (g.vertex_count() < 0) throw Error(ErrorKind::BadVertexId, kNone, "negative vertex count");
  std::map<std::pair<int, int>, EdgeId> seen;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (VertexId x : {ed.u, ed.v}) {
      if (x < 0 || x >= g.vertex_count())
        throw Error(ErrorKind::BadVertexId, e,
                    "edge " + std::to_string(e) + " references vertex " + std::to_string(x));
    }
    if (ed.u == ed.v)
      throw Error(ErrorKind::SelfLoop, e, "edge " + std::to_string(e) + " is a self-loop");
    auto key = std::minmax(ed.u, ed.v);
    auto [it, inserted] = seen.emplace(std::pair<int, int>(key.first, key.second), e);
    if (!inserted)
      throw Error(ErrorKind::ParallelEdge, e,
                  "edges " + std::to_string(it->second) + " and " + std::to_string(e) +
                      " join the same pair (" + std::to_string(key.first) + "," +
                      std::to_string(key.second) + ")");
  }
}

namespace {

std::vector<int> component_ids(const LabeledGraph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), kNone);
  auto inc = g.incidence();
  int c = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != kNone) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : inc[v]) {
        const Edge& ed = g.edge(e);
        VertexId w = ed.u == v ? ed.v : ed.u;
        if (comp[w] == kNone) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

}  // namespace

int connected_components(const LabeledGraph& g) {
  int c = 0;
  component_ids(g, &c);
  return c;
}

bool is_biconnected(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n < 3 || connected_components(g) != 1) return false;
  auto inc = g.incidence();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool ok = true;
  // Iterative Tarjan articulation-point search rooted at 0.
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, kNone, 0}};
  disc[0] = low[0] = timer++;
  int root_children = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < inc[f.v].size()) {
      EdgeId e = inc[f.v][f.next++];
      if (e == f.parent_edge) continue;
      const Edge& ed = g.edge(e);
      VertexId w = ed.u == f.v ? ed.v : ed.u;
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, e, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (p.v != 0 && low[done.v] >= disc[p.v]) ok = false;
      }
    }
  }
  return ok && root_children <= 1;
}

std::vector<std::vector<EdgeId>> biconnected_blocks(const LabeledGraph& g) {
  const int n = g.vertex_count();
  auto inc = g.incidence();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<EdgeId> edge_stack;
  int timer = 0;
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < inc[f.v].size()) {
        EdgeId e = inc[f.v][f.next++];
        if (e == f.parent_edge) continue;
        const Edge& ed = g.edge(e);
        VertexId w = ed.u == f.v ? ed.v : ed.u;
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (stack.empty()) break;
        Frame& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (low[done.v] >= disc[p.v]) {
          std::vector<EdgeId> block;
          while (true) {
            EdgeId e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == done.parent_edge) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

RotationSystem RotationSystem::from_neighbors(const LabeledGraph& g,
                                              const std::vector<std::vector<VertexId>>& neighbors) {
  if (static_cast<int>(neighbors.size()) != g.vertex_count())
    throw Error(ErrorKind::BadRotation, kNone, "rotation must list every vertex");
  std::map<std::pair<int, int>, EdgeId> lookup;
  for (EdgeId e = 0; e < g.edge_count(); ++e) lookup[{g.edge(e).u, g.edge(e).v}] = e;
  auto deg = g.degrees();
  RotationSystem rot;
  rot.around.resize(neighbors.size());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(neighbors[v].size()) != deg[v])
      throw Error(ErrorKind::BadRotation, v,
                  "rotation of vertex " + std::to_string(v) + " has wrong length");
    for (VertexId w : neighbors[v]) {
      DartId d = kNone;
      if (auto it = lookup.find({v, w}); it != lookup.end()) d = dart_of(it->second, false);
      else if (auto jt = lookup.find({w, v}); jt != lookup.end()) d = dart_of(jt->second, true);
      if (d == kNone || std::find(rot.around[v].begin(), rot.around[v].end(), d) != rot.around[v].end())
        throw Error(ErrorKind::BadRotation, v,
                    "rotation of vertex " + std::to_string(v) + " lists non-neighbour or repeats " +
                        std::to_string(w));
      rot.around[v].push_back(d);
    }
  }
  return rot;
}

std::vector<std::vector<VertexId>> RotationSystem::neighbor_lists(const LabeledGraph& g) const {
  std::vector<std::vector<VertexId>> out(around.size());
  for (std::size_t v = 0; v < around.size(); ++v)
    for (DartId d : around[v]) out[v].push_back(head(g, d));
  return out;
}

RotationSystem RotationSystem::mirrored() const {
  RotationSystem m = *this;
  for (auto& r : m.around) std::reverse(r.begin(), r.end());
  // The face left of d becomes the face right of d.
  if (outer_dart != kNone) m.outer_dart = twin(outer_dart);
  return m;
}

namespace {

// next[d] for every dart, after checking each dart sits once at its tail.
std::vector<DartId> successor_table(const LabeledGraph& g, const RotationSystem& rot) {
  const int darts = 2 * g.edge_count();
  if (static_cast<int>(rot.around.size()) != g.vertex_count())
    throw Error(ErrorKind::BadRotation, kNone, "rotation must list every vertex");
  std::vector<int> pos(static_cast<std::size_t>(darts), kNone);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& r = rot.around[v];
    for (std::size_t i = 0; i < r.size(); ++i) {
      DartId d = r[i];
      if (d < 0 || d >= darts || tail(g, d) != v || pos[d] != kNone)
        throw Error(ErrorKind::BadRotation, v,
                    "rotation of vertex " + std::to_string(v) + " holds a foreign dart");
      pos[d] = static_cast<int>(i);
    }
  }
  for (DartId d = 0; d < darts; ++d)
    if (pos[d] == kNone)
      throw Error(ErrorKind::BadRotation, tail(g, d),
                  "dart " + std::to_string(d) + " missing from rotation");
  std::vector<DartId> next(static_cast<std::size_t>(darts));
  for (DartId d = 0; d < darts; ++d) {
    DartId t = twin(d);
    const auto& r = rot.around[tail(g, t)];
    next[d] = r[(static_cast<std::size_t>(pos[t]) + 1) % r.size()];
  }
  return next;
}

}  // namespace

FaceSet faces_from_rotation(const LabeledGraph& g, const RotationSystem& rot) {
  FaceSet fs;
  fs.next = successor_table(g, rot);
  const int darts = 2 * g.edge_count();
  fs.face_of_dart.assign(static_cast<std::size_t>(darts), kNone);
  for (DartId s = 0; s < darts; ++s) {
    if (fs.face_of_dart[s] != kNone) continue;
    Face f;
    DartId d = s;
    do {
      fs.face_of_dart[d] = fs.size();
      f.darts.push_back(d);
      d = fs.next[d];
    } while (d != s);
    fs.faces.push_back(std::move(f));
  }

  // Euler per component that carries edges: V - E + F = 2.
  int ncomp = 0;
  auto comp = component_ids(g, &ncomp);
  std::vector<long> chi(static_cast<std::size_t>(ncomp), 0);
  std::vector<bool> has_edge(static_cast<std::size_t>(ncomp), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) chi[comp[v]] += 1;
  for (const Edge& e : g.edges()) {
    chi[comp[e.u]] -= 1;
    has_edge[comp[e.u]] = true;
  }
  for (const Face& f : fs.faces) chi[comp[tail(g, f.darts.front())]] += 1;
  for (int c = 0; c < ncomp; ++c)
    if (has_edge[c] && chi[c] != 2)
      throw Error(ErrorKind::NonPlanarRotation, c,
                  "rotation is not planar (Euler characteristic " + std::to_string(chi[c]) + ")");

  if (g.edge_count() > 0) {
    if (rot.outer_dart == kNone || rot.outer_dart >= darts)
      throw Error(ErrorKind::MissingOuterFace, kNone, "no outer face designated");
    fs.outer = fs.face_of_dart[rot.outer_dart];
    fs.faces[fs.outer].outer = true;
  }
  return fs;
}

DartId find_face_dart(const LabeledGraph& g, const RotationSystem& rot,
                      const std::vector<VertexId>& boundary) {
  if (boundary.size() < 2) return kNone;
  std::vector<DartId> next;
  try {
    next = successor_table(g, rot);
  } catch (const Error&) {
    return kNone;
  }
  auto matches = [&](const std::vector<VertexId>& seq) -> DartId {
    for (DartId d = 0; d < 2 * g.edge_count(); ++d) {
      if (tail(g, d) != seq[0] || head(g, d) != seq[1]) continue;
      std::size_t i = 0;
      DartId x = d;
      bool ok = true;
      do {
        if (i >= seq.size() || tail(g, x) != seq[i]) {
          ok = false;
          break;
        }
        ++i;
        x = next[x];
      } while (x != d);
      if (ok && i == seq.size()) return d;
    }
    return kNone;
  };
  if (DartId d = matches(boundary); d != kNone) return d;
  std::vector<VertexId> rev(boundary.rbegin(), boundary.rend());
  return matches(rev);
}

std::vector<Corner> corners(const LabeledGraph& g, const FaceSet& faces) {
  std::vector<Corner> out(faces.next.size());
  for (DartId d = 0; d < static_cast<DartId>(faces.next.size()); ++d)
    out[d] = Corner{head(g, d), faces.face_of_dart[d], d, faces.next[d]};
  return out;
}

ConditionReport check_label_degrees(const LabeledGraph& g, const RotationSystem& rot) {
  ConditionReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& r = rot.around[v];
    int h = 0;
    for (DartId d : r) h += label_of(g, d) == Label::H;
    int vv = static_cast<int>(r.size()) - h;
    if (h > 2 || vv > 2) {
      report.violations.push_back({"label-degree", "vertex", v,
                                   std::to_string(h) + " H and " + std::to_string(vv) + " V edges"});
      continue;
    }
    if (r.size() == 4) {
      for (std::size_t i = 0; i < 4; ++i) {
        if (label_of(g, r[i]) == label_of(g, r[(i + 1) % 4])) {
          report.violations.push_back(
              {"label-degree", "vertex", v, "degree-4 labels do not alternate in rotation order"});
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace hvortho
