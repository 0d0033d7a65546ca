#include "hvortho/validate.hpp"

#include <algorithm>
#include <numeric>

namespace hvortho {

std::optional<Direction> segment_direction(Point p, Point q) {
  if (p.y == q.y && p.x != q.x) return q.x > p.x ? Direction::East : Direction::West;
  if (p.x == q.x && p.y != q.y) return q.y > p.y ? Direction::North : Direction::South;
  return std::nullopt;
}

namespace {

struct Box {
  std::int64_t x0, x1, y0, y1;
};

Box box_of(Point a, Point b) {
  return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

// Rotation and outer-face checks for one chirality.
void check_rotation(const LabeledGraph& g, const Drawing& d, const RotationSystem& rot,
                    ValidationReport& r) {
  r.rotation_mismatches.clear();
  r.outer_face_ok = true;
  const int darts = 2 * g.edge_count();
  std::vector<std::optional<Direction>> dir(static_cast<std::size_t>(darts));
  for (DartId x = 0; x < darts; ++x) dir[x] = segment_direction(d.pos[tail(g, x)], d.pos[head(g, x)]);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& around = rot.around[v];
    if (around.empty()) continue;
    int total = 0;
    bool valid = true;
    for (std::size_t i = 0; i < around.size(); ++i) {
      auto a = dir[around[i]];
      auto b = dir[around[(i + 1) % around.size()]];
      if (!a || !b) {
        valid = false;
        break;
      }
      int s = clockwise_steps(*a, *b);
      if (around.size() > 1 && s == 4) valid = false;
      total += s;
    }
    if (!valid || total != 4) r.rotation_mismatches.push_back(v);
  }
  if (!r.rotation_mismatches.empty() || g.edge_count() == 0) {
    r.outer_face_ok = r.rotation_mismatches.empty();
    return;
  }
  FaceSet faces;
  try {
    faces = faces_from_rotation(g, rot);
  } catch (const Error&) {
    r.outer_face_ok = false;
    return;
  }
  const Face& outer = faces.faces[faces.outer];
  int sum = 0;
  for (DartId in : outer.darts) sum += clockwise_steps(*dir[twin(in)], *dir[faces.next[in]]);
  r.outer_face_ok = sum == required_face_sum(outer.degree(), true);
}

}  // namespace

ValidationReport validate_drawing(const LabeledGraph& g, const Drawing& d,
                                  const RotationSystem* rot, ValidateOptions opts) {
  ValidationReport r;
  const int n = g.vertex_count();
  const int m = g.edge_count();

  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    auto dir = segment_direction(d.pos[ed.u], d.pos[ed.v]);
    if (!dir || is_horizontal(*dir) != (ed.label == Label::H)) r.label_violations.push_back(e);
  }

  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return d.pos[a] < d.pos[b] || (d.pos[a] == d.pos[b] && a < b);
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (d.pos[order[i]] == d.pos[order[i - 1]])
      r.coincident_vertices.push_back({order[i - 1], order[i]});

  // Pairwise segment test, pruned by x-extent.
  std::vector<Box> boxes(static_cast<std::size_t>(m));
  std::vector<EdgeId> byx(static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) boxes[e] = box_of(d.pos[g.edge(e).u], d.pos[g.edge(e).v]);
  std::iota(byx.begin(), byx.end(), 0);
  std::sort(byx.begin(), byx.end(), [&](EdgeId a, EdgeId b) {
    return boxes[a].x0 < boxes[b].x0 || (boxes[a].x0 == boxes[b].x0 && a < b);
  });
  for (std::size_t i = 0; i < byx.size(); ++i) {
    EdgeId a = byx[i];
    const Box& A = boxes[a];
    for (std::size_t j = i + 1; j < byx.size(); ++j) {
      EdgeId b = byx[j];
      const Box& B = boxes[b];
      if (B.x0 > A.x1) break;
      const Box I{std::max(A.x0, B.x0), std::min(A.x1, B.x1), std::max(A.y0, B.y0),
                  std::min(A.y1, B.y1)};
      if (I.x0 > I.x1 || I.y0 > I.y1) continue;
      const Edge& ea = g.edge(a);
      const Edge& eb = g.edge(b);
      VertexId shared = kNone;
      if (ea.u == eb.u || ea.u == eb.v) shared = ea.u;
      else if (ea.v == eb.u || ea.v == eb.v) shared = ea.v;
      bool ok = false;
      if (shared != kNone) {
        Point p = d.pos[shared];
        ok = I.x0 == I.x1 && I.y0 == I.y1 && I.x0 == p.x && I.y0 == p.y;
      }
      if (!ok) r.crossings.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(r.crossings.begin(), r.crossings.end());

  auto deg = g.degrees();
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] != 0) continue;
    for (EdgeId e = 0; e < m; ++e) {
      const Box& B = boxes[e];
      Point p = d.pos[v];
      if (p.x >= B.x0 && p.x <= B.x1 && p.y >= B.y0 && p.y <= B.y1) r.vertex_on_edge.push_back({v, e});
    }
  }

  if (rot) {
    check_rotation(g, d, *rot, r);
    if (!r.rotation_ok() && opts.allow_mirror) {
      ValidationReport alt;
      check_rotation(g, d, rot->mirrored(), alt);
      if (alt.rotation_ok()) {
        r.rotation_mismatches.clear();
        r.outer_face_ok = true;
        r.mirrored = true;
      }
    }
  }
  return r;
}

namespace {

bool on_outer(const FaceSet& faces, EdgeId e) {
  return faces.face_of_dart[2 * e] == faces.outer || faces.face_of_dart[2 * e + 1] == faces.outer;
}

// Position of edge e within the walk of `face`, or kNone.
int position_in(const FaceSet& faces, FaceId face, EdgeId e) {
  const auto& w = faces.faces[face].darts;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (edge_of(w[i]) == e) return static_cast<int>(i);
  return kNone;
}

}  // namespace

bool is_critical(const LabeledGraph& g, const FaceSet& faces, FaceId face, EdgeId e) {
  int i = position_in(faces, face, e);
  if (i == kNone || on_outer(faces, e)) return false;
  const auto& w = faces.faces[face].darts;
  const std::size_t k = w.size();
  if (k < 3) return false;
  Label before = label_of(g, w[(i + k - 1) % k]);
  Label after = label_of(g, w[(i + 1) % k]);
  return before == after && before != g.edge(e).label;
}

bool check_lemma_bc(const LabeledGraph& g, const Drawing& d, const FaceSet& faces, FaceId face,
                    EdgeId e) {
  if (!is_critical(g, faces, face, e))
    throw Error(ErrorKind::NotCritical, e,
                "edge " + std::to_string(e) + " is not critical in face f" + std::to_string(face));
  const auto& w = faces.faces[face].darts;
  const std::size_t k = w.size();
  const std::size_t i = static_cast<std::size_t>(position_in(faces, face, e));
  DartId self = w[i];
  Point a = d.pos[tail(g, w[(i + k - 1) % k])];
  Point b = d.pos[tail(g, self)];
  Point dd = d.pos[head(g, w[(i + 1) % k])];
  if (g.edge(e).label == Label::H) {
    int sa = sign(a.y - b.y), sd = sign(dd.y - b.y);
    return sa != 0 && sa == sd;
  }
  int sa = sign(a.x - b.x), sd = sign(dd.x - b.x);
  return sa != 0 && sa == sd;
}

std::vector<EdgeId> lemma_bc_violations(const LabeledGraph& g, const Drawing& d, const FaceSet& faces) {
  std::vector<EdgeId> out;
  for (FaceId f = 0; f < faces.size(); ++f) {
    if (faces.faces[f].outer) continue;
    for (DartId x : faces.faces[f].darts)
      if (is_critical(g, faces, f, edge_of(x)) && !check_lemma_bc(g, d, faces, f, edge_of(x)))
        out.push_back(edge_of(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_side_path_parity(const LabeledGraph& g, const Drawing& d, const FaceSet& faces,
                            FaceId face) {
  const auto& w = faces.faces[face].darts;
  const std::size_t k = w.size();
  auto coord = [&](DartId x, Label l) {
    Point p = d.pos[tail(g, x)];
    return l == Label::H ? p.y : p.x;
  };
  for (Label extreme : {Label::H, Label::V}) {
    std::size_t hi = k, lo = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (label_of(g, w[i]) != extreme) continue;
      if (hi == k || coord(w[i], extreme) > coord(w[hi], extreme)) hi = i;
      if (lo == k || coord(w[i], extreme) < coord(w[lo], extreme)) lo = i;
    }
    if (hi == k || coord(w[hi], extreme) == coord(w[lo], extreme)) continue;
    for (auto [from, to] : {std::pair{hi, lo}, std::pair{lo, hi}}) {
      int transverse = 0, critical = 0;
      for (std::size_t i = (from + 1) % k; i != to; i = (i + 1) % k) {
        if (label_of(g, w[i]) == extreme) continue;
        ++transverse;
        critical += is_critical(g, faces, face, edge_of(w[i]));
      }
      if (transverse > 0 && critical == transverse && critical % 2 == 0) return false;
    }
  }
  return true;
}

}  // namespace hvortho
