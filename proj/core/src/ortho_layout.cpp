#include "hvortho/ortho_layout.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace hvortho {

const char* to_string(Direction d) {
  switch (d) {
    case Direction::East: return "E";
    case Direction::North: return "N";
    case Direction::West: return "W";
    case Direction::South: return "S";
  }
  return "?";
}

Drawing normalize(const Drawing& d) {
  std::vector<std::int64_t> xs, ys;
  for (const Point& p : d.pos) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  Drawing out;
  out.pos.reserve(d.pos.size());
  for (const Point& p : d.pos) {
    out.pos.push_back({std::lower_bound(xs.begin(), xs.end(), p.x) - xs.begin(),
                       std::lower_bound(ys.begin(), ys.end(), p.y) - ys.begin()});
  }
  return out;
}

std::vector<Direction> orient_darts(const LabeledGraph& g, const FaceSet& faces,
                                    const AngleAssignment& a) {
  const int darts = 2 * g.edge_count();
  std::vector<int> dir(static_cast<std::size_t>(darts), kNone);
  auto assign = [&](DartId d, int value, std::queue<DartId>& q) {
    value = ((value % 4) + 4) % 4;
    if (dir[d] == kNone) {
      dir[d] = value;
      q.push(d);
    } else if (dir[d] != value) {
      throw Error(ErrorKind::InconsistentPropagation, d,
                  "direction propagation does not close at dart " + std::to_string(d));
    }
  };
  for (DartId seed = 0; seed < darts; ++seed) {
    if (dir[seed] != kNone) continue;
    std::queue<DartId> q;
    assign(seed, label_of(g, seed) == Label::H ? 0 : 1, q);
    while (!q.empty()) {
      DartId d = q.front();
      q.pop();
      assign(twin(d), dir[d] + 2, q);
      // Corner entered by d: out direction = twin direction turned clockwise by the angle.
      assign(faces.next[d], dir[d] + 2 - a.angle[d], q);
    }
  }
  std::vector<Direction> out(static_cast<std::size_t>(darts));
  for (DartId d = 0; d < darts; ++d) {
    out[d] = static_cast<Direction>(dir[d]);
    bool horizontal = is_horizontal(out[d]);
    if (horizontal != (label_of(g, d) == Label::H))
      throw Error(ErrorKind::InconsistentPropagation, d,
                  "dart " + std::to_string(d) + " direction contradicts its label");
  }
  return out;
}

OrthoRep::OrthoRep(const LabeledGraph& g, const std::vector<Direction>& dirs)
    : original_vertices_(g.vertex_count()) {
  ports_.assign(static_cast<std::size_t>(g.vertex_count()), {kNone, kNone, kNone, kNone});
  tail_.resize(static_cast<std::size_t>(2 * g.edge_count()));
  dir_.resize(tail_.size());
  for (DartId d = 0; d < dart_count(); ++d) {
    tail_[d] = hvortho::tail(g, d);
    dir_[d] = dirs[d];
    DartId& slot = ports_[tail_[d]][static_cast<int>(dirs[d])];
    if (slot != kNone)
      throw Error(ErrorKind::InconsistentPropagation, tail_[d],
                  "two darts leave vertex " + std::to_string(tail_[d]) + " in one direction");
    slot = d;
  }
}

int OrthoRep::degree(VertexId v) const {
  return static_cast<int>(std::count_if(ports_[v].begin(), ports_[v].end(),
                                        [](DartId d) { return d != kNone; }));
}

DartId OrthoRep::next(DartId d) const {
  VertexId v = head(d);
  Direction back = dir_[twin(d)];
  for (int s = 1; s <= 4; ++s) {
    DartId out = ports_[v][static_cast<int>(rotate(back, -s))];
    if (out != kNone) return out;
  }
  return kNone;
}

int OrthoRep::angle(DartId in) const {
  return clockwise_steps(dir_[twin(in)], dir_[next(in)]);
}

std::vector<std::vector<DartId>> OrthoRep::face_walks() const {
  std::vector<std::vector<DartId>> walks;
  std::vector<bool> seen(tail_.size(), false);
  for (DartId s = 0; s < dart_count(); ++s) {
    if (seen[s]) continue;
    std::vector<DartId> w;
    DartId d = s;
    do {
      seen[d] = true;
      w.push_back(d);
      d = next(d);
    } while (d != s);
    walks.push_back(std::move(w));
  }
  return walks;
}

VertexId OrthoRep::add_vertex() {
  ports_.push_back({kNone, kNone, kNone, kNone});
  return vertex_count() - 1;
}

DartId OrthoRep::add_edge(VertexId u, VertexId v, Direction dir) {
  DartId d = dart_count();
  if (ports_[u][static_cast<int>(dir)] != kNone || ports_[v][static_cast<int>(opposite(dir))] != kNone)
    throw Error(ErrorKind::Internal, u, "port already occupied while refining");
  tail_.push_back(u);
  tail_.push_back(v);
  dir_.push_back(dir);
  dir_.push_back(opposite(dir));
  ports_[u][static_cast<int>(dir)] = d;
  ports_[v][static_cast<int>(opposite(dir))] = twin(d);
  return d;
}

DartId OrthoRep::split(DartId d) {
  VertexId v = head(d);
  Direction dir = dir_[d];
  VertexId w = add_vertex();
  // Detach twin(d) from v, hang it on w.
  ports_[v][static_cast<int>(opposite(dir))] = kNone;
  tail_[twin(d)] = w;
  ports_[w][static_cast<int>(opposite(dir))] = twin(d);
  return add_edge(w, v, dir);
}

namespace {

struct Pending {
  VertexId vertex;
  Direction in_dir;
  int turn;
  DartId out;
};

// One-pass refinement of the face left of `start` into rectangles. Turns are
// 2 - angle; a reflex corner followed by two left turns is cut off by an edge
// continuing from the reflex vertex to a new vertex on the following edge.
void rectangulate_face(OrthoRep& rep, DartId start) {
  std::vector<DartId> walk;
  DartId d = start;
  do {
    walk.push_back(d);
    d = rep.next(d);
  } while (d != start);
  const std::size_t k = walk.size();

  std::vector<Pending> corners(k);
  for (std::size_t i = 0; i < k; ++i)
    corners[i] = {rep.head(walk[i]), rep.direction(walk[i]), 2 - rep.angle(walk[i]),
                  walk[(i + 1) % k]};

  // Start right after the first maximum of the prefix sums so every reflex
  // corner finds its two left turns before the pass ends.
  int sum = 0, best = 0;
  std::size_t first_max = k - 1;
  for (std::size_t i = 0; i < k; ++i) {
    sum += corners[i].turn;
    if (i == 0 || sum > best) {
      best = sum;
      first_max = i;
    }
  }
  if (sum != 4) throw Error(ErrorKind::Internal, start, "face turning number is not +4");

  std::vector<Pending> stack;
  for (std::size_t step = 0; step < k; ++step) {
    const Pending& c = corners[(first_max + 1 + step) % k];
    if (c.turn == 0) continue;
    stack.push_back(c);
    while (stack.size() >= 3 && stack[stack.size() - 1].turn == 1 &&
           stack[stack.size() - 2].turn == 1 && stack[stack.size() - 3].turn < 0) {
      Pending second = stack.back();
      stack.pop_back();
      stack.pop_back();
      Pending reflex = stack.back();
      stack.pop_back();
      Direction dir = rotate(reflex.in_dir, reflex.turn + 1);
      DartId rest = rep.split(second.out);
      VertexId w = rep.tail(rest);
      DartId cut = rep.add_edge(reflex.vertex, w, dir);
      reflex.turn += 1;
      reflex.out = cut;
      if (reflex.turn < 0) stack.push_back(reflex);
      stack.push_back({w, dir, 1, rest});
    }
  }
  for (const Pending& p : stack)
    if (p.turn < 0) throw Error(ErrorKind::Internal, p.vertex, "reflex corner left unresolved");
}

}  // namespace

OrthoRep rectangulate(const LabeledGraph& g, const FaceSet& faces, const AngleAssignment& a,
                      const std::vector<Direction>& dirs) {
  OrthoRep rep(g, dirs);
  if (g.edge_count() == 0) return rep;

  // Attach a bounding rectangle to a corner of the outer face with angle >= 3.
  DartId anchor = kNone;
  for (DartId c : faces.faces[faces.outer].darts)
    if (a.angle[c] >= 3) {
      anchor = c;
      break;
    }
  if (anchor == kNone) throw Error(ErrorKind::Internal, faces.outer, "outer face has no reflex corner");
  const Direction out = rotate(rep.direction(anchor), 3 - a.angle[anchor]);
  VertexId w = rep.add_vertex();
  rep.add_edge(rep.head(anchor), w, out);
  std::array<VertexId, 4> box{};
  for (auto& b : box) b = rep.add_vertex();
  DartId box_dart = rep.add_edge(w, box[0], rotate(out, 1));
  rep.add_edge(box[0], box[1], rotate(out, 2));
  rep.add_edge(box[1], box[2], rotate(out, 3));
  rep.add_edge(box[2], box[3], out);
  rep.add_edge(box[3], w, rotate(out, 1));

  const DartId outer_dart = twin(box_dart);
  std::vector<DartId> starts;
  for (const auto& walk : rep.face_walks()) {
    if (std::find(walk.begin(), walk.end(), outer_dart) != walk.end()) continue;
    starts.push_back(walk.front());
  }
  for (DartId s : starts) rectangulate_face(rep, s);
  return rep;
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
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Longest-path coordinates along one axis. `along` is the direction whose
// darts point towards larger coordinates; perpendicular darts share a class.
std::vector<std::int64_t> layer_axis(const OrthoRep& rep, Direction along) {
  const int n = rep.vertex_count();
  UnionFind uf(n);
  const Direction across = rotate(along, 1);
  for (DartId d = 0; d < rep.dart_count(); ++d)
    if (rep.direction(d) == across) uf.unite(rep.tail(d), rep.head(d));
  std::vector<int> cls(static_cast<std::size_t>(n));
  std::map<int, int> ids;
  for (VertexId v = 0; v < n; ++v) {
    int root = uf.find(v);
    auto [it, _] = ids.emplace(root, static_cast<int>(ids.size()));
    cls[v] = it->second;
  }
  const int m = static_cast<int>(ids.size());
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(m));
  std::vector<int> indeg(static_cast<std::size_t>(m), 0);
  for (DartId d = 0; d < rep.dart_count(); ++d) {
    if (rep.direction(d) != along) continue;
    int a = cls[rep.tail(d)], b = cls[rep.head(d)];
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<std::int64_t> level(static_cast<std::size_t>(m), 0);
  std::queue<int> q;
  for (int c = 0; c < m; ++c)
    if (indeg[c] == 0) q.push(c);
  int done = 0;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    ++done;
    for (int s : succ[c]) {
      level[s] = std::max(level[s], level[c] + 1);
      if (--indeg[s] == 0) q.push(s);
    }
  }
  if (done != m) throw Error(ErrorKind::CyclicConstraint, kNone, "cyclic compaction constraints");
  std::vector<std::int64_t> coord(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) coord[v] = level[cls[v]];
  return coord;
}

}  // namespace

Drawing compact(const OrthoRep& refined) {
  auto xs = layer_axis(refined, Direction::East);
  auto ys = layer_axis(refined, Direction::North);
  Drawing d;
  for (VertexId v = 0; v < refined.original_vertices(); ++v) d.pos.push_back({xs[v], ys[v]});
  return normalize(d);
}

Drawing realize(const LabeledGraph& g, const FaceSet& faces, const AngleAssignment& a) {
  if (g.edge_count() == 0) {
    Drawing d;
    for (VertexId v = 0; v < g.vertex_count(); ++v) d.pos.push_back({v, 0});
    return d;
  }
  auto dirs = orient_darts(g, faces, a);
  return compact(rectangulate(g, faces, a, dirs));
}

Drawing draw_plane(const LabeledGraph& g, const RotationSystem& rot) {
  validate_graph(g);
  if (g.edge_count() == 0) {
    if (g.vertex_count() > 1)
      throw Error(ErrorKind::Disconnected, kNone, "plane graph must be connected");
    return Drawing{std::vector<Point>(static_cast<std::size_t>(g.vertex_count()))};
  }
  if (connected_components(g) != 1)
    throw Error(ErrorKind::Disconnected, kNone, "plane graph must be connected");
  auto labels = check_label_degrees(g, rot);
  if (!labels.ok()) {
    const Violation& v = labels.violations.front();
    throw Error(ErrorKind::LabelDegreeViolation, v.id,
                "label-degree violation at vertex " + std::to_string(v.id) + ": " + v.detail);
  }
  FaceSet faces = faces_from_rotation(g, rot);
  AngleAssignment a = admissible_assignment(g, faces);
  return realize(g, faces, a);
}

}  // namespace hvortho
