#include "hvortho/outerplanar.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hvortho/angle_flow.hpp"
#include "hvortho/validate.hpp"

namespace hvortho {

// ---------------------------------------------------------------------------
// Canonical embedding.

bool OuterplanarEmbedding::is_chord(const LabeledGraph& g, EdgeId e) const {
  const int n = static_cast<int>(cycle.size());
  int d = std::abs(position[g.edge(e).u] - position[g.edge(e).v]);
  return d != 1 && d != n - 1;
}

namespace {

[[noreturn]] void not_outerplanar(const std::string& why) {
  throw Error(ErrorKind::NotOuterplanar, kNone, "not outerplanar: " + why);
}

}  // namespace

OuterplanarEmbedding outerplanar_embedding(const LabeledGraph& g) {
  validate_graph(g);
  const int n = g.vertex_count();
  if (!is_biconnected(g))
    throw Error(ErrorKind::NotBiconnected, kNone, "graph is not biconnected");
  if (g.edge_count() > 2 * n - 3) not_outerplanar("too many edges");

  // Peel degree-2 vertices; each one sits between its two neighbours on the
  // Hamiltonian cycle of what remains.
  std::vector<std::set<VertexId>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  struct Removal {
    VertexId v, u, w;
  };
  std::vector<Removal> removed;
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (adj[v].size() == 2) queue.push_back(v);
  int remaining = n;
  while (remaining > 3) {
    VertexId v = kNone;
    while (!queue.empty()) {
      VertexId c = queue.back();
      queue.pop_back();
      if (!gone[c] && adj[c].size() == 2) {
        v = c;
        break;
      }
    }
    if (v == kNone) not_outerplanar("no removable degree-2 vertex");
    VertexId u = *adj[v].begin();
    VertexId w = *adj[v].rbegin();
    adj[u].erase(v);
    adj[w].erase(v);
    adj[v].clear();
    adj[u].insert(w);
    adj[w].insert(u);
    gone[v] = true;
    --remaining;
    removed.push_back({v, u, w});
    for (VertexId x : {u, w})
      if (adj[x].size() == 2) queue.push_back(x);
  }

  std::vector<VertexId> next(static_cast<std::size_t>(n), kNone), prev(static_cast<std::size_t>(n), kNone);
  std::vector<VertexId> tri;
  for (VertexId v = 0; v < n; ++v)
    if (!gone[v]) tri.push_back(v);
  for (int i = 0; i < 3; ++i) {
    next[tri[i]] = tri[(i + 1) % 3];
    prev[tri[(i + 1) % 3]] = tri[i];
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    auto [v, u, w] = *it;
    if (next[u] == w) {
      next[u] = v, prev[v] = u, next[v] = w, prev[w] = v;
    } else if (next[w] == u) {
      next[w] = v, prev[v] = w, next[v] = u, prev[u] = v;
    } else {
      not_outerplanar("vertex " + std::to_string(v) + " cannot be reinserted on the cycle");
    }
  }

  OuterplanarEmbedding emb;
  // Start at 0 and head to its smaller cycle neighbour.
  VertexId start = 0;
  bool forward = next[start] < prev[start];
  emb.cycle.reserve(static_cast<std::size_t>(n));
  VertexId x = start;
  do {
    emb.cycle.push_back(x);
    x = forward ? next[x] : prev[x];
  } while (x != start);
  if (static_cast<int>(emb.cycle.size()) != n) not_outerplanar("broken cycle");
  emb.position.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) emb.position[emb.cycle[i]] = i;

  // Chords must be laminar as intervals of cycle positions.
  std::vector<std::pair<int, int>> chords;
  int cycle_edges = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int a = emb.position[g.edge(e).u], b = emb.position[g.edge(e).v];
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 0 && b == n - 1)) ++cycle_edges;
    else chords.push_back({a, -b});
  }
  if (cycle_edges != n) not_outerplanar("cycle edges missing");
  std::sort(chords.begin(), chords.end());
  std::vector<int> open;
  for (auto [a, nb] : chords) {
    const int b = -nb;
    while (!open.empty() && open.back() <= a) open.pop_back();
    if (!open.empty() && b > open.back()) not_outerplanar("crossing chords");
    open.push_back(b);
  }

  // Counter-clockwise placement: the clockwise order at position i is by
  // decreasing cyclic offset.
  std::vector<std::vector<VertexId>> nb(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (VertexId v = 0; v < n; ++v) {
    const int pv = emb.position[v];
    auto offset = [&](VertexId u) { return (emb.position[u] - pv + n) % n; };
    std::sort(nb[v].begin(), nb[v].end(), [&](VertexId a, VertexId b) { return offset(a) > offset(b); });
  }
  emb.rot = RotationSystem::from_neighbors(g, nb);
  const VertexId c0 = emb.cycle[0], c1 = emb.cycle[1];
  EdgeId e01 = g.find_edge(c0, c1);
  emb.rot.outer_dart = dart_of(e01, g.edge(e01).u != c1);  // dart c1 -> c0
  emb.faces = faces_from_rotation(g, emb.rot);
  return emb;
}

// ---------------------------------------------------------------------------
// Segments, statistics, conditions.

std::vector<Segment> face_segments(const LabeledGraph& g, const FaceSet& faces, FaceId f) {
  const auto& w = faces.faces[f].darts;
  const std::size_t k = w.size();
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (label_of(g, w[(i + k - 1) % k]) != label_of(g, w[i])) {
      start = i;
      break;
    }
  std::vector<Segment> out;
  for (std::size_t j = 0; j < k; ++j) {
    DartId d = w[(start + j) % k];
    if (out.empty() || out.back().label != label_of(g, d)) {
      out.push_back({label_of(g, d), {tail(g, d)}, {}});
    }
    out.back().vertices.push_back(head(g, d));
    out.back().darts.push_back(d);
  }
  return out;
}

FaceStats face_stats(const LabeledGraph& g, const FaceSet& faces, FaceId f) {
  FaceStats s;
  s.face = f;
  std::set<EdgeId> seen;
  for (DartId d : faces.faces[f].darts) {
    EdgeId e = edge_of(d);
    if (!seen.insert(e).second) continue;
    const bool crit = is_critical(g, faces, f, e);
    if (g.edge(e).label == Label::V) {
      ++s.e_v;
      s.c_v += crit;
    } else {
      ++s.e_h;
      s.c_h += crit;
    }
  }
  return s;
}

namespace {

int label_changes(const LabeledGraph& g, const std::vector<DartId>& walk) {
  int t = 0;
  const std::size_t k = walk.size();
  for (std::size_t i = 0; i < k; ++i) t += label_of(g, walk[i]) != label_of(g, walk[(i + 1) % k]);
  return t;
}

void check_vertex_labels(const LabeledGraph& g, ConditionReport& report) {
  std::vector<int> h(static_cast<std::size_t>(g.vertex_count()), 0), v(h);
  for (const Edge& e : g.edges()) {
    auto& c = e.label == Label::H ? h : v;
    ++c[e.u];
    ++c[e.v];
  }
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (h[x] > 2)
      report.violations.push_back({"C3", "vertex", x, std::to_string(h[x]) + " H edges"});
    if (v[x] > 2)
      report.violations.push_back({"C3", "vertex", x, std::to_string(v[x]) + " V edges"});
  }
}

void check_faces(const LabeledGraph& g, const FaceSet& faces, ConditionReport& report,
                 const std::vector<FaceId>* rename = nullptr) {
  for (FaceId f = 0; f < faces.size(); ++f) {
    if (faces.faces[f].outer) continue;
    const FaceId id = rename ? (*rename)[f] : f;
    const int t = label_changes(g, faces.faces[f].darts);
    if (t < 4)
      report.violations.push_back({"C1", "face", id, "boundary has " + std::to_string(t / 2) +
                                                        " H run(s) and as many V runs"});
    FaceStats s = face_stats(g, faces, f);
    if (s.c_v == s.e_v && s.c_v % 2 != 0)
      report.violations.push_back({"C2", "face", id, "all " + std::to_string(s.e_v) +
                                                         " V edges are critical, odd count"});
    if (s.c_h == s.e_h && s.c_h % 2 != 0)
      report.violations.push_back({"C2", "face", id, "all " + std::to_string(s.e_h) +
                                                         " H edges are critical, odd count"});
  }
}

}  // namespace

ConditionReport check_conditions(const LabeledGraph& g) {
  OuterplanarEmbedding emb = outerplanar_embedding(g);
  ConditionReport report;
  check_faces(g, emb.faces, report);
  check_vertex_labels(g, report);
  // C1-C3 only decide maximum degree three; with a degree-4 vertex the
  // embedding can flip around it, so the nesting model has the last word.
  const auto deg = g.degrees();
  const auto hub = std::find(deg.begin(), deg.end(), 4);
  if (report.ok() && hub != deg.end() && !outerplanar_drawable(g))
    report.violations.push_back({"D4", "vertex", static_cast<int>(hub - deg.begin()),
                                 "no nesting of the faces fits the degree-4 vertices"});
  return report;
}

ConditionReport check_conditions_per_block(const LabeledGraph& g) {
  validate_graph(g);
  ConditionReport report;
  FaceId next_face = 0;
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() < 3) continue;
    std::vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()), kNone);
    std::vector<VertexId> global;
    LabeledGraph sub;
    for (EdgeId e : block)
      for (VertexId x : {g.edge(e).u, g.edge(e).v})
        if (local[x] == kNone) {
          local[x] = sub.add_vertex();
          global.push_back(x);
        }
    for (EdgeId e : block) sub.add_edge(local[g.edge(e).u], local[g.edge(e).v], g.edge(e).label);
    OuterplanarEmbedding emb = outerplanar_embedding(sub);
    std::vector<FaceId> rename(static_cast<std::size_t>(emb.faces.size()));
    for (FaceId f = 0; f < emb.faces.size(); ++f) rename[f] = next_face++;
    check_faces(sub, emb.faces, report, &rename);
  }
  check_vertex_labels(g, report);
  return report;
}

// ---------------------------------------------------------------------------
// Nesting model. Every inner face of the canonical embedding is drawn as an
// orthogonal polygon. Two faces sharing a chord are either side by side or
// one encloses the other; the corner angles at the chord ends follow from
// that choice. With a root face whose polygon sits inside nothing, every
// face can be planned on its own given the chord to its parent.

namespace {

// Corner of a face polygon at vertex v. Around a degree-4 vertex every
// sector is a quarter turn, so the polygon angle is one plus the number of
// edges of v inside it; a nested chord brings along everything past it.
struct CornerInfo {
  bool mixed = false;
  bool free = false;  // mixed corner at a degree-2 vertex
  int degree = 2;
  int in = -1, out = -1;  // chord index of the incoming / outgoing edge, or -1
};

struct FacePlan {
  FaceId face = kNone;
  std::vector<DartId> walk;
  std::vector<CornerInfo> corner;  // corner i sits between walk[i] and walk[i+1]
  int turns = 0;                   // mixed corners
  int free_count = 0;
  bool broken = false;  // some corner cannot be drawn whatever the nesting
  std::vector<EdgeId> chords;

  int index_of(EdgeId e) const {
    auto it = std::find(chords.begin(), chords.end(), e);
    return it == chords.end() ? -1 : static_cast<int>(it - chords.begin());
  }
};

struct Choice {
  std::vector<bool> nested;  // per chord of the face; the parent chord stays false
  int free_reflex = 0;
};

FacePlan plan_face(const LabeledGraph& g, const OuterplanarEmbedding& emb, FaceId f,
                   const std::vector<int>& deg) {
  FacePlan p;
  p.face = f;
  p.walk = emb.faces.faces[f].darts;
  const std::size_t k = p.walk.size();
  for (DartId d : p.walk)
    if (emb.is_chord(g, edge_of(d))) p.chords.push_back(edge_of(d));
  p.corner.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const DartId in = p.walk[i], out = p.walk[(i + 1) % k];
    const VertexId v = head(g, in);
    CornerInfo& c = p.corner[i];
    c.mixed = label_of(g, in) != label_of(g, out);
    c.degree = deg[v];
    c.in = p.index_of(edge_of(in));
    c.out = p.index_of(edge_of(out));
    p.turns += c.mixed;
    if (c.degree == 2) {
      c.free = c.mixed;
      p.free_count += c.free;
      continue;
    }
    if (c.in < 0 && c.out < 0)
      throw Error(ErrorKind::Internal, v, "corner at vertex " + std::to_string(v) + " touches no chord");
    // A straight corner beside a single chord at a degree-4 vertex would hold
    // zero or two extra edges in a half turn.
    if (c.degree == 4 && !c.mixed && (c.in < 0 || c.out < 0)) p.broken = true;
  }
  return p;
}

// Union-find with parity over the chords of one face.
struct ParityUnion {
  std::vector<int> up, par;
  explicit ParityUnion(std::size_t n) : up(n), par(n, 0) { std::iota(up.begin(), up.end(), 0); }
  std::pair<int, int> find(int x) {
    int p = 0;
    while (up[x] != x) {
      p ^= par[x];
      x = up[x];
    }
    return {x, p};
  }
  // x_a ^ x_b == diff; false on contradiction.
  bool join(int a, int b, int diff) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == diff;
    up[ra] = rb;
    par[ra] = pa ^ pb ^ diff;
    return true;
  }
};

// Picks which chords get nested (never the parent) so the reflex count of the
// polygon works out. Prefers the fewest nested corners.
std::optional<Choice> choose(const FacePlan& p, EdgeId parent_chord) {
  if (p.turns < 4 || p.broken) return std::nullopt;
  const int need = (p.turns - 4) / 2;
  const int lo = std::max(0, need - p.free_count);
  const int nc = static_cast<int>(p.chords.size());
  const int parent = parent_chord == kNone ? -1 : p.index_of(parent_chord);
  // Node nc stands for the constant 0.
  ParityUnion u(static_cast<std::size_t>(nc + 1));
  const int zero = nc;
  if (parent >= 0 && !u.join(parent, zero, 0)) return std::nullopt;
  std::vector<int> reflex_var;  // corners that are reflex iff the variable is 1
  for (const CornerInfo& c : p.corner) {
    if (c.degree == 2) continue;
    const bool has_parent = parent >= 0 && (c.in == parent || c.out == parent);
    if (c.degree == 3) {
      const int x = c.in >= 0 ? c.in : c.out;
      if (c.mixed && x != parent) reflex_var.push_back(x);
      continue;
    }
    if (c.in >= 0 && c.out >= 0) {
      if (has_parent) {
        const int other = c.in == parent ? c.out : c.in;
        if (!u.join(other, zero, c.mixed ? 0 : 1)) return std::nullopt;
      } else if (c.mixed) {
        if (!u.join(c.in, c.out, 0)) return std::nullopt;
        reflex_var.push_back(c.in);
      } else if (!u.join(c.in, c.out, 1)) {
        return std::nullopt;
      }
    } else {
      const int x = c.in >= 0 ? c.in : c.out;
      if (x != parent) reflex_var.push_back(x);
    }
  }
  // Each class of chords has two settings of its root, unless tied to zero.
  std::vector<int> comp_of(static_cast<std::size_t>(nc + 1), -1);
  std::vector<int> roots;
  for (int x = 0; x <= nc; ++x) {
    int r = u.find(x).first;
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(roots.size());
      roots.push_back(r);
    }
  }
  const int comps = static_cast<int>(roots.size());
  const int fixed = comp_of[u.find(zero).first];
  std::vector<std::array<int, 2>> weight(static_cast<std::size_t>(comps), {0, 0});
  for (int x : reflex_var) {
    auto [r, px] = u.find(x);
    ++weight[comp_of[r]][1 ^ px];
  }
  std::vector<std::vector<signed char>> via(static_cast<std::size_t>(comps + 1),
                                            std::vector<signed char>(static_cast<std::size_t>(need + 1), -1));
  via[0][0] = 0;
  for (int j = 0; j < comps; ++j)
    for (int s = 0; s <= need; ++s) {
      if (via[j][s] < 0) continue;
      for (int bit = 0; bit < 2; ++bit) {
        if (j == fixed && bit != u.find(zero).second) continue;
        const int t = s + weight[j][bit];
        if (t <= need && via[j + 1][t] < 0) via[j + 1][t] = static_cast<signed char>(bit);
      }
    }
  for (int s = lo; s <= need; ++s) {
    if (via[comps][s] < 0) continue;
    std::vector<int> root_bit(static_cast<std::size_t>(comps), 0);
    int cur = s;
    for (int j = comps; j > 0; --j) {
      root_bit[j - 1] = via[j][cur];
      cur -= weight[j - 1][root_bit[j - 1]];
    }
    Choice c;
    c.nested.resize(static_cast<std::size_t>(nc));
    for (int x = 0; x < nc; ++x) {
      auto [r, px] = u.find(x);
      c.nested[x] = (root_bit[comp_of[r]] ^ px) != 0;
    }
    c.free_reflex = need - s;
    return c;
  }
  return std::nullopt;
}

struct DualTree {
  // Inner faces adjacent through each chord.
  std::vector<std::vector<std::pair<FaceId, EdgeId>>> adj;
  std::vector<FaceId> inner;
};

DualTree dual_tree(const LabeledGraph& g, const OuterplanarEmbedding& emb) {
  DualTree t;
  t.adj.resize(static_cast<std::size_t>(emb.faces.size()));
  for (FaceId f = 0; f < emb.faces.size(); ++f)
    if (!emb.faces.faces[f].outer) t.inner.push_back(f);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!emb.is_chord(g, e)) continue;
    FaceId a = emb.faces.face_of_dart[2 * e], b = emb.faces.face_of_dart[2 * e + 1];
    t.adj[a].push_back({b, e});
    t.adj[b].push_back({a, e});
  }
  return t;
}

struct Plan {
  FaceId root = kNone;
  std::vector<FacePlan> faces;  // by face id; outer left empty
  std::vector<std::optional<Choice>> choice;
  std::vector<FaceId> parent;
  std::vector<EdgeId> parent_chord;
  std::vector<FaceId> order;  // root first
};

// Returns a root for which every face has a choice, or kNone.
FaceId pick_root(const OuterplanarEmbedding& emb, const DualTree& tree,
                 const std::vector<FacePlan>& plans) {
  const int nf = emb.faces.size();
  // Root the dual tree at the first inner face to find subtrees.
  const FaceId r0 = tree.inner.front();
  std::vector<FaceId> par(static_cast<std::size_t>(nf), kNone);
  std::vector<int> tin(static_cast<std::size_t>(nf), -1), tout(static_cast<std::size_t>(nf), -1);
  int timer = 0;
  std::vector<std::pair<FaceId, std::size_t>> stack{{r0, 0}};
  tin[r0] = timer++;
  while (!stack.empty()) {
    auto& [f, i] = stack.back();
    if (i < tree.adj[f].size()) {
      FaceId c = tree.adj[f][i++].first;
      if (c == par[f]) continue;
      par[c] = f;
      tin[c] = timer++;
      stack.push_back({c, 0});
    } else {
      tout[f] = timer - 1;
      stack.pop_back();
    }
  }
  std::vector<int> diff(static_cast<std::size_t>(timer + 1), 0);
  int global = 0;
  std::vector<bool> root_ok(static_cast<std::size_t>(nf), false);
  for (FaceId f : tree.inner) {
    root_ok[f] = choose(plans[f], kNone).has_value();
    if (!root_ok[f]) return kNone;
    for (auto [nbr, e] : tree.adj[f]) {
      if (choose(plans[f], e)) continue;
      // f cannot have e as its parent chord: no root beyond e works.
      if (par[nbr] == f) {
        ++diff[tin[nbr]];
        --diff[tout[nbr] + 1];
      } else {
        ++global;
        --diff[tin[f]];
        ++diff[tout[f] + 1];
      }
    }
  }
  std::vector<int> cover(static_cast<std::size_t>(timer), 0);
  int run = 0;
  for (int i = 0; i < timer; ++i) {
    run += diff[i];
    cover[i] = run + global;
  }
  std::vector<FaceId> candidates = tree.inner;
  std::stable_sort(candidates.begin(), candidates.end(), [&](FaceId a, FaceId b) {
    return emb.faces.faces[a].degree() > emb.faces.faces[b].degree();
  });
  for (FaceId f : candidates)
    if (root_ok[f] && cover[tin[f]] == 0) return f;
  return kNone;
}

std::optional<Plan> make_plan(const LabeledGraph& g, const OuterplanarEmbedding& emb) {
  const auto deg = g.degrees();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (deg[v] > 4) return std::nullopt;
  {
    ConditionReport c3;
    check_vertex_labels(g, c3);
    if (!c3.ok()) return std::nullopt;
  }
  Plan plan;
  plan.faces.resize(static_cast<std::size_t>(emb.faces.size()));
  DualTree tree = dual_tree(g, emb);
  for (FaceId f : tree.inner) plan.faces[f] = plan_face(g, emb, f, deg);
  plan.root = pick_root(emb, tree, plan.faces);
  if (plan.root == kNone) return std::nullopt;
  const int nf = emb.faces.size();
  plan.choice.resize(static_cast<std::size_t>(nf));
  plan.parent.assign(static_cast<std::size_t>(nf), kNone);
  plan.parent_chord.assign(static_cast<std::size_t>(nf), kNone);
  std::vector<bool> seen(static_cast<std::size_t>(nf), false);
  // Depth-first over the dual tree.
  std::vector<FaceId> stack{plan.root};
  seen[plan.root] = true;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    plan.order.push_back(f);
    plan.choice[f] = choose(plan.faces[f], plan.parent_chord[f]);
    if (!plan.choice[f]) throw Error(ErrorKind::Internal, f, "face plan lost after root choice");
    for (auto it = tree.adj[f].rbegin(); it != tree.adj[f].rend(); ++it) {
      auto [c, e] = *it;
      if (seen[c]) continue;
      seen[c] = true;
      plan.parent[c] = f;
      plan.parent_chord[c] = e;
      stack.push_back(c);
    }
  }
  return plan;
}

// Polygon angle of every corner of a planned face.
std::vector<int> polygon_angles(const FacePlan& p, const Choice& c) {
  std::vector<int> angle(p.corner.size(), 2);
  int free_left = c.free_reflex;
  for (std::size_t i = 0; i < p.corner.size(); ++i) {
    const CornerInfo& ci = p.corner[i];
    auto x = [&](int chord) { return chord >= 0 && c.nested[chord] ? 1 : 0; };
    if (ci.degree == 2) {
      if (ci.mixed) {
        angle[i] = free_left > 0 ? 3 : 1;
        free_left -= angle[i] == 3;
      }
    } else if (ci.degree == 3) {
      if (ci.mixed) angle[i] = x(ci.in) + x(ci.out) ? 3 : 1;
    } else if (ci.in >= 0 && ci.out >= 0) {
      angle[i] = 1 + x(ci.in) + x(ci.out);
    } else {
      angle[i] = 1 + 2 * (x(ci.in) + x(ci.out));
    }
  }
  return angle;
}

int segment_case(const LabeledGraph& g, const FaceSet& faces, FaceId f, EdgeId e) {
  for (const Segment& s : face_segments(g, faces, f))
    for (DartId d : s.darts)
      if (edge_of(d) == e) {
        int ends = 0;
        for (VertexId x : {g.edge(e).u, g.edge(e).v})
          ends += x == s.vertices.front() || x == s.vertices.back();
        return 1 + ends;
      }
  return 0;
}

// Embedding and coordinates implied by one direction per dart.
std::pair<RotationSystem, Drawing> from_directions(const LabeledGraph& g, const std::vector<int>& dir) {
  const int darts = 2 * g.edge_count();
  std::vector<std::vector<DartId>> around(static_cast<std::size_t>(g.vertex_count()));
  for (DartId d = 0; d < darts; ++d) {
    if (dir[d] < 0) throw Error(ErrorKind::Internal, edge_of(d), "edge without direction");
    around[tail(g, d)].push_back(d);
  }
  auto cw_rank = [&](DartId d) {
    return clockwise_steps(Direction::North, static_cast<Direction>(dir[d])) % 4;
  };
  for (auto& r : around) {
    std::sort(r.begin(), r.end(), [&](DartId a, DartId b) { return cw_rank(a) < cw_rank(b); });
    for (std::size_t i = 1; i < r.size(); ++i)
      if (dir[r[i]] == dir[r[i - 1]])
        throw Error(ErrorKind::Internal, tail(g, r[i]), "two edges share a port");
  }
  RotationSystem rot;
  rot.around = std::move(around);
  rot.outer_dart = 0;
  FaceSet faces = faces_from_rotation(g, rot);
  AngleAssignment a;
  a.angle.resize(static_cast<std::size_t>(darts));
  for (DartId c = 0; c < darts; ++c)
    a.angle[c] = clockwise_steps(static_cast<Direction>(dir[twin(c)]),
                                 static_cast<Direction>(dir[faces.next[c]]));
  FaceId outer = kNone;
  for (FaceId f = 0; f < faces.size(); ++f) {
    int sum = 0;
    for (DartId d : faces.faces[f].darts) sum += a.angle[d];
    if (sum == required_face_sum(faces.faces[f].degree(), true)) {
      if (outer != kNone) throw Error(ErrorKind::Internal, f, "two unbounded faces");
      outer = f;
    }
  }
  if (outer == kNone) throw Error(ErrorKind::Internal, kNone, "no unbounded face");
  rot.outer_dart = faces.faces[outer].darts.front();
  faces = faces_from_rotation(g, rot);
  verify_assignment(g, faces, a);
  Drawing d = realize(g, faces, a);
  return {std::move(rot), std::move(d)};
}

}  // namespace

bool outerplanar_drawable(const LabeledGraph& g) {
  OuterplanarEmbedding emb = outerplanar_embedding(g);
  return make_plan(g, emb).has_value();
}

OuterplanarDrawing draw_outerplanar(const LabeledGraph& g) {
  OuterplanarDrawing out;
  out.canonical = outerplanar_embedding(g);
  const OuterplanarEmbedding& emb = out.canonical;
  auto plan = make_plan(g, emb);
  if (!plan) {
    ConditionReport r = check_conditions(g);
    std::string why = r.ok() ? "no nesting of the faces closes every polygon"
                             : r.violations.front().rule + " fails on " +
                                   r.violations.front().element + " " +
                                   std::to_string(r.violations.front().id);
    throw Error(ErrorKind::ConditionsViolated, r.ok() ? kNone : r.violations.front().id,
                "not drawable: " + why);
  }
  out.root = plan->root;
  out.reflex.resize(static_cast<std::size_t>(emb.faces.size()));

  // Orientation of each face polygon's walk in the drawing (+1 counter-clockwise).
  const int darts = 2 * g.edge_count();
  std::vector<int> dir(static_cast<std::size_t>(darts), -1);
  std::vector<int> sign(static_cast<std::size_t>(emb.faces.size()), 1);
  for (FaceId f : plan->order) {
    const FacePlan& fp = plan->faces[f];
    const Choice& ch = *plan->choice[f];
    std::vector<int> angle = polygon_angles(fp, ch);
    out.reflex[f].resize(angle.size());
    for (std::size_t i = 0; i < angle.size(); ++i) out.reflex[f][i] = angle[i] == 3;
    std::size_t start = 0;
    if (f == plan->root) {
      dir[fp.walk[0]] = label_of(g, fp.walk[0]) == Label::H ? 0 : 1;
    } else {
      const FaceId par = plan->parent[f];
      const EdgeId e = plan->parent_chord[f];
      const bool inside = plan->choice[par]->nested[plan->faces[par].index_of(e)];
      sign[f] = inside ? -sign[par] : sign[par];
      while (edge_of(fp.walk[start]) != e) ++start;
      out.steps.push_back({f, par, e, segment_case(g, emb.faces, par, e),
                           inside ? Placement::Inside : Placement::Beside});
    }
    const std::size_t k = fp.walk.size();
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const std::size_t i = (start + j) % k;
      const DartId cur = fp.walk[i], nxt = fp.walk[(i + 1) % k];
      const int d = ((dir[cur] + sign[f] * (2 - angle[i])) % 4 + 4) % 4;
      if (dir[nxt] >= 0 && dir[nxt] != d)
        throw Error(ErrorKind::Internal, f, "face polygon does not close");
      dir[nxt] = d;
    }
    for (DartId d : fp.walk) dir[twin(d)] = (dir[d] + 2) % 4;
  }

  auto [rot, drawing] = from_directions(g, dir);
  out.rot = std::move(rot);
  out.drawing = std::move(drawing);
  return out;
}

FaceDrawing draw_face(const LabeledGraph& g, const FaceSet& faces, FaceId f,
                      const std::vector<bool>& reflex) {
  const auto& w = faces.faces[f].darts;
  const int k = static_cast<int>(w.size());
  LabeledGraph poly(k);
  for (int i = 0; i < k; ++i) poly.add_edge(i, (i + 1) % k, label_of(g, w[i]));
  std::vector<std::vector<VertexId>> nb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) nb[i] = {(i + k - 1) % k, (i + 1) % k};
  RotationSystem rot = RotationSystem::from_neighbors(poly, nb);
  rot.outer_dart = 1;  // 1 -> 0
  FaceSet pf = faces_from_rotation(poly, rot);
  AngleAssignment a;
  a.angle.resize(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    // Corner i of the walk sits at poly vertex i+1, entered by dart 2i.
    const DartId in = w[i], out = w[(i + 1) % k];
    int inner = label_of(g, in) == label_of(g, out) ? 2 : (reflex[i] ? 3 : 1);
    const DartId forward = 2 * i;
    const DartId backward = 2 * ((i + 1) % k) + 1;
    const bool forward_inner = !pf.faces[pf.face_of_dart[forward]].outer;
    a.angle[forward] = forward_inner ? inner : 4 - inner;
    a.angle[backward] = forward_inner ? 4 - inner : inner;
  }
  verify_assignment(poly, pf, a);
  Drawing d = realize(poly, pf, a);
  FaceDrawing fd;
  fd.face = f;
  for (int i = 0; i < k; ++i) {
    fd.vertices.push_back(tail(g, w[i]));
    fd.points.push_back(d.pos[i]);
  }
  std::int64_t x0 = d.pos[0].x, x1 = x0, y0 = d.pos[0].y, y1 = y0;
  for (Point p : d.pos) {
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  fd.flag = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}, std::nullopt};
  return fd;
}

// ---------------------------------------------------------------------------
// Degree-4 gadget. The vertex becomes a vertical path b1 v1 v2 d1 with the
// west arm a-a2 closing a 5-cycle on b1..v2 and the east arm c-c2 closing
// one on v1..d1. The two cycles share v1-v2, so the arms end up on
// opposite sides of the path in every drawing.

namespace {

struct Roles {
  VertexId north, east, south, west;
};

Roles roles_of(const LabeledGraph& g, VertexId v, const RotationSystem* rot) {
  std::vector<DartId> out;
  if (rot) {
    out = rot->around[v];
  } else {
    const auto inc = g.incidence();
    for (EdgeId e : inc[v]) out.push_back(dart_of(e, g.edge(e).v == v));
  }
  const std::size_t k = out.size();
  std::size_t first = k;
  for (std::size_t i = 0; i < k; ++i)
    if (label_of(g, out[i]) == Label::V) {
      first = i;
      break;
    }
  std::vector<VertexId> cw;
  for (std::size_t i = 0; i < k; ++i) cw.push_back(head(g, out[(first + i) % k]));
  if (rot) {
    for (std::size_t i = 0; i < k; ++i)
      if (label_of(g, out[(first + i) % k]) != (i % 2 == 0 ? Label::V : Label::H))
        throw Error(ErrorKind::NonAlternatingDegree4, v,
                    "labels around vertex " + std::to_string(v) + " do not alternate");
    return {cw[0], cw[1], cw[2], cw[3]};
  }
  std::vector<VertexId> vs, hs;
  for (DartId d : out) (label_of(g, d) == Label::V ? vs : hs).push_back(head(g, d));
  return {vs[0], hs[0], vs[1], hs[1]};
}

}  // namespace

GadgetGraph transform_degree4(const LabeledGraph& g, const RotationSystem* rot) {
  validate_graph(g);
  const int n = g.vertex_count();
  const auto deg = g.degrees();
  const auto inc = g.incidence();
  GadgetGraph t;
  std::vector<int> map_of(static_cast<std::size_t>(n), -1);
  int next_id = n;
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] > 4)
      throw Error(ErrorKind::LabelDegreeViolation, v, "vertex " + std::to_string(v) + " has degree above 4");
    if (deg[v] < 4) continue;
    int h = 0;
    for (EdgeId e : inc[v]) h += g.edge(e).label == Label::H;
    if (h != 2)
      throw Error(ErrorKind::NonAlternatingDegree4, v,
                  "vertex " + std::to_string(v) + " needs two H and two V edges");
    Roles r = roles_of(g, v, rot);
    GadgetMap m;
    m.original = v;
    m.v1 = v;
    m.a = next_id++, m.a2 = next_id++, m.b1 = next_id++, m.v2 = next_id++;
    m.d1 = next_id++, m.c = next_id++, m.c2 = next_id++;
    m.north = r.north, m.south = r.south, m.west = r.west, m.east = r.east;
    map_of[v] = static_cast<int>(t.maps.size());
    t.maps.push_back(m);
  }
  // Endpoint in the output graph of edge (v, u), seen from v.
  auto attach = [&](VertexId v, VertexId u) {
    if (map_of[v] < 0) return v;
    const GadgetMap& m = t.maps[map_of[v]];
    if (u == m.north) return m.b1;
    if (u == m.south) return m.d1;
    if (u == m.west) return m.a;
    return m.c;
  };
  t.graph = LabeledGraph(next_id);
  t.origin.resize(static_cast<std::size_t>(next_id));
  for (VertexId v = 0; v < n; ++v) t.origin[v] = v;
  for (const GadgetMap& m : t.maps)
    for (VertexId x : {m.a, m.a2, m.b1, m.v2, m.d1, m.c, m.c2}) t.origin[x] = m.original;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    t.edge_image.push_back(t.graph.add_edge(attach(ed.u, ed.v), attach(ed.v, ed.u), ed.label));
    for (VertexId end : {ed.u, ed.v})
      if (map_of[end] >= 0) t.maps[map_of[end]].external.push_back(t.edge_image.back());
  }
  for (GadgetMap& m : t.maps) {
    t.graph.add_edge(m.b1, m.v1, Label::V);
    t.graph.add_edge(m.v1, m.v2, Label::V);
    t.graph.add_edge(m.v2, m.d1, Label::V);
    t.graph.add_edge(m.a, m.b1, Label::H);
    t.graph.add_edge(m.a, m.a2, Label::V);
    t.graph.add_edge(m.a2, m.v2, Label::H);
    t.graph.add_edge(m.c, m.d1, Label::H);
    t.graph.add_edge(m.c, m.c2, Label::V);
    t.graph.add_edge(m.c2, m.v1, Label::H);
  }
  // Roles now name output endpoints.
  for (GadgetMap& m : t.maps) {
    const VertexId v = m.original;
    m.north = attach(m.north, v), m.south = attach(m.south, v);
    m.west = attach(m.west, v), m.east = attach(m.east, v);
  }
  return t;
}

RotationSystem gadget_rotation(const LabeledGraph& g, const RotationSystem& rot, const GadgetGraph& t) {
  const LabeledGraph& h = t.graph;
  std::vector<std::vector<VertexId>> nb(static_cast<std::size_t>(h.vertex_count()));
  std::vector<bool> inside(static_cast<std::size_t>(h.vertex_count()), false);
  for (const GadgetMap& m : t.maps) {
    for (VertexId x : {m.a, m.a2, m.b1, m.v1, m.v2, m.d1, m.c, m.c2}) inside[x] = true;
    nb[m.b1] = {m.north, m.v1, m.a};
    nb[m.v1] = {m.b1, m.c2, m.v2};
    nb[m.v2] = {m.v1, m.d1, m.a2};
    nb[m.d1] = {m.v2, m.c, m.south};
    nb[m.a] = {m.b1, m.a2, m.west};
    nb[m.a2] = {m.a, m.v2};
    nb[m.c] = {m.c2, m.east, m.d1};
    nb[m.c2] = {m.c, m.v1};
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (inside[v]) continue;
    for (DartId d : rot.around[v]) {
      const Edge& img = h.edge(t.edge_image[edge_of(d)]);
      nb[v].push_back(img.u == v ? img.v : img.u);
    }
  }
  RotationSystem out = RotationSystem::from_neighbors(h, nb);
  const DartId od = rot.outer_dart;
  const EdgeId img = t.edge_image[edge_of(od)];
  // Same orientation as the input dart.
  const bool reversed = (od & 1) != 0;
  out.outer_dart = dart_of(img, reversed);
  return out;
}

Drawing recover_degree4_drawing(const LabeledGraph& g, const GadgetGraph& t, const Drawing& d) {
  const int darts = 2 * g.edge_count();
  std::vector<int> dir(static_cast<std::size_t>(darts), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& img = t.graph.edge(t.edge_image[e]);
    auto s = segment_direction(d.pos[img.u], d.pos[img.v]);
    if (!s) throw Error(ErrorKind::Internal, e, "edge image " + std::to_string(e) + " is not axis-parallel");
    dir[2 * e] = static_cast<int>(*s);
    dir[2 * e + 1] = (dir[2 * e] + 2) % 4;
  }
  return from_directions(g, dir).second;
}

Drawing expand_degree4_drawing(const LabeledGraph& g, const GadgetGraph& t, const Drawing& d) {
  const LabeledGraph& h = t.graph;
  std::vector<int> dir(static_cast<std::size_t>(2 * h.edge_count()), -1);
  auto set = [&](EdgeId e, VertexId from, int to_dir) {
    const bool forward = h.edge(e).u == from;
    dir[dart_of(e, !forward)] = to_dir;
    dir[dart_of(e, forward)] = (to_dir + 2) % 4;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto s = segment_direction(d.pos[g.edge(e).u], d.pos[g.edge(e).v]);
    if (!s) throw Error(ErrorKind::Internal, e, "edge " + std::to_string(e) + " is not axis-parallel");
    const Edge& img = h.edge(t.edge_image[e]);
    // Image endpoints keep the orientation of the input edge.
    set(t.edge_image[e], img.u, static_cast<int>(*s));
    if (t.origin[img.u] != g.edge(e).u) set(t.edge_image[e], img.v, static_cast<int>(*s));
  }
  for (const GadgetMap& m : t.maps) {
    auto towards = [&](VertexId attach, VertexId outside) {
      return dir[dart_of(h.find_edge(attach, outside), h.edge(h.find_edge(attach, outside)).u != attach)];
    };
    const int up = towards(m.b1, m.north);     // local north
    const int left = towards(m.a, m.west);     // local west
    const int down = (up + 2) % 4, right = (left + 2) % 4;
    set(h.find_edge(m.b1, m.v1), m.b1, down);
    set(h.find_edge(m.v1, m.v2), m.v1, down);
    set(h.find_edge(m.v2, m.d1), m.v2, down);
    set(h.find_edge(m.a, m.b1), m.a, right);
    set(h.find_edge(m.a, m.a2), m.a, down);
    set(h.find_edge(m.a2, m.v2), m.a2, right);
    set(h.find_edge(m.c, m.d1), m.c, left);
    set(h.find_edge(m.c, m.c2), m.c, up);
    set(h.find_edge(m.c2, m.v1), m.c2, left);
  }
  return from_directions(h, dir).second;
}

}  // namespace hvortho
