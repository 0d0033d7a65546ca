#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvortho {

using VertexId = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;
using CornerId = int;

inline constexpr int kNone = -1;

enum class Label : std::uint8_t { H, V };

constexpr Label other(Label l) { return l == Label::H ? Label::V : Label::H; }
constexpr char to_char(Label l) { return l == Label::H ? 'H' : 'V'; }

enum class ErrorKind {
  SelfLoop,
  ParallelEdge,
  BadVertexId,
  BadRotation,
  NonPlanarRotation,
  MissingOuterFace,
  Disconnected,
  NotBiconnected,
  NotOuterplanar,
  LabelDegreeViolation,
  NonAlternatingDegree4,
  InfeasibleFace,
  GlobalImbalance,
  Infeasible,
  VertexSumViolation,
  FaceSumViolation,
  InconsistentPropagation,
  CyclicConstraint,
  ConditionsViolated,
  NotCritical,
  BudgetExceeded,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Error raised by every library operation. `element` names the offending
/// vertex, edge, face or corner when one exists, kNone otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, int element, const std::string& what)
      : std::runtime_error(what), kind_(kind), element_(element) {}

  ErrorKind kind() const noexcept { return kind_; }
  int element() const noexcept { return element_; }

 private:
  ErrorKind kind_;
  int element_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Label label = Label::H;
};

/// Simple undirected graph with an H/V orientation label on every edge.
/// Construction does not validate; call validate_graph before use.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int vertex_count, std::vector<Edge> edges = {})
      : n_(vertex_count), edges_(std::move(edges)) {}

  EdgeId add_edge(VertexId u, VertexId v, Label label) {
    edges_.push_back({u, v, label});
    return static_cast<EdgeId>(edges_.size()) - 1;
  }
  VertexId add_vertex() { return n_++; }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edge ids per vertex, in edge-id order.
  std::vector<std::vector<EdgeId>> incidence() const;
  std::vector<int> degrees() const;
  /// Edge joining u and v, or kNone.
  EdgeId find_edge(VertexId u, VertexId v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Darts: edge e yields dart 2e (u -> v) and dart 2e+1 (v -> u).
constexpr DartId dart_of(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
constexpr DartId twin(DartId d) { return d ^ 1; }
constexpr EdgeId edge_of(DartId d) { return d >> 1; }
inline VertexId tail(const LabeledGraph& g, DartId d) {
  const Edge& e = g.edge(edge_of(d));
  return (d & 1) ? e.v : e.u;
}
inline VertexId head(const LabeledGraph& g, DartId d) { return tail(g, twin(d)); }
inline Label label_of(const LabeledGraph& g, DartId d) { return g.edge(edge_of(d)).label; }

/// Throws Error{SelfLoop|ParallelEdge|BadVertexId}.
void validate_graph(const LabeledGraph& g);

int connected_components(const LabeledGraph& g);
bool is_biconnected(const LabeledGraph& g);
/// Edge sets of the biconnected components (bridges form their own block).
std::vector<std::vector<EdgeId>> biconnected_blocks(const LabeledGraph& g);

/// Fixed combinatorial embedding. `around[v]` lists the darts leaving v in
/// clockwise order (y axis pointing up). The outer face is the face that
/// lies to the left of `outer_dart`.
struct RotationSystem {
  std::vector<std::vector<DartId>> around;
  DartId outer_dart = kNone;

  /// Builds darts from clockwise neighbour lists. Throws BadRotation when a
  /// list does not match the adjacency of the vertex.
  static RotationSystem from_neighbors(const LabeledGraph& g,
                                       const std::vector<std::vector<VertexId>>& neighbors);
  std::vector<std::vector<VertexId>> neighbor_lists(const LabeledGraph& g) const;
  /// Reflection: every rotation reversed, outer face kept.
  RotationSystem mirrored() const;
};

struct Face {
  std::vector<DartId> darts;  // boundary walk, face on the left
  bool outer = false;
  int degree() const noexcept { return static_cast<int>(darts.size()); }
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<FaceId> face_of_dart;
  std::vector<DartId> next;  // successor of a dart along its face
  FaceId outer = kNone;

  int size() const noexcept { return static_cast<int>(faces.size()); }
};

/// Partitions darts into face walks using next(d) = clockwise successor of
/// twin(d) around head(d). Throws BadRotation, NonPlanarRotation,
/// MissingOuterFace.
FaceSet faces_from_rotation(const LabeledGraph& g, const RotationSystem& rot);

/// Outer face chosen by vertex sequence, listed as the face walk (clockwise
/// for an outer face); the reversed list is tried when nothing matches.
/// Returns kNone if no face matches.
DartId find_face_dart(const LabeledGraph& g, const RotationSystem& rot,
                      const std::vector<VertexId>& boundary);

/// Vertex-face incidence between an incoming dart and its face successor.
/// Corner ids coincide with the id of the incoming dart.
struct Corner {
  VertexId vertex = kNone;
  FaceId face = kNone;
  DartId in = kNone;
  DartId out = kNone;
};

std::vector<Corner> corners(const LabeledGraph& g, const FaceSet& faces);

struct Violation {
  std::string rule;     // e.g. "label-degree", "C1"
  std::string element;  // "vertex", "face", "edge"
  int id = kNone;
  std::string detail;
};

struct ConditionReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// At most two H and two V edges per vertex; degree-4 vertices alternate
/// H,V,H,V in rotation order.
ConditionReport check_label_degrees(const LabeledGraph& g, const RotationSystem& rot);

}  // namespace hvortho
