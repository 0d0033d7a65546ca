#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hvortho/graph.hpp"
#include "hvortho/ortho_layout.hpp"

namespace hvortho {

/// Canonical embedding of a biconnected outerplanar graph: every vertex on
/// the outer cycle, listed counter-clockwise, so the outer face is walked
/// clockwise. Chords are the edges off that cycle.
struct OuterplanarEmbedding {
  std::vector<VertexId> cycle;
  std::vector<int> position;  // index of each vertex in `cycle`
  RotationSystem rot;
  FaceSet faces;

  bool is_chord(const LabeledGraph& g, EdgeId e) const;
};

/// Throws NotBiconnected or NotOuterplanar.
OuterplanarEmbedding outerplanar_embedding(const LabeledGraph& g);

/// Maximal run of same-label edges along a face walk.
struct Segment {
  Label label = Label::H;
  std::vector<VertexId> vertices;  // in walk order, edges = vertices - 1
  std::vector<DartId> darts;
};

/// Segments of one face walk, starting at a label change. A face with a
/// single label yields one segment covering the whole walk.
std::vector<Segment> face_segments(const LabeledGraph& g, const FaceSet& faces, FaceId f);

struct FaceStats {
  FaceId face = kNone;
  int e_v = 0, e_h = 0;  // distinct V / H edges
  int c_v = 0, c_h = 0;  // v-critical / h-critical edges
};

FaceStats face_stats(const LabeledGraph& g, const FaceSet& faces, FaceId f);

/// C1 (at least two H runs and two V runs around each inner face), C2 (an
/// all-critical label class has even size) and C3 (at most two edges of a
/// label per vertex). These decide graphs of maximum degree three. When a
/// degree-4 vertex is present and C1-C3 hold, a "D4" violation is added if
/// no drawing exists. Throws NotBiconnected or NotOuterplanar.
ConditionReport check_conditions(const LabeledGraph& g);

/// Same conditions applied block by block to a connected graph whose blocks
/// are outerplanar (bridges and single edges are skipped).
ConditionReport check_conditions_per_block(const LabeledGraph& g);

// ---------------------------------------------------------------------------
// Degree-4 gadget.

struct GadgetMap {
  VertexId original = kNone;  // replaced vertex (id in the input graph)
  // Gadget vertices in the output graph. P = b_in, b1, v1, v2, d1, d_in runs
  // vertically; a and c carry the horizontal attachments.
  VertexId a = kNone, a2 = kNone, b1 = kNone, v1 = kNone, v2 = kNone, d1 = kNone,
           c = kNone, c2 = kNone;
  VertexId north = kNone, south = kNone;  // original V neighbours (b and d)
  VertexId west = kNone, east = kNone;    // original H neighbours joined to a and c
  std::vector<EdgeId> external;           // output edges that carried the original ones
};

struct GadgetGraph {
  LabeledGraph graph;
  std::vector<GadgetMap> maps;
  /// Input vertex per output vertex (gadget vertices map to the replaced one).
  std::vector<VertexId> origin;
  /// Output edge per input edge.
  std::vector<EdgeId> edge_image;
};

/// Replaces every degree-4 vertex (two H, two V edges) by a gadget of
/// maximum degree 3. Throws NonAlternatingDegree4 when a degree-4 vertex
/// does not have two edges of each label (or, given an embedding, when they
/// do not alternate around it), LabelDegreeViolation for degree > 4. The
/// embedding decides which H neighbour sits east of the vertical path.
GadgetGraph transform_degree4(const LabeledGraph& g, const RotationSystem* rot = nullptr);

/// Embedding of the gadget graph induced by an embedding of the input.
RotationSystem gadget_rotation(const LabeledGraph& g, const RotationSystem& rot,
                               const GadgetGraph& t);

/// Inserts a gadget drawing at every replaced vertex of a good drawing of the
/// input, mirrored to fit the directions of its four edges. Returns a good
/// drawing of the transformed graph.
Drawing expand_degree4_drawing(const LabeledGraph& g, const GadgetGraph& t, const Drawing& d);

/// Collapses every gadget of a good drawing of the transformed graph back
/// into its vertex and returns a good drawing of the input graph. The
/// rotation of each vertex is read from the drawing; the coordinates are
/// recomputed from it. Throws Internal when the drawing is not usable.
Drawing recover_degree4_drawing(const LabeledGraph& g, const GadgetGraph& t, const Drawing& d);

// ---------------------------------------------------------------------------
// Constructive drawing.

/// Bounding flag of a face drawing: banner p,q,r,s and an optional post.
struct Flag {
  Point p, q, r, s;  // banner corners, counter-clockwise from the lower left
  std::optional<std::array<Point, 4>> post;
};

struct FaceDrawing {
  FaceId face = kNone;
  std::vector<VertexId> vertices;  // walk order
  std::vector<Point> points;       // parallel to `vertices`
  Flag flag;
};

/// Draws one inner face on its own as an orthogonal polygon, with the
/// reflex corners placed where `reflex` says (one entry per walk corner,
/// true = 270 degrees). Requires a valid corner pattern.
FaceDrawing draw_face(const LabeledGraph& g, const FaceSet& faces, FaceId f,
                      const std::vector<bool>& reflex);

/// Relation of a child face to its parent across the shared chord.
enum class Placement { Beside, Inside };

struct DfsStep {
  FaceId face = kNone;
  FaceId parent = kNone;
  EdgeId shared = kNone;
  int shared_case = 0;  // 1, 2 or 3: how many chord ends close a parent segment, plus one
  Placement placement = Placement::Beside;
};

struct OuterplanarDrawing {
  Drawing drawing;
  OuterplanarEmbedding canonical;
  RotationSystem rot;  // embedding actually drawn
  FaceId root = kNone;
  std::vector<DfsStep> steps;
  std::vector<std::vector<bool>> reflex;  // per canonical face, per walk corner
};

/// Decision only: true when some choice of nesting makes every face
/// polygon closable. Throws NotBiconnected, NotOuterplanar.
bool outerplanar_drawable(const LabeledGraph& g);

/// Throws ConditionsViolated when no drawing exists.
OuterplanarDrawing draw_outerplanar(const LabeledGraph& g);

}  // namespace hvortho
