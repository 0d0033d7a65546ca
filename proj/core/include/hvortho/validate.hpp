#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hvortho/graph.hpp"
#include "hvortho/ortho_layout.hpp"

namespace hvortho {

struct ValidationReport {
  std::vector<EdgeId> label_violations;       // wrong axis or zero length
  std::vector<std::pair<VertexId, VertexId>> coincident_vertices;
  std::vector<std::pair<EdgeId, EdgeId>> crossings;  // crossing, overlap or illegal touch
  std::vector<std::pair<VertexId, EdgeId>> vertex_on_edge;
  std::vector<VertexId> rotation_mismatches;
  bool outer_face_ok = true;
  bool mirrored = false;  // accepted as the reflection of the input rotation
  std::vector<EdgeId> lemma_bc_violations;

  bool labels_ok() const { return label_violations.empty(); }
  bool distinct_points_ok() const { return coincident_vertices.empty(); }
  bool planarity_ok() const { return crossings.empty() && vertex_on_edge.empty(); }
  bool rotation_ok() const { return rotation_mismatches.empty() && outer_face_ok; }
  bool lemma_bc_ok() const { return lemma_bc_violations.empty(); }
  bool ok() const {
    return labels_ok() && distinct_points_ok() && planarity_ok() && rotation_ok() && lemma_bc_ok();
  }
};

struct ValidateOptions {
  bool allow_mirror = false;
};

/// Certifies a drawing from the graph, its labels, the points, and
/// optionally the rotation it must realize. Exact integer predicates only.
ValidationReport validate_drawing(const LabeledGraph& g, const Drawing& d,
                                  const RotationSystem* rot = nullptr, ValidateOptions opts = {});

/// Direction of the segment from p to q (axis-parallel, p != q).
std::optional<Direction> segment_direction(Point p, Point q);

/// Critical edge test on an embedded face: an edge off the outer face whose
/// face neighbours share the label opposite to its own.
bool is_critical(const LabeledGraph& g, const FaceSet& faces, FaceId face, EdgeId e);

/// The boundary edges before and after a critical edge lie on one side of
/// its supporting line. Throws NotCritical.
bool check_lemma_bc(const LabeledGraph& g, const Drawing& d, const FaceSet& faces, FaceId face,
                    EdgeId e);

/// Critical edges of every inner face whose neighbours fail check_lemma_bc.
std::vector<EdgeId> lemma_bc_violations(const LabeledGraph& g, const Drawing& d, const FaceSet& faces);

/// Splits an inner face between a topmost and a bottommost horizontal edge
/// (and between a leftmost and a rightmost vertical edge) into two side
/// paths. Whenever every edge of the transverse label on a side path is
/// critical, their number must be odd. Returns false on a violation.
bool check_side_path_parity(const LabeledGraph& g, const Drawing& d, const FaceSet& faces,
                            FaceId face);

}  // namespace hvortho
