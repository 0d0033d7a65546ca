#pragma once

#include <vector>

#include "hvortho/graph.hpp"

namespace hvortho {

/// Corner angles in quarter turns: 1 = pi/2, 2 = pi, 3 = 3pi/2, 4 = 2pi.
/// Indexed by corner id (the incoming dart).
struct AngleAssignment {
  std::vector<int> angle;
};

/// Per-corner classification. `fixed[c]` holds 1, 2 or 4 for corners whose
/// angle follows from the labels, 0 for free corners (mixed labels at a
/// degree-2 vertex, angle 1 or 3).
struct CornerClassification {
  std::vector<int> fixed;
  std::vector<CornerId> free;

  bool is_free(CornerId c) const { return fixed[static_cast<std::size_t>(c)] == 0; }
};

struct FaceSupply {
  FaceId face = kNone;
  int free_count = 0;     // m_f
  int residual = 0;       // R_f: required sum minus fixed angles
  int three_quarter = 0;  // z_f, corners of angle 3
  int quarter = 0;        // z'_f, corners of angle 1 (the flow supply)
};

/// Bipartite face -> vertex network; one unit-capacity arc per free corner.
struct FlowNetwork {
  struct Arc {
    FaceId face;
    VertexId vertex;
    CornerId corner;
  };
  int face_count = 0;
  std::vector<int> supply;       // per face
  std::vector<VertexId> sinks;   // degree-2 mixed vertices, demand 1
  std::vector<Arc> arcs;
};

/// 0/1 flow per network arc.
struct Flow {
  std::vector<int> on_arc;
};

/// Required angle sum of a face walk with k corners.
constexpr int required_face_sum(int k, bool outer) { return outer ? 2 * k + 4 : 2 * k - 4; }

CornerClassification classify_corners(const LabeledGraph& g, const FaceSet& faces);

/// Throws InfeasibleFace(f) when z_f is fractional or outside [0, m_f].
std::vector<FaceSupply> face_supplies(const FaceSet& faces, const CornerClassification& cls);

/// Single-face arithmetic: solves 3z + z' = residual, z + z' = free_count.
FaceSupply solve_face_counts(FaceId face, int residual, int free_count);

/// Throws GlobalImbalance when total supply differs from the sink count.
FlowNetwork build_network(const LabeledGraph& g, const FaceSet& faces,
                          const std::vector<FaceSupply>& supplies,
                          const CornerClassification& cls);

/// Throws Infeasible when no flow saturates every sink.
Flow solve_flow(const FlowNetwork& net);

/// Free corners get 3 - 2y; fixed corners keep their value.
AngleAssignment assignment_from_flow(const FlowNetwork& net, const Flow& flow,
                                     const CornerClassification& cls);

/// Throws VertexSumViolation(v) or FaceSumViolation(f).
void verify_assignment(const LabeledGraph& g, const FaceSet& faces, const AngleAssignment& a);

/// Full decision for a plane graph: classification, supplies, network, flow.
/// Throws the first failing stage's error.
AngleAssignment admissible_assignment(const LabeledGraph& g, const FaceSet& faces);

}  // namespace hvortho
