#include "hvortho/angle_flow.hpp"

#include <string>
#include <unordered_map>

#include "hvortho/max_flow.hpp"

namespace hvortho {

CornerClassification classify_corners(const LabeledGraph& g, const FaceSet& faces) {
  const auto deg = g.degrees();
  CornerClassification cls;
  cls.fixed.assign(faces.next.size(), 0);
  for (CornerId c = 0; c < static_cast<CornerId>(faces.next.size()); ++c) {
    VertexId v = head(g, c);
    DartId out = faces.next[c];
    if (deg[v] == 1) {
      cls.fixed[c] = 4;
    } else if (label_of(g, c) == label_of(g, out)) {
      cls.fixed[c] = 2;
    } else if (deg[v] >= 3) {
      cls.fixed[c] = 1;
    } else {
      cls.free.push_back(c);
    }
  }
  return cls;
}

FaceSupply solve_face_counts(FaceId face, int residual, int free_count) {
  FaceSupply s{face, free_count, residual, 0, 0};
  const int twice_z = residual - free_count;
  if (twice_z % 2 != 0 || twice_z < 0 || twice_z / 2 > free_count)
    throw Error(ErrorKind::InfeasibleFace, face,
                "infeasible face f" + std::to_string(face) + ": residual " +
                    std::to_string(residual) + " cannot be split over " +
                    std::to_string(free_count) + " free corners");
  s.three_quarter = twice_z / 2;
  s.quarter = free_count - s.three_quarter;
  return s;
}

std::vector<FaceSupply> face_supplies(const FaceSet& faces, const CornerClassification& cls) {
  std::vector<FaceSupply> out;
  out.reserve(faces.faces.size());
  for (FaceId f = 0; f < faces.size(); ++f) {
    const Face& face = faces.faces[f];
    int fixed_sum = 0;
    int free_count = 0;
    for (DartId d : face.darts) {
      if (cls.is_free(d)) ++free_count;
      else fixed_sum += cls.fixed[d];
    }
    int residual = required_face_sum(face.degree(), face.outer) - fixed_sum;
    out.push_back(solve_face_counts(f, residual, free_count));
  }
  return out;
}

FlowNetwork build_network(const LabeledGraph& g, const FaceSet& faces,
                          const std::vector<FaceSupply>& supplies,
                          const CornerClassification& cls) {
  FlowNetwork net;
  net.face_count = faces.size();
  net.supply.assign(static_cast<std::size_t>(faces.size()), 0);
  long total_supply = 0;
  for (const FaceSupply& s : supplies) {
    net.supply[s.face] = s.quarter;
    total_supply += s.quarter;
  }
  std::vector<bool> is_sink(static_cast<std::size_t>(g.vertex_count()), false);
  for (CornerId c : cls.free) {
    VertexId v = head(g, c);
    if (!is_sink[v]) {
      is_sink[v] = true;
      net.sinks.push_back(v);
    }
    net.arcs.push_back({faces.face_of_dart[c], v, c});
  }
  if (total_supply != static_cast<long>(net.sinks.size()))
    throw Error(ErrorKind::GlobalImbalance, kNone,
                "global imbalance: face supply " + std::to_string(total_supply) + " vs " +
                    std::to_string(net.sinks.size()) + " degree-2 mixed vertices");
  return net;
}

Flow solve_flow(const FlowNetwork& net) {
  Flow flow;
  flow.on_arc.assign(net.arcs.size(), 0);
  if (net.sinks.empty()) return flow;

  std::unordered_map<VertexId, int> sink_index;
  for (std::size_t i = 0; i < net.sinks.size(); ++i)
    sink_index[net.sinks[i]] = static_cast<int>(i);
  const int source = 0;
  const int target = 1;
  const int face_base = 2;
  const int sink_base = face_base + net.face_count;
  MaxFlow mf(sink_base + static_cast<int>(net.sinks.size()));
  for (FaceId f = 0; f < net.face_count; ++f)
    if (net.supply[f] > 0) mf.add_arc(source, face_base + f, net.supply[f]);
  std::vector<int> arc_ids;
  arc_ids.reserve(net.arcs.size());
  for (const auto& a : net.arcs)
    arc_ids.push_back(mf.add_arc(face_base + a.face, sink_base + sink_index.at(a.vertex), 1));
  for (std::size_t i = 0; i < net.sinks.size(); ++i)
    mf.add_arc(sink_base + static_cast<int>(i), target, 1);

  long value = mf.run(source, target);
  if (value != static_cast<long>(net.sinks.size()))
    throw Error(ErrorKind::Infeasible, kNone,
                "flow infeasible: max flow " + std::to_string(value) + " < demand " +
                    std::to_string(net.sinks.size()));
  for (std::size_t i = 0; i < arc_ids.size(); ++i)
    flow.on_arc[i] = static_cast<int>(mf.flow(arc_ids[i]));
  return flow;
}

AngleAssignment assignment_from_flow(const FlowNetwork& net, const Flow& flow,
                                     const CornerClassification& cls) {
  AngleAssignment a;
  a.angle = cls.fixed;
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    a.angle[net.arcs[i].corner] = 3 - 2 * flow.on_arc[i];
  return a;
}

void verify_assignment(const LabeledGraph& g, const FaceSet& faces, const AngleAssignment& a) {
  std::vector<int> vsum(static_cast<std::size_t>(g.vertex_count()), 0);
  for (CornerId c = 0; c < static_cast<CornerId>(a.angle.size()); ++c) {
    if (a.angle[c] < 1 || a.angle[c] > 4)
      throw Error(ErrorKind::VertexSumViolation, head(g, c),
                  "corner " + std::to_string(c) + " has angle outside 1..4");
    vsum[head(g, c)] += a.angle[c];
  }
  const auto deg = g.degrees();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (deg[v] > 0 && vsum[v] != 4)
      throw Error(ErrorKind::VertexSumViolation, v,
                  "angles around vertex " + std::to_string(v) + " sum to " +
                      std::to_string(vsum[v]) + " quarter turns");
  for (FaceId f = 0; f < faces.size(); ++f) {
    const Face& face = faces.faces[f];
    int sum = 0;
    for (DartId d : face.darts) sum += a.angle[d];
    if (sum != required_face_sum(face.degree(), face.outer))
      throw Error(ErrorKind::FaceSumViolation, f,
                  "face f" + std::to_string(f) + " angles sum to " + std::to_string(sum));
  }
}

AngleAssignment admissible_assignment(const LabeledGraph& g, const FaceSet& faces) {
  auto cls = classify_corners(g, faces);
  auto supplies = face_supplies(faces, cls);
  auto net = build_network(g, faces, supplies, cls);
  auto flow = solve_flow(net);
  auto a = assignment_from_flow(net, flow, cls);
  verify_assignment(g, faces, a);
  return a;
}

}  // namespace hvortho
