#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hvortho/angle_flow.hpp"
#include "hvortho/graph.hpp"

namespace hvortho {

/// Numbered counter-clockwise, so rotating by +1 is a left turn.
enum class Direction : std::uint8_t { East = 0, North = 1, West = 2, South = 3 };

constexpr Direction rotate(Direction d, int quarter_turns_ccw) {
  return static_cast<Direction>(((static_cast<int>(d) + quarter_turns_ccw) % 4 + 4) % 4);
}
constexpr Direction opposite(Direction d) { return rotate(d, 2); }
constexpr bool is_horizontal(Direction d) { return d == Direction::East || d == Direction::West; }
/// Clockwise quarter-turn steps needed to go from `from` to `to`, in 1..4.
constexpr int clockwise_steps(Direction from, Direction to) {
  int s = ((static_cast<int>(from) - static_cast<int>(to)) % 4 + 4) % 4;
  return s == 0 ? 4 : s;
}
const char* to_string(Direction d);

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// One point per vertex; y grows upward.
struct Drawing {
  std::vector<Point> pos;
};

/// Replaces the distinct x values (and y values) by 0,1,2,... in order.
Drawing normalize(const Drawing& d);

/// Assigns every dart a compass direction by propagating the corner angles
/// from dart 0 (H -> East, V -> North). Throws InconsistentPropagation.
std::vector<Direction> orient_darts(const LabeledGraph& g, const FaceSet& faces,
                                    const AngleAssignment& a);

/// Orthogonal representation where each vertex owns up to four ports, one
/// per direction. The rotation and all corner angles are implied by which
/// ports are occupied. Vertices [0, original_vertices) are the input graph.
class OrthoRep {
 public:
  OrthoRep() = default;
  OrthoRep(const LabeledGraph& g, const std::vector<Direction>& dirs);

  int vertex_count() const noexcept { return static_cast<int>(ports_.size()); }
  int dart_count() const noexcept { return static_cast<int>(tail_.size()); }
  int original_vertices() const noexcept { return original_vertices_; }

  VertexId tail(DartId d) const { return tail_[d]; }
  VertexId head(DartId d) const { return tail_[twin(d)]; }
  Direction direction(DartId d) const { return dir_[d]; }
  DartId port(VertexId v, Direction dir) const { return ports_[v][static_cast<int>(dir)]; }
  int degree(VertexId v) const;

  /// Face successor: the next occupied port clockwise from twin(d).
  DartId next(DartId d) const;
  /// Angle in quarter turns of the corner entered by dart d.
  int angle(DartId in) const;
  /// Face walks (each dart once), face on the left.
  std::vector<std::vector<DartId>> face_walks() const;

  VertexId add_vertex();
  /// Adds u -> v leaving u towards `dir`; returns the dart u -> v.
  DartId add_edge(VertexId u, VertexId v, Direction dir);
  /// Subdivides the edge of dart d (u -> v). Dart d becomes u -> w and the
  /// returned dart is w -> v.
  DartId split(DartId d);

 private:
  int original_vertices_ = 0;
  std::vector<std::array<DartId, 4>> ports_;
  std::vector<VertexId> tail_;
  std::vector<Direction> dir_;
};

/// Encloses the drawing in a bounding rectangle and cuts every face into
/// rectangles with dummy vertices and edges. Requires consistent directions.
OrthoRep rectangulate(const LabeledGraph& g, const FaceSet& faces, const AngleAssignment& a,
                      const std::vector<Direction>& dirs);

/// Longest-path layering of x-classes (vertical chains) and y-classes
/// (horizontal chains) of a rectangulated representation. Returns the
/// points of the original vertices, normalized. Throws CyclicConstraint.
Drawing compact(const OrthoRep& refined);

/// Plane pipeline: label check, angle flow, orientation, refinement,
/// compaction. Throws the failing stage's Error.
Drawing draw_plane(const LabeledGraph& g, const RotationSystem& rot);

/// Realizes an already verified assignment.
Drawing realize(const LabeledGraph& g, const FaceSet& faces, const AngleAssignment& a);

}  // namespace hvortho
