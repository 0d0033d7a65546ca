#include <doctest.h>

#include "hvortho/oracle.hpp"
#include "hvortho/ortho_layout.hpp"
#include "hvortho/validate.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

bool drawable(const LabeledGraph& g, const RotationSystem& rot) {
  try {
    admissible_assignment(g, faces_from_rotation(g, rot));
    return true;
  } catch (const Error&) {
    return false;
  }
}

void check_pipeline(const LabeledGraph& g, const RotationSystem& rot) {
  const bool flow = drawable(g, rot);
  const bool brute = enumerate_assignments(g, rot).exists;
  REQUIRE(flow == brute);
  if (!flow) return;
  Drawing d = draw_plane(g, rot);
  auto report = validate_drawing(g, d, &rot);
  CHECK(report.ok());
}

}  // namespace

TEST_CASE("directions") {
  CHECK(rotate(Direction::East, 1) == Direction::North);
  CHECK(rotate(Direction::East, -1) == Direction::South);
  CHECK(opposite(Direction::North) == Direction::South);
  CHECK(clockwise_steps(Direction::North, Direction::East) == 1);
  CHECK(clockwise_steps(Direction::East, Direction::North) == 3);
  CHECK(clockwise_steps(Direction::West, Direction::West) == 4);
}

TEST_CASE("orient_darts on a rectangle and a single edge") {
  auto g = cycle_graph("HVHV");
  auto rot = cycle_rotation(g);
  auto faces = faces_from_rotation(g, rot);
  auto a = admissible_assignment(g, faces);
  auto dirs = orient_darts(g, faces, a);
  for (DartId d = 0; d < 8; ++d) {
    CHECK(dirs[twin(d)] == opposite(dirs[d]));
    CHECK(is_horizontal(dirs[d]) == (label_of(g, d) == Label::H));
  }
  auto e = make_graph(2, {{0, 1, 'H'}});
  auto erot = RotationSystem::from_neighbors(e, {{1}, {0}});
  erot.outer_dart = 0;
  auto ef = faces_from_rotation(e, erot);
  auto ed = orient_darts(e, ef, admissible_assignment(e, ef));
  CHECK(ed[0] == Direction::East);
  CHECK(ed[1] == Direction::West);
}

TEST_CASE("rectangle compacts to the unit square") {
  auto g = cycle_graph("HVHV");
  auto rot = cycle_rotation(g);
  Drawing d = draw_plane(g, rot);
  std::vector<Point> pts = d.pos;
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("collinear path gets consecutive x") {
  auto g = make_graph(4, {{0, 1, 'H'}, {1, 2, 'H'}, {2, 3, 'H'}});
  auto rot = RotationSystem::from_neighbors(g, {{1}, {0, 2}, {1, 3}, {2}});
  rot.outer_dart = 0;
  Drawing d = draw_plane(g, rot);
  for (VertexId v = 0; v < 4; ++v) CHECK(d.pos[v].y == d.pos[0].y);
  std::vector<std::int64_t> xs;
  for (auto p : d.pos) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  CHECK(xs == std::vector<std::int64_t>{0, 1, 2, 3});
}

TEST_CASE("L-shaped and staircase faces") {
  SUBCASE("L shape") {
    auto g = cycle_graph("HVHVHV");
    auto rot = cycle_rotation(g);
    Drawing d = draw_plane(g, rot);
    CHECK(validate_drawing(g, d, &rot).ok());
  }
  SUBCASE("staircase of ten") {
    auto g = cycle_graph("HVHVHVHVHV");
    auto rot = cycle_rotation(g);
    Drawing d = draw_plane(g, rot);
    CHECK(validate_drawing(g, d, &rot).ok());
  }
}

TEST_CASE("two-sided cycle is infeasible") {
  auto g = cycle_graph("HHVV");
  try {
    draw_plane(g, cycle_rotation(g));
    FAIL("expected InfeasibleFace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfeasibleFace);
  }
}

TEST_CASE("nested rectangles") {
  // Outer rectangle 0,1,8,2,3 and inner square 4..7 joined by a spoke.
  auto h = make_graph(9, {{0, 1, 'H'}, {1, 8, 'V'}, {8, 2, 'V'}, {2, 3, 'H'}, {3, 0, 'V'},
                          {4, 5, 'H'}, {5, 6, 'V'}, {6, 7, 'H'}, {7, 4, 'V'}, {8, 5, 'H'}});
  auto rot = rotation_from_sketch(
      h, {{0, 0}, {10, 0}, {10, 10}, {0, 10}, {3, 4}, {6, 4}, {6, 6}, {3, 6}, {10, 5}},
      {0, 1, 8, 2, 3});
  Drawing d = draw_plane(h, rot);
  CHECK(validate_drawing(h, d, &rot).ok());
  std::int64_t ox = std::max(d.pos[1].x, d.pos[0].x) - std::min(d.pos[1].x, d.pos[0].x);
  std::int64_t ix = std::max(d.pos[5].x, d.pos[4].x) - std::min(d.pos[5].x, d.pos[4].x);
  CHECK(ox > ix);
}

TEST_CASE("plane catalog: flow equals enumeration, drawings validate") {
  for (int k = 3; k <= 8; ++k)
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      auto g = cycle_graph(k, mask);
      auto rot = cycle_rotation(g);
      check_pipeline(g, rot);
      rot.outer_dart = twin(rot.outer_dart);
      check_pipeline(g, rot);
    }
  for (unsigned mask = 0; mask < 64; ++mask) {
    auto t = theta_graph(mask);
    check_pipeline(t, theta_rotation(t));
    auto k = k4_graph(mask);
    check_pipeline(k, k4_rotation(k));
  }
}
