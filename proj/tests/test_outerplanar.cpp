#include <random>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "hvortho/oracle.hpp"
#include "hvortho/outerplanar.hpp"
#include "hvortho/validate.hpp"
#include "support.hpp"

using namespace hvortho;
using namespace testing_support;

namespace {

bool has_rule(const ConditionReport& r, const std::string& rule) {
  for (const auto& v : r.violations)
    if (v.rule == rule) return true;
  return false;
}

// Two 5-cycles glued at x = 0; each puts x in the middle of a side.
LabeledGraph two_pentagons() {
  return make_graph(9, {{0, 1, 'H'}, {1, 2, 'V'}, {2, 3, 'H'}, {3, 4, 'V'}, {4, 0, 'H'},
                        {0, 5, 'V'}, {5, 6, 'H'}, {6, 7, 'V'}, {7, 8, 'H'}, {8, 0, 'V'}});
}

void require_good(const LabeledGraph& g, const OuterplanarDrawing& od) {
  auto r = validate_drawing(g, od.drawing, &od.rot);
  CHECK(r.ok());
  CHECK(lemma_bc_violations(g, od.drawing, od.canonical.faces).empty());
  for (FaceId f = 0; f < od.canonical.faces.size(); ++f)
    if (!od.canonical.faces.faces[f].outer)
      CHECK(check_side_path_parity(g, od.drawing, od.canonical.faces, f));
}

}  // namespace

TEST_CASE("canonical embedding of a square with a chord") {
  // 0-1-2-3 square split by 1-3.
  auto g = make_graph(4, {{0, 1, 'H'}, {1, 2, 'V'}, {2, 3, 'H'}, {3, 0, 'V'}, {1, 3, 'V'}});
  auto emb = outerplanar_embedding(g);
  CHECK(emb.cycle.size() == 4);
  CHECK(emb.cycle.front() == 0);
  CHECK(emb.faces.size() == 3);
  int chords = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) chords += emb.is_chord(g, e);
  CHECK(chords == 1);
  CHECK(emb.is_chord(g, 4));
  // Outer walk visits the cycle clockwise, i.e. backwards.
  const auto& outer = emb.faces.faces[emb.faces.outer].darts;
  CHECK(outer.size() == 4);
  for (DartId d : outer) {
    int a = emb.position[tail(g, d)], b = emb.position[head(g, d)];
    CHECK((a - b + 4) % 4 == 1);
  }
}

TEST_CASE("embedding rejects non-biconnected and non-outerplanar graphs") {
  auto path = make_graph(3, {{0, 1, 'H'}, {1, 2, 'V'}});
  CHECK_THROWS_AS(outerplanar_embedding(path), Error);
  try {
    outerplanar_embedding(path);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBiconnected);
  }
  auto k4 = k4_graph(0);
  try {
    outerplanar_embedding(k4);
    FAIL("K4 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOuterplanar);
  }
  // K_{2,3}: planar and biconnected but not outerplanar.
  auto k23 = make_graph(5, {{0, 2, 'H'}, {0, 3, 'H'}, {0, 4, 'V'}, {1, 2, 'V'}, {1, 3, 'V'}, {1, 4, 'H'}});
  try {
    outerplanar_embedding(k23);
    FAIL("K23 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOuterplanar);
  }
}

TEST_CASE("embedding recovers the polygon of every small dissection") {
  std::mt19937 rng(11);
  for (int n = 3; n <= 8; ++n)
    for (const auto& chords : polygon_dissections(n)) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto g = dissection_graph(n, chords, 0, perm);
      auto emb = outerplanar_embedding(g);
      CHECK(emb.faces.size() == static_cast<int>(chords.size()) + 2);
      CHECK(emb.faces.faces[emb.faces.outer].degree() == n);
    }
}

TEST_CASE("segments start at a label change") {
  auto g = cycle_graph("HHVHVV");
  auto emb = outerplanar_embedding(g);
  FaceId inner = emb.faces.outer == 0 ? 1 : 0;
  auto segs = face_segments(g, emb.faces, inner);
  REQUIRE(segs.size() == 4);
  int edges = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    CHECK(segs[i].vertices.size() == segs[i].darts.size() + 1);
    CHECK(segs[i].label != segs[(i + 1) % segs.size()].label);
    edges += static_cast<int>(segs[i].darts.size());
  }
  CHECK(edges == 6);
  auto mono = cycle_graph("HHH");
  auto memb = outerplanar_embedding(mono);
  CHECK(face_segments(mono, memb.faces, memb.faces.outer == 0 ? 1 : 0).size() == 1);
}

TEST_CASE("face statistics") {
  auto rect = cycle_graph("HVHV");
  auto emb = outerplanar_embedding(rect);
  for (FaceId f = 0; f < emb.faces.size(); ++f) {
    if (emb.faces.faces[f].outer) continue;
    auto s = face_stats(rect, emb.faces, f);
    CHECK(s.c_v == 0);
    CHECK(s.c_h == 0);
    CHECK(s.e_v + s.e_h == 4);
  }
  // Hexagon H,V,H,H,V,H around 0..5 with the second V edge (3,4) turned
  // inner by a rectangle glued on it.
  auto g = make_graph(8, {{0, 1, 'H'}, {1, 2, 'V'}, {2, 3, 'H'}, {3, 4, 'V'}, {4, 5, 'H'}, {5, 0, 'H'},
                          {3, 6, 'H'}, {6, 7, 'V'}, {7, 4, 'H'}});
  auto e2 = outerplanar_embedding(g);
  bool seen = false;
  for (FaceId f = 0; f < e2.faces.size(); ++f) {
    if (e2.faces.faces[f].degree() != 6 || e2.faces.faces[f].outer) continue;
    auto s = face_stats(g, e2.faces, f);
    CHECK(s.e_v == 2);
    CHECK(s.c_v == 1);
    CHECK(is_critical(g, e2.faces, f, 3));
    seen = true;
  }
  CHECK(seen);
}

TEST_CASE("face statistics match a recount on random triangulated polygons") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    // Fan triangulation from corner 0 plus random labels.
    Chords chords;
    for (int b = 2; b < n - 1; ++b) chords.push_back({0, b});
    auto g = dissection_graph(n, chords, rng(), {});
    auto emb = outerplanar_embedding(g);
    for (FaceId f = 0; f < emb.faces.size(); ++f) {
      if (emb.faces.faces[f].outer) continue;
      const auto& w = emb.faces.faces[f].darts;
      const std::size_t k = w.size();
      FaceStats want;
      for (std::size_t i = 0; i < k; ++i) {
        const EdgeId e = edge_of(w[i]);
        const Label l = g.edge(e).label;
        const bool inner = e >= n;  // chords come after the cycle edges
        const Label a = label_of(g, w[(i + k - 1) % k]), b = label_of(g, w[(i + 1) % k]);
        const bool crit = inner && a == b && a != l;
        (l == Label::V ? want.e_v : want.e_h)++;
        (l == Label::V ? want.c_v : want.c_h) += crit;
      }
      auto got = face_stats(g, emb.faces, f);
      CHECK(got.e_v == want.e_v);
      CHECK(got.e_h == want.e_h);
      CHECK(got.c_v == want.c_v);
      CHECK(got.c_h == want.c_h);
    }
  }
}

TEST_CASE("conditions on small examples") {
  CHECK(check_conditions(cycle_graph("HVHV")).ok());
  for (unsigned mask = 0; mask < 8; ++mask) CHECK(has_rule(check_conditions(cycle_graph(3, mask)), "C1"));
  CHECK(has_rule(check_conditions(cycle_graph("HHVV")), "C1"));
  // Three critical V chords around an alternating hexagon.
  auto odd = check_conditions(fan(3));
  CHECK(has_rule(odd, "C2"));
  CHECK_FALSE(has_rule(odd, "C1"));
  CHECK(check_conditions(fan(2)).ok());
  // Three H edges at one vertex.
  auto c3 = make_graph(4, {{0, 1, 'H'}, {1, 2, 'V'}, {2, 3, 'H'}, {3, 0, 'H'}, {0, 2, 'H'}});
  auto r = check_conditions(c3);
  CHECK(has_rule(r, "C3"));
}

TEST_CASE("degree-4 rule flags what C1-C3 miss") {
  // Nine vertices; the degree-4 vertex cannot be drawn in any embedding
  // although every face passes C1-C3.
  auto g = make_graph(9, {{0, 7, 'H'}, {7, 6, 'V'}, {6, 8, 'V'}, {8, 5, 'H'}, {5, 2, 'V'}, {2, 1, 'V'},
                          {1, 4, 'H'}, {4, 3, 'V'}, {3, 0, 'V'}, {6, 3, 'H'}, {2, 3, 'H'}});
  auto r = check_conditions(g);
  CHECK(has_rule(r, "D4"));
  CHECK_FALSE(grid_search_drawing(g, {20, 20}).has_value());
  // A degree-4 vertex whose canonical rotation is H,H,V,V but which flips
  // into an alternating one.
  auto flip = make_graph(10, {{4, 7, 'V'}, {7, 3, 'H'}, {3, 1, 'V'}, {1, 6, 'V'}, {6, 9, 'H'}, {9, 5, 'V'},
                              {5, 8, 'H'}, {8, 0, 'V'}, {0, 2, 'H'}, {2, 4, 'V'}, {4, 1, 'H'}, {1, 5, 'H'}});
  CHECK(check_conditions(flip).ok());
  CHECK(outerplanar_drawable(flip));
  CHECK(grid_search_drawing(flip, {20, 20}).has_value());
  require_good(flip, draw_outerplanar(flip));
}

TEST_CASE("per-block conditions accept the glued pentagons that cannot be drawn") {
  auto g = two_pentagons();
  CHECK(check_conditions_per_block(g).ok());
  CHECK_THROWS_AS(check_conditions(g), Error);
  CHECK_FALSE(grid_search_drawing(g, {20, 20}).has_value());
  // Each block on its own is drawable.
  auto h1 = cycle_graph("HVHVH");
  CHECK(grid_search_drawing(h1).has_value());
}

TEST_CASE("decision matches the grid oracle on every dissection up to six corners") {
  int positives = 0, total = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& chords : polygon_dissections(n)) {
      const int m = dissection_edges(n, chords);
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        auto g = dissection_graph(n, chords, mask);
        const bool oracle = grid_search_drawing(g, {20, 20}).has_value();
        CHECK(outerplanar_drawable(g) == oracle);
        CHECK(check_conditions(g).ok() == oracle);
        positives += oracle;
        ++total;
      }
    }
  CHECK(positives > 0);
  CHECK(total == 14840);
}

TEST_CASE("drawing a single rectangle") {
  auto g = cycle_graph("HVHV");
  auto od = draw_outerplanar(g);
  require_good(g, od);
  CHECK(od.steps.empty());
  std::set<std::int64_t> xs, ys;
  for (Point p : od.drawing.pos) xs.insert(p.x), ys.insert(p.y);
  CHECK(xs.size() == 2);
  CHECK(ys.size() == 2);
}

TEST_CASE("two squares on a shared critical edge sit side by side") {
  auto g = ladder(2);
  auto od = draw_outerplanar(g);
  require_good(g, od);
  REQUIRE(od.steps.size() == 1);
  CHECK(od.steps[0].placement == Placement::Beside);
  CHECK(od.steps[0].shared_case == 3);
  CHECK(g.edge(od.steps[0].shared).label == Label::V);
}

TEST_CASE("nested placement when the parent needs reflex corners") {
  // Alternating octagon with a rectangle on each of its four V edges: two
  // reflex corners must come from one nested rectangle.
  auto g = fan(4);
  REQUIRE(check_conditions(g).ok());
  auto od = draw_outerplanar(g);
  require_good(g, od);
  int inside = 0;
  for (const auto& s : od.steps) inside += s.placement == Placement::Inside;
  CHECK(inside >= 1);
  CHECK_THROWS_AS(draw_outerplanar(fan(3)), Error);
}

TEST_CASE("ladders and glued families up to fifty faces") {
  for (int k : {1, 5, 17, 50}) {
    auto g = ladder(k);
    auto od = draw_outerplanar(g);
    require_good(g, od);
    CHECK(static_cast<int>(od.steps.size()) == k - 1);
  }
  for (int k : {2, 9, 30}) {
    auto g = bent_ladder(k);
    REQUIRE(check_conditions(g).ok());
    require_good(g, draw_outerplanar(g));
  }
  std::mt19937 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_glued(50, rng);
    REQUIRE(check_conditions(g).ok());
    require_good(g, draw_outerplanar(g));
  }
}

TEST_CASE("shared-edge cases cover one, two and three") {
  std::mt19937 rng(4);
  std::set<int> cases;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_glued(20, rng);
    for (const auto& s : draw_outerplanar(g).steps) cases.insert(s.shared_case);
  }
  CHECK(cases.count(1) == 1);
  CHECK(cases.count(2) == 1);
  CHECK(cases.count(3) == 1);
}

TEST_CASE("draw_face closes a polygon with the requested reflex corners") {
  auto g = cycle_graph("HVHVHV");
  auto emb = outerplanar_embedding(g);
  FaceId f = emb.faces.outer == 0 ? 1 : 0;
  std::vector<bool> reflex(6, false);
  reflex[2] = true;
  auto fd = draw_face(g, emb.faces, f, reflex);
  REQUIRE(fd.points.size() == 6);
  // Shoelace area is positive for a counter-clockwise polygon.
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    Point a = fd.points[i], b = fd.points[(i + 1) % 6];
    twice += a.x * b.y - b.x * a.y;
  }
  CHECK(twice > 0);
  for (Point p : fd.points) {
    CHECK(p.x >= fd.flag.p.x);
    CHECK(p.x <= fd.flag.r.x);
    CHECK(p.y >= fd.flag.p.y);
    CHECK(p.y <= fd.flag.r.y);
  }
  CHECK_FALSE(fd.flag.post.has_value());
  auto rect = cycle_graph("HVHV");
  auto re = outerplanar_embedding(rect);
  auto fr = draw_face(rect, re.faces, re.faces.outer == 0 ? 1 : 0, std::vector<bool>(4, false));
  CHECK(fr.points.size() == 4);
}

TEST_CASE("gadget transform") {
  auto plain = cycle_graph("HVHV");
  auto same = transform_degree4(plain);
  CHECK(same.maps.empty());
  CHECK(same.graph.edge_count() == 4);

  // Star: centre 0, V to 1 and 3, H to 2 and 4.
  auto star = make_graph(5, {{0, 1, 'V'}, {0, 2, 'H'}, {0, 3, 'V'}, {0, 4, 'H'}});
  auto t = transform_degree4(star);
  REQUIRE(t.maps.size() == 1);
  CHECK(t.graph.vertex_count() == 12);
  for (int d : t.graph.degrees()) CHECK(d <= 3);
  auto sketch = rotation_from_sketch(star, {{0, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 0}}, {0, 1});
  auto rot = gadget_rotation(star, sketch, t);
  CHECK(check_label_degrees(t.graph, rot).ok());
  CHECK_NOTHROW(faces_from_rotation(t.graph, rot));

  auto bad = make_graph(5, {{0, 1, 'V'}, {0, 2, 'H'}, {0, 3, 'H'}, {0, 4, 'H'}});
  try {
    transform_degree4(bad);
    FAIL("3H1V accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAlternatingDegree4);
  }
  auto hhvv = rotation_from_sketch(star, {{0, 0}, {0, 1}, {-1, 0}, {1, 0}, {0, -1}}, {0, 1});
  try {
    transform_degree4(star, &hhvv);
    FAIL("non-alternating rotation accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAlternatingDegree4);
  }
}

TEST_CASE("gadget drawing round trip") {
  auto star = make_graph(5, {{0, 1, 'V'}, {0, 2, 'H'}, {0, 3, 'V'}, {0, 4, 'H'}});
  auto d = grid_search_drawing(star);
  REQUIRE(d.has_value());
  auto t = transform_degree4(star);
  auto big = expand_degree4_drawing(star, t, *d);
  CHECK(validate_drawing(t.graph, big).ok());
  auto back = recover_degree4_drawing(star, t, big);
  CHECK(validate_drawing(star, back).ok());
  std::set<Direction> dirs;
  for (EdgeId e = 0; e < 4; ++e) {
    auto s = segment_direction(back.pos[0], back.pos[star.edge(e).v]);
    REQUIRE(s.has_value());
    dirs.insert(*s);
  }
  CHECK(dirs.size() == 4);
  // Oracle witness of the transformed graph collapses as well.
  auto w = grid_search_drawing(t.graph, {20, 20});
  REQUIRE(w.has_value());
  CHECK(validate_drawing(star, recover_degree4_drawing(star, t, *w)).ok());
}

TEST_CASE("gadget pipeline on an outerplanar graph with a degree-4 vertex") {
  auto g = make_graph(10, {{4, 7, 'V'}, {7, 3, 'H'}, {3, 1, 'V'}, {1, 6, 'V'}, {6, 9, 'H'}, {9, 5, 'V'},
                           {5, 8, 'H'}, {8, 0, 'V'}, {0, 2, 'H'}, {2, 4, 'V'}, {4, 1, 'H'}, {1, 5, 'H'}});
  auto od = draw_outerplanar(g);
  auto t = transform_degree4(g, &od.rot);
  auto big = expand_degree4_drawing(g, t, od.drawing);
  CHECK(validate_drawing(t.graph, big).ok());
  auto back = recover_degree4_drawing(g, t, big);
  CHECK(validate_drawing(g, back).ok());
}
