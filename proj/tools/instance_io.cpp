#include "instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hvortho::cli {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw InputError(field + ": " + msg);
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 100'000'000) fail(field, "out of range");
  return static_cast<int>(v);
}

int vertex_ref(const json& j, const std::string& field, int n) {
  const int v = as_int(j, field);
  if (v >= n) fail(field, "vertex " + std::to_string(v) + " does not exist");
  return v;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    // The library message already carries "at line L, column C".
    throw InputError(path.string() + ": " + e.what());
  }
}

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "plane") return Mode::Plane;
  if (s == "outerplanar") return Mode::Outerplanar;
  return std::nullopt;
}

const char* to_string(Mode m) { return m == Mode::Plane ? "plane" : "outerplanar"; }

Instance parse_instance(const json& doc, std::optional<Mode> forced) {
  if (!doc.is_object()) fail("<root>", "expected an object");
  Instance inst;
  inst.source = doc;

  if (!doc.contains("vertices")) fail("vertices", "missing");
  const int n = as_int(doc["vertices"], "vertices");
  inst.graph = LabeledGraph(n);

  if (!doc.contains("edges") || !doc["edges"].is_array()) fail("edges", "missing or not a list");
  const json& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string f = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) fail(f, "expected {u, v, label}");
    for (const char* k : {"u", "v", "label"})
      if (!e.contains(k)) fail(f + "." + k, "missing");
    const int u = vertex_ref(e["u"], f + ".u", n);
    const int v = vertex_ref(e["v"], f + ".v", n);
    const json& l = e["label"];
    if (!l.is_string() || (l != "H" && l != "V")) fail(f + ".label", "expected \"H\" or \"V\"");
    inst.graph.add_edge(u, v, l == "H" ? Label::H : Label::V);
  }

  if (forced) {
    inst.mode = *forced;
  } else if (doc.contains("mode")) {
    const json& m = doc["mode"];
    auto parsed = m.is_string() ? parse_mode(m.get<std::string>()) : std::nullopt;
    if (!parsed) fail("mode", "expected \"plane\" or \"outerplanar\"");
    inst.mode = *parsed;
  } else {
    inst.mode = doc.contains("rotation") ? Mode::Plane : Mode::Outerplanar;
  }

  try {
    validate_graph(inst.graph);
  } catch (const Error& e) {
    fail("edges", e.what());
  }

  if (inst.mode == Mode::Outerplanar) {
    if (doc.contains("rotation")) fail("rotation", "not allowed in outerplanar mode");
    return inst;
  }

  if (!doc.contains("rotation")) fail("rotation", "required in plane mode");
  if (!doc.contains("outer_face")) fail("outer_face", "required in plane mode");
  const json& rj = doc["rotation"];
  if (!rj.is_array() || static_cast<int>(rj.size()) != n)
    fail("rotation", "expected one neighbour list per vertex");
  std::vector<std::vector<VertexId>> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const std::string f = "rotation[" + std::to_string(v) + "]";
    if (!rj[v].is_array()) fail(f, "expected a list of vertex ids");
    for (std::size_t i = 0; i < rj[v].size(); ++i)
      nb[v].push_back(vertex_ref(rj[v][i], f + "[" + std::to_string(i) + "]", n));
  }
  const json& oj = doc["outer_face"];
  if (!oj.is_array()) fail("outer_face", "expected a list of vertex ids");
  std::vector<VertexId> outer;
  for (std::size_t i = 0; i < oj.size(); ++i)
    outer.push_back(vertex_ref(oj[i], "outer_face[" + std::to_string(i) + "]", n));

  RotationSystem rot;
  try {
    rot = RotationSystem::from_neighbors(inst.graph, nb);
  } catch (const Error& e) {
    fail("rotation", e.what());
  }
  if (inst.graph.edge_count() > 0) {
    const DartId d = find_face_dart(inst.graph, rot, outer);
    if (d == kNone) fail("outer_face", "does not match any face of the rotation");
    rot.outer_dart = d;
  }
  inst.rot = std::move(rot);
  return inst;
}

json drawing_to_json(const Instance& inst, const Drawing& d) {
  json coords = json::array();
  for (const Point& p : d.pos) coords.push_back({p.x, p.y});
  return json{{"coordinates", coords}, {"instance", inst.source}};
}

std::string format_drawing(const Instance& inst, const Drawing& d) {
  std::string s = "{\n  \"coordinates\": [";
  for (std::size_t i = 0; i < d.pos.size(); ++i)
    s += (i ? ", [" : "[") + std::to_string(d.pos[i].x) + ", " + std::to_string(d.pos[i].y) + "]";
  return s + "],\n  \"instance\": " + inst.source.dump() + "\n}\n";
}

Drawing parse_drawing(const json& doc, int vertex_count) {
  if (!doc.is_object() || !doc.contains("coordinates")) fail("coordinates", "missing");
  const json& c = doc["coordinates"];
  if (!c.is_array() || static_cast<int>(c.size()) != vertex_count)
    fail("coordinates", "expected " + std::to_string(vertex_count) + " points");
  Drawing d;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::string f = "coordinates[" + std::to_string(i) + "]";
    if (!c[i].is_array() || c[i].size() != 2 || !c[i][0].is_number_integer() ||
        !c[i][1].is_number_integer())
      fail(f, "expected [x, y] integers");
    d.pos.push_back({c[i][0].get<std::int64_t>(), c[i][1].get<std::int64_t>()});
  }
  return d;
}

std::string to_svg(const LabeledGraph& g, const Drawing& d) {
  constexpr std::int64_t unit = 40, margin = 30;
  std::int64_t max_x = 0, max_y = 0, min_x = 0, min_y = 0;
  if (!d.pos.empty()) {
    min_x = max_x = d.pos[0].x;
    min_y = max_y = d.pos[0].y;
  }
  for (const Point& p : d.pos) {
    min_x = std::min(min_x, p.x), max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y), max_y = std::max(max_y, p.y);
  }
  auto sx = [&](std::int64_t x) { return margin + (x - min_x) * unit; };
  auto sy = [&](std::int64_t y) { return margin + (max_y - y) * unit; };  // y grows downward in SVG
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << 2 * margin + (max_x - min_x) * unit
    << "\" height=\"" << 2 * margin + (max_y - min_y) * unit << "\" data-unit=\"" << unit << "\" data-margin=\""
    << margin << "\" data-min-x=\"" << min_x << "\" data-max-y=\"" << max_y << "\">\n";
  o << "<g stroke=\"black\" stroke-linecap=\"round\">\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Point a = d.pos[ed.u], b = d.pos[ed.v];
    o << "<line class=\"" << to_char(ed.label) << "\" data-edge=\"" << e << "\" x1=\"" << sx(a.x) << "\" y1=\""
      << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y) << "\" stroke-width=\""
      << (ed.label == Label::H ? 5 : 1.5) << "\"/>\n";
  }
  o << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Point p = d.pos[v];
    o << "<circle data-vertex=\"" << v << "\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
      << "\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n"
      << "<text x=\"" << sx(p.x) + 7 << "\" y=\"" << sy(p.y) - 7 << "\">" << v << "</text>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace hvortho::cli
