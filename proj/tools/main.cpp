// hvortho: decide, draw, check and validate HV-restricted instances.
//
// Exit codes: 0 drawable / valid / conditions hold, 1 the opposite,
// 2 malformed input, unsupported instance or exhausted budget.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "hvortho/angle_flow.hpp"
#include "hvortho/oracle.hpp"
#include "hvortho/ortho_layout.hpp"
#include "hvortho/outerplanar.hpp"
#include "hvortho/validate.hpp"
#include "instance_io.hpp"

namespace fs = std::filesystem;
using namespace hvortho;
using namespace hvortho::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string text;
  json data = json::object();
};

struct Options {
  std::string input;
  std::string drawing;
  std::string mode;
  std::string out;
  std::string format = "coords";
  bool allow_mirror = false;
  bool json_output = false;
  OracleBudget budget;
};

// Errors that say the instance has no drawing, as opposed to bad input.
bool means_not_drawable(ErrorKind k) {
  switch (k) {
    case ErrorKind::LabelDegreeViolation:
    case ErrorKind::NonAlternatingDegree4:
    case ErrorKind::InfeasibleFace:
    case ErrorKind::GlobalImbalance:
    case ErrorKind::Infeasible:
    case ErrorKind::VertexSumViolation:
    case ErrorKind::FaceSumViolation:
    case ErrorKind::ConditionsViolated:
      return true;
    default:
      return false;
  }
}

Outcome from_error(const Error& e) {
  Outcome o;
  o.data["error"] = to_string(e.kind());
  o.data["element"] = e.element();
  o.data["message"] = e.what();
  if (means_not_drawable(e.kind())) {
    o.code = 1;
    o.text = std::string("NOT DRAWABLE: ") + e.what();
    o.data["drawable"] = false;
  } else {
    o.code = 2;
    o.text = std::string("ERROR: ") + to_string(e.kind()) + ": " + e.what();
  }
  return o;
}

Outcome drawable() {
  Outcome o;
  o.text = "DRAWABLE";
  o.data["drawable"] = true;
  return o;
}

std::string describe(const Violation& v) {
  std::string s = v.rule + " on " + v.element + " " + std::to_string(v.id);
  if (!v.detail.empty()) s += ": " + v.detail;
  return s;
}

json violations_json(const ConditionReport& r) {
  json a = json::array();
  for (const Violation& v : r.violations)
    a.push_back({{"rule", v.rule}, {"element", v.element}, {"id", v.id}, {"detail", v.detail}});
  return a;
}

bool has_degree4(const LabeledGraph& g) {
  auto deg = g.degrees();
  return std::find(deg.begin(), deg.end(), 4) != deg.end();
}

// Plane mode decision: the drawing pipeline up to the angle assignment.
void decide_plane(const Instance& inst) {
  const LabeledGraph& g = inst.graph;
  if (g.edge_count() == 0) {
    if (g.vertex_count() > 1) throw Error(ErrorKind::Disconnected, kNone, "plane graph must be connected");
    return;
  }
  if (connected_components(g) != 1) throw Error(ErrorKind::Disconnected, kNone, "plane graph must be connected");
  auto labels = check_label_degrees(g, *inst.rot);
  if (!labels.ok())
    throw Error(ErrorKind::LabelDegreeViolation, labels.violations.front().id,
                "label-degree violation: " + describe(labels.violations.front()));
  admissible_assignment(g, faces_from_rotation(g, *inst.rot));
}

Drawing draw_instance(const Instance& inst) {
  const LabeledGraph& g = inst.graph;
  if (inst.mode == Mode::Plane) return draw_plane(g, *inst.rot);
  OuterplanarDrawing od = draw_outerplanar(g);
  if (!has_degree4(g)) return od.drawing;
  // Degree-4 vertices: pass through the gadget graph and back.
  GadgetGraph t = transform_degree4(g, &od.rot);
  return recover_degree4_drawing(g, t, expand_degree4_drawing(g, t, od.drawing));
}

Outcome cmd_decide(const Instance& inst) {
  try {
    if (inst.mode == Mode::Plane) {
      decide_plane(inst);
      return drawable();
    }
    ConditionReport r = check_conditions(inst.graph);
    if (r.ok()) return drawable();
    Outcome o;
    o.code = 1;
    o.text = "NOT DRAWABLE: " + describe(r.violations.front());
    o.data["drawable"] = false;
    o.data["violations"] = violations_json(r);
    return o;
  } catch (const Error& e) {
    Outcome o = from_error(e);
    if (e.kind() == ErrorKind::NotBiconnected)
      o.text += " (the conditions cover biconnected graphs; the oracle subcommand decides small instances)";
    return o;
  }
}

Outcome cmd_check(const Instance& inst) {
  Outcome o;
  try {
    ConditionReport r;
    if (inst.mode == Mode::Plane) {
      r = check_label_degrees(inst.graph, *inst.rot);
      if (r.ok()) {
        try {
          decide_plane(inst);
        } catch (const Error& e) {
          if (!means_not_drawable(e.kind())) throw;
          r.violations.push_back({"angle-flow", "face", e.element(), e.what()});
        }
      }
    } else {
      r = is_biconnected(inst.graph) ? check_conditions(inst.graph) : check_conditions_per_block(inst.graph);
      o.data["per_block"] = !is_biconnected(inst.graph);
    }
    o.data["ok"] = r.ok();
    o.data["violations"] = violations_json(r);
    o.code = r.ok() ? 0 : 1;
    o.text = r.ok() ? "OK" : "VIOLATED";
    for (const Violation& v : r.violations) o.text += "\n  " + describe(v);
  } catch (const Error& e) {
    return from_error(e);
  }
  return o;
}

Outcome cmd_oracle(const Instance& inst, const OracleBudget& budget) {
  try {
    Outcome o;
    std::optional<Drawing> witness;
    bool exists = false;
    if (inst.mode == Mode::Plane) {
      exists = enumerate_assignments(inst.graph, *inst.rot, budget).exists;
      o.data["oracle"] = "enumerate_assignments";
    } else {
      witness = grid_search_drawing(inst.graph, budget);
      exists = witness.has_value();
      o.data["oracle"] = "grid_search_drawing";
    }
    o.data["drawable"] = exists;
    if (witness) o.data["witness"] = drawing_to_json(inst, *witness)["coordinates"];
    o.code = exists ? 0 : 1;
    o.text = exists ? "DRAWABLE" : "NOT DRAWABLE: oracle found no drawing";
    return o;
  } catch (const Error& e) {
    return from_error(e);
  }
}

Outcome cmd_draw(const Instance& inst, const Options& opt) {
  Drawing d;
  try {
    d = draw_instance(inst);
  } catch (const Error& e) {
    return from_error(e);
  }
  const std::string body =
      opt.format == "svg" ? to_svg(inst.graph, d) : format_drawing(inst, d);
  Outcome o = drawable();
  if (opt.out.empty()) {
    std::cout << body;
    o.text.clear();
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!(f << body)) {
      o.code = 2;
      o.text = "ERROR: cannot write " + opt.out;
      return o;
    }
    o.data["out"] = opt.out;
  }
  return o;
}

Outcome cmd_validate(const Instance& inst, const json& drawing_doc, bool allow_mirror) {
  const Drawing d = parse_drawing(drawing_doc, inst.graph.vertex_count());
  ValidateOptions vo;
  vo.allow_mirror = allow_mirror;
  const RotationSystem* rot = inst.rot ? &*inst.rot : nullptr;
  ValidationReport r = validate_drawing(inst.graph, d, rot, vo);
  Outcome o;
  std::vector<std::string> problems;
  for (EdgeId e : r.label_violations) problems.push_back("edge " + std::to_string(e) + " off its axis");
  for (auto [a, b] : r.coincident_vertices)
    problems.push_back("vertices " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  for (auto [a, b] : r.crossings)
    problems.push_back("edges " + std::to_string(a) + " and " + std::to_string(b) + " cross");
  for (auto [v, e] : r.vertex_on_edge)
    problems.push_back("vertex " + std::to_string(v) + " lies on edge " + std::to_string(e));
  for (VertexId v : r.rotation_mismatches) problems.push_back("rotation differs at vertex " + std::to_string(v));
  if (!r.outer_face_ok) problems.push_back("outer face differs");
  for (EdgeId e : r.lemma_bc_violations)
    problems.push_back("critical edge " + std::to_string(e) + " has neighbours on both sides");
  o.code = r.ok() ? 0 : 1;
  o.text = r.ok() ? (r.mirrored ? "VALID (mirrored)" : "VALID") : "INVALID";
  for (const auto& p : problems) o.text += "\n  " + p;
  o.data = {{"valid", r.ok()}, {"mirrored", r.mirrored}, {"problems", problems}};
  json crossings = json::array();
  for (auto [a, b] : r.crossings) crossings.push_back({a, b});
  o.data["crossings"] = crossings;
  return o;
}

std::optional<Mode> forced_mode(const Options& opt) {
  if (opt.mode.empty()) return std::nullopt;
  auto m = parse_mode(opt.mode);
  if (!m) throw InputError("--mode: expected plane or outerplanar");
  return m;
}

Outcome run_one(const std::string& command, const fs::path& path, const Options& opt) {
  try {
    const json doc = read_json_file(path);
    if (command == "validate") {
      // A drawing file carries its instance; a separate instance file wins.
      if (opt.drawing.empty()) {
        if (!doc.contains("instance")) throw InputError("instance: missing from drawing file");
        return cmd_validate(parse_instance(doc["instance"], forced_mode(opt)), doc, opt.allow_mirror);
      }
      return cmd_validate(parse_instance(doc, forced_mode(opt)), read_json_file(opt.drawing), opt.allow_mirror);
    }
    const Instance inst = parse_instance(doc, forced_mode(opt));
    if (command == "decide") return cmd_decide(inst);
    if (command == "check") return cmd_check(inst);
    if (command == "oracle") return cmd_oracle(inst, opt.budget);
    return cmd_draw(inst, opt);
  } catch (const InputError& e) {
    Outcome o;
    o.code = 2;
    o.text = std::string("ERROR: ") + e.what();
    o.data["error"] = "InputError";
    o.data["message"] = e.what();
    return o;
  } catch (const Error& e) {
    return from_error(e);
  }
}

void print(const Outcome& o, const Options& opt, const std::string& prefix = {}) {
  if (opt.json_output) {
    json j = o.data;
    j["exit"] = o.code;
    if (!prefix.empty()) j["file"] = prefix;
    std::cout << j.dump() << "\n";
  } else if (!o.text.empty()) {
    (o.code == 2 ? std::cerr : std::cout) << (prefix.empty() ? "" : prefix + ": ") << o.text << "\n";
  }
}

// Directory input: every *.json file, processed in parallel, reported in
// name order. Exit code is the largest one seen.
int run_batch(const std::string& command, const fs::path& dir, const Options& opt) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Outcome> results(files.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < files.size(); i = next++) results[i] = run_one(command, files[i], opt);
    });
  for (auto& t : pool) t.join();
  int code = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    print(results[i], opt, files[i].filename().string());
    code = std::max(code, results[i].code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide and draw orthogonal drawings of graphs with H/V edge labels"};
  app.require_subcommand(1);
  Options opt;
  opt.budget.max_vertices = 12;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", opt.mode, "plane or outerplanar (overrides the file)");
    sub->add_flag("--json", opt.json_output, "machine-readable output");
  };
  auto* decide = app.add_subcommand("decide", "print DRAWABLE or NOT DRAWABLE: <reason>");
  auto* draw = app.add_subcommand("draw", "construct a drawing");
  auto* check = app.add_subcommand("check", "report the drawability conditions");
  auto* oracle = app.add_subcommand("oracle", "decide by exhaustive search");
  auto* validate = app.add_subcommand("validate", "certify a drawing file");
  for (auto* sub : {decide, draw, check, oracle})
    sub->add_option("instance", opt.input, "instance file, or a directory of them")->required();
  validate->add_option("input", opt.input, "instance file, or a drawing file with its instance")->required();
  validate->add_option("drawing", opt.drawing, "drawing file");
  for (auto* sub : {decide, draw, check, oracle, validate}) add_common(sub);
  draw->add_option("--out", opt.out, "output file (default stdout)");
  draw->add_option("--format", opt.format, "svg or coords")->check(CLI::IsMember({"svg", "coords"}));
  validate->add_flag("--allow-mirror", opt.allow_mirror, "accept the reflected rotation");
  oracle->add_option("--budget-free-corners", opt.budget.max_free_corners, "enumeration limit");
  oracle->add_option("--budget-vertices", opt.budget.max_vertices, "grid search vertex limit");
  oracle->add_option("--budget-grid", opt.budget.max_grid, "coordinate values per axis (0 = vertex count)");
  oracle->add_option("--budget-nodes", opt.budget.max_nodes, "search node limit (0 = unlimited)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    const fs::path input(opt.input);
    if (fs::is_directory(input)) {
      if (command == "draw" || command == "validate") {
        std::cerr << "ERROR: " << command << " takes a single file\n";
        return 2;
      }
      return run_batch(command, input, opt);
    }
    Outcome o = run_one(command, input, opt);
    print(o, opt);
    return o.code;
  } catch (const std::exception& e) {
    std::cerr << "ERROR: " << e.what() << "\n";
    return 2;
  }
}
