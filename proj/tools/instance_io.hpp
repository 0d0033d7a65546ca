#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hvortho/graph.hpp"
#include "hvortho/ortho_layout.hpp"

namespace hvortho::cli {

using nlohmann::json;

/// Malformed input; the message names the file position or field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Plane, Outerplanar };

struct Instance {
  Mode mode = Mode::Plane;
  LabeledGraph graph;
  std::optional<RotationSystem> rot;  // plane mode only
  json source;                        // as read, echoed into drawing files
};

json read_json_file(const std::filesystem::path& path);

/// Checks the schema and builds the graph. `forced` overrides the "mode"
/// field. Throws InputError.
Instance parse_instance(const json& doc, std::optional<Mode> forced = std::nullopt);

std::optional<Mode> parse_mode(const std::string& s);
const char* to_string(Mode m);

/// {"coordinates": [[x, y], ...], "instance": {...}}
json drawing_to_json(const Instance& inst, const Drawing& d);
/// Same document, one line per field.
std::string format_drawing(const Instance& inst, const Drawing& d);
Drawing parse_drawing(const json& doc, int vertex_count);

/// SVG 1.1, y flipped, H edges drawn thicker than V edges.
std::string to_svg(const LabeledGraph& g, const Drawing& d);

}  // namespace hvortho::cli
