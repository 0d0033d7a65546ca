#pragma once

#include <cstdint>
#include <optional>

#include "hvortho/angle_flow.hpp"
#include "hvortho/graph.hpp"
#include "hvortho/ortho_layout.hpp"

namespace hvortho {

struct OracleBudget {
  int max_free_corners = 20;
  int max_vertices = 8;
  int max_grid = 0;  // distinct coordinate values per axis; 0 means vertex count
  std::int64_t max_nodes = 0;  // search nodes; 0 means unlimited
};

struct EnumerationResult {
  bool exists = false;
  AngleAssignment witness;  // valid when exists
  std::int64_t tried = 0;
};

/// Exhaustive search over {1,3} for every free corner of the embedded graph.
/// Throws BudgetExceeded when there are too many free corners.
EnumerationResult enumerate_assignments(const LabeledGraph& g, const RotationSystem& rot,
                                        const OracleBudget& budget = {});

struct GridSearchStats {
  std::int64_t nodes = 0;
  bool prechecked_out = false;  // rejected before the search started
};

/// Embedding-free drawability. Vertices joined by V edges share an x value and
/// vertices joined by H edges share a y value, so the search assigns levels to
/// those classes, one vertex at a time, and checks each new segment exactly.
/// Returns a normalized witness or nullopt. Throws BudgetExceeded.
std::optional<Drawing> grid_search_drawing(const LabeledGraph& g, const OracleBudget& budget = {},
                                           GridSearchStats* stats = nullptr);

}  // namespace hvortho
