#pragma once

#include <vector>

namespace hvortho {

/// Dinic's blocking-flow max-flow on integer capacities. With unit
/// capacities on the middle layer this runs in O(E sqrt V).
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  /// Returns the arc id; flow on it can be read back with flow().
  int add_arc(int from, int to, long capacity);
  long run(int source, int sink);
  long flow(int arc) const { return arcs_[static_cast<std::size_t>(2 * arc)].flow; }
  int node_count() const noexcept { return static_cast<int>(adj_.size()); }

 private:
  struct Arc {
    int to;
    long cap;
    long flow;
  };
  bool bfs(int s, int t);
  long push(int v, int t, long limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace hvortho
