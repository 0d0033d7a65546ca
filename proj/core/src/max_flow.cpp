#include "hvortho/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hvortho {

MaxFlow::MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

int MaxFlow::add_arc(int from, int to, long capacity) {
  int id = static_cast<int>(arcs_.size()) / 2;
  adj_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity, 0});
  adj_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0, 0});
  return id;
}

bool MaxFlow::bfs(int s, int t) {
  level_.assign(adj_.size(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int a : adj_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.cap - arc.flow > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[v] + 1;
        q.push(arc.to);
      }
    }
  }
  return level_[t] >= 0;
}

long MaxFlow::push(int v, int t, long limit) {
  if (v == t) return limit;
  for (std::size_t& i = cursor_[v]; i < adj_[v].size(); ++i) {
    int a = adj_[v][i];
    Arc& arc = arcs_[a];
    if (arc.cap - arc.flow <= 0 || level_[arc.to] != level_[v] + 1) continue;
    long pushed = push(arc.to, t, std::min(limit, arc.cap - arc.flow));
    if (pushed > 0) {
      arc.flow += pushed;
      arcs_[a ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

long MaxFlow::run(int source, int sink) {
  long total = 0;
  while (bfs(source, sink)) {
    cursor_.assign(adj_.size(), 0);
    while (long f = push(source, sink, std::numeric_limits<long>::max())) total += f;
  }
  return total;
}

}  // namespace hvortho
