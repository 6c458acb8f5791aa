#include "max_flow.hpp"

#include <deque>

namespace pbrp::detail {

void MaxFlow::add_edge(int from, int to, BigInt capacity) {
  graph_[from].push_back({to, std::move(capacity), graph_[to].size()});
  graph_[to].push_back({from, 0, graph_[from].size() - 1});
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(graph_.size(), -1);
  std::deque<int> queue{source};
  level_[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& e : graph_[v]) {
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        queue.push_back(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

BigInt MaxFlow::push(int v, int sink, BigInt limit) {
  if (v == sink) return limit;
  for (auto& i = next_[v]; i < graph_[v].size(); ++i) {
    Edge& e = graph_[v][i];
    if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
    const BigInt pushed = push(e.to, sink, std::min(limit, e.cap));
    if (pushed > 0) {
      e.cap -= pushed;
      graph_[e.to][e.rev].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

BigInt MaxFlow::run(int source, int sink) {
  BigInt total = 0;
  while (build_levels(source, sink)) {
    next_.assign(graph_.size(), 0);
    for (;;) {
      BigInt cap_bound = 0;
      for (const auto& e : graph_[source]) cap_bound += e.cap;
      const BigInt pushed = push(source, sink, cap_bound + 1);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> MaxFlow::source_side(int source) const {
  std::vector<bool> seen(graph_.size(), false);
  std::deque<int> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& e : graph_[v]) {
      if (e.cap > 0 && !seen[e.to]) {
        seen[e.to] = true;
        queue.push_back(e.to);
      }
    }
  }
  return seen;
}

}  // namespace pbrp::detail
