#pragma once

#include <vector>

#include "pbrp/rational.hpp"

namespace pbrp::detail {

// Dinic maximum flow on exact integer capacities. Graphs here are tiny
// (agents + projects + source + sink), so big-integer arithmetic is fine.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count) : graph_(node_count) {}

  void add_edge(int from, int to, BigInt capacity);

  BigInt run(int source, int sink);

  // Nodes reachable from the source in the residual graph; this is the
  // unique minimal min-cut source side.
  std::vector<bool> source_side(int source) const;

 private:
  struct Edge {
    int to;
    BigInt cap;
    std::size_t rev;
  };

  bool build_levels(int source, int sink);
  BigInt push(int v, int sink, BigInt limit);

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace pbrp::detail
