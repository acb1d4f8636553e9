#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace elorder {

/// Dinic's blocking-flow max-flow on integer capacities. Deterministic:
/// edges are explored in insertion order.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  /// Returns an edge id usable with flow_on().
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
    edges_.push_back({to, capacity, capacity});
    adj_[from].push_back(edges_.size() - 1);
    edges_.push_back({from, 0, 0});
    adj_[to].push_back(edges_.size() - 1);
    return edges_.size() - 2;
  }

  std::int64_t solve(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (const std::int64_t pushed = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::int64_t flow_on(std::size_t edge) const { return edges_[edge].original - edges_[edge].residual; }

  /// Nodes reachable from `source` in the residual graph (the source side
  /// of a minimum cut once solve() has run).
  std::vector<bool> residual_reachable(std::size_t source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (const auto id : adj_[v]) {
        const auto& e = edges_[id];
        if (e.residual > 0 && !seen[e.to]) {
          seen[e.to] = true;
          stack.push_back(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    std::size_t to;
    std::int64_t residual;
    std::int64_t original;
  };

  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (const auto id : adj_[v]) {
        const auto& e = edges_[id];
        if (e.residual > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t dfs(std::size_t v, std::size_t sink, std::int64_t limit) {
    if (v == sink) return limit;
    for (std::size_t& i = next_[v]; i < adj_[v].size(); ++i) {
      const std::size_t id = adj_[v][i];
      Edge& e = edges_[id];
      if (e.residual <= 0 || level_[e.to] != level_[v] + 1) continue;
      if (const std::int64_t pushed = dfs(e.to, sink, std::min(limit, e.residual))) {
        e.residual -= pushed;
        edges_[id ^ 1U].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace elorder
