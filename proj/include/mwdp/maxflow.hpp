#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "mwdp/error.hpp"

namespace mwdp {

/// Dinic's algorithm on integer capacities. `Cap` must be an exact signed
/// integer type (int64_t, cpp_int, ...).
template <typename Cap>
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adj_(n), level_(n), next_(n) {}

  std::size_t size() const { return adj_.size(); }

  /// Adds u->v with capacity `cap` and v->u with capacity `rev_cap`.
  void add_edge(std::size_t u, std::size_t v, const Cap& cap,
                const Cap& rev_cap = Cap(0)) {
    if (cap < 0 || rev_cap < 0)
      throw Error(ErrorCode::Internal, "negative capacity in flow network");
    adj_[u].push_back(edges_.size());
    edges_.push_back({v, cap});
    adj_[v].push_back(edges_.size());
    edges_.push_back({u, rev_cap});
  }

  /// Adds an undirected edge: capacity `cap` in both directions.
  void add_undirected(std::size_t u, std::size_t v, const Cap& cap) {
    add_edge(u, v, cap, cap);
  }

  Cap max_flow(std::size_t s, std::size_t t) {
    Cap total(0);
    if (s == t) return total;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      for (;;) {
        Cap pushed = dfs(s, t, Cap(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Vertices reachable from s in the residual network (call after max_flow).
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t id : adj_[u]) {
        const Edge& e = edges_[id];
        if (e.residual > 0 && !seen[e.to]) {
          seen[e.to] = true;
          q.push(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    std::size_t to;
    Cap residual;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t id : adj_[u]) {
        const Edge& e = edges_[id];
        if (e.residual > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // limit < 0 means unbounded.
  Cap dfs(std::size_t u, std::size_t t, const Cap& limit) {
    if (u == t) return limit;
    for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
      std::size_t id = adj_[u][i];
      Edge& e = edges_[id];
      if (e.residual <= 0 || level_[e.to] != level_[u] + 1) continue;
      Cap want = (limit < 0 || e.residual < limit) ? e.residual : limit;
      Cap got = dfs(e.to, t, want);
      if (got > 0) {
        e.residual -= got;
        edges_[id ^ 1U].residual += got;
        return got;
      }
    }
    return Cap(0);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace mwdp
