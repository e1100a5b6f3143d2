#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nilq/partition.hpp"
#include "nilq/poset.hpp"

namespace nilq {

/// An arbitrary DAG given by an edge list; vertices 0..n-1.
struct Dag {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Dag dag_of(const PosetDiagram& D) {
  Dag d;
  d.n = D.size();
  d.edges.reserve(D.edges().size());
  for (const auto& e : D.edges()) d.edges.emplace_back(e.src, e.dst);
  return d;
}

/// Strict reachability closure; throws on a cycle.
inline std::vector<std::vector<unsigned char>> transitive_closure(const Dag& d) {
  std::vector<std::vector<int>> adj(d.n);
  for (auto& [a, b] : d.edges) {
    if (a < 0 || a >= d.n || b < 0 || b >= d.n)
      throw std::invalid_argument("dag: edge endpoint out of range");
    adj[a].push_back(b);
  }
  std::vector<int> state(d.n, 0), order;
  auto dfs = [&](auto&& self, int v) -> void {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) throw std::invalid_argument("dag: cycle detected");
      if (state[w] == 0) self(self, w);
    }
    state[v] = 2;
    order.push_back(v);
  };
  for (int v = 0; v < d.n; ++v)
    if (state[v] == 0) dfs(dfs, v);
  std::vector<std::vector<unsigned char>> reach(d.n, std::vector<unsigned char>(d.n, 0));
  for (int v : order) {  // reverse topological
    for (int w : adj[v]) {
      reach[v][w] = 1;
      for (int x = 0; x < d.n; ++x)
        if (reach[w][x]) reach[v][x] = 1;
    }
  }
  return reach;
}

namespace detail {

/// Min-cost flow on the split-vertex network that computes the maximum
/// number of vertices covered by i chains for i = 1, 2, ... in turn.
/// Each vertex contributes -1 once via a capacity-1 arc and is free to
/// pass through afterwards; successive shortest augmenting paths keep
/// every intermediate flow optimal, so the coverage gains come out
/// weakly decreasing.
class ChainCoverFlow {
public:
  explicit ChainCoverFlow(const Dag& d) : n_(d.n) {
    auto reach = transitive_closure(d);
    S_ = 2 * n_;
    T_ = 2 * n_ + 1;
    const int big = n_ + 1;
    for (int v = 0; v < n_; ++v) {
      add(S_, v, big, 0);
      add(v, n_ + v, 1, -1);   // collect the vertex once
      add(v, n_ + v, big, 0);  // pass through freely
      add(n_ + v, T_, big, 0);
      for (int w = 0; w < n_; ++w)
        if (reach[v][w]) add(n_ + v, w, big, 0);
    }
  }

  /// Send one more unit of flow; returns vertices newly covered.
  int augment() {
    const int nodes = 2 * n_ + 2;
    const long long inf = 1LL << 60;
    std::vector<long long> dist(nodes, inf);
    std::vector<int> via(nodes, -1);
    dist[S_] = 0;
    for (int pass = 0; pass < nodes; ++pass) {  // Bellman-Ford
      bool changed = false;
      for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
        const Arc& e = arcs_[a];
        if (e.cap <= 0 || dist[e.from] == inf) continue;
        if (dist[e.from] + e.cost < dist[e.to]) {
          dist[e.to] = dist[e.from] + e.cost;
          via[e.to] = a;
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (dist[T_] == inf) throw std::logic_error("chain cover flow: no augmenting path");
    for (int v = T_; v != S_;) {
      Arc& e = arcs_[via[v]];
      e.cap -= 1;
      arcs_[via[v] ^ 1].cap += 1;
      v = e.from;
    }
    return static_cast<int>(-dist[T_]);
  }

private:
  struct Arc {
    int from, to, cap;
    long long cost;
  };
  void add(int a, int b, int cap, long long cost) {
    arcs_.push_back({a, b, cap, cost});
    arcs_.push_back({b, a, 0, -cost});
  }
  int n_, S_, T_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

/// Coverage profile c_1 < c_2 < ... < c_a = n: the maximum number of
/// vertices covered by i chains of the DAG's reachability poset.
inline std::vector<int> coverage_profile(const Dag& d) {
  std::vector<int> c;
  if (d.n == 0) return c;
  detail::ChainCoverFlow flow(d);
  int covered = 0;
  while (covered < d.n) {
    int gain = flow.augment();
    if (gain <= 0)
      throw std::logic_error("coverage profile: nonpositive marginal gain");
    covered += gain;
    c.push_back(covered);
  }
  return c;
}

/// First differences of the coverage profile.
inline Partition greene_lambda(const Dag& d) {
  if (d.n == 0) throw std::invalid_argument("greene_lambda: empty diagram");
  std::vector<int> c = coverage_profile(d);
  std::vector<int> parts;
  int prev = 0;
  for (int ci : c) {
    parts.push_back(ci - prev);
    prev = ci;
  }
  return Partition(std::move(parts));
}

inline Partition greene_lambda(const PosetDiagram& D) { return greene_lambda(dag_of(D)); }

/// Minimum number of chains covering every vertex.
inline int chain_cover_number(const Dag& d) {
  return static_cast<int>(coverage_profile(d).size());
}

/// Exhaustive oracle: the maximum size of a vertex subset whose induced
/// subposet has no antichain larger than i (equivalently, by Dilworth,
/// is coverable by at most i chains). Limited to 14 vertices.
inline int brute_force_coverage(const Dag& d, int i) {
  if (d.n > 14) throw std::invalid_argument("brute_force_coverage: more than 14 vertices");
  if (i < 0) throw std::invalid_argument("brute_force_coverage: negative i");
  if (d.n == 0 || i == 0) return 0;
  auto reach = transitive_closure(d);
  std::vector<unsigned> incomp(d.n, 0);
  for (int v = 0; v < d.n; ++v)
    for (int w = 0; w < d.n; ++w)
      if (v != w && !reach[v][w] && !reach[w][v]) incomp[v] |= 1u << w;
  // largest antichain inside each subset, by subset recursion
  std::vector<int> max_ac(std::size_t(1) << d.n, -1);
  max_ac[0] = 0;
  auto rec = [&](auto&& self, unsigned S) -> int {
    if (max_ac[S] >= 0) return max_ac[S];
    int v = __builtin_ctz(S);
    int skip = self(self, S & (S - 1));
    int take = 1 + self(self, S & ~(1u << v) & incomp[v]);
    return max_ac[S] = std::max(skip, take);
  };
  int best = 0;
  for (unsigned S = 0; S < (1u << d.n); ++S)
    if (rec(rec, S) <= i) best = std::max(best, __builtin_popcount(S));
  return best;
}

}  // namespace nilq
