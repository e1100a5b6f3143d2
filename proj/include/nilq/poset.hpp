#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilq/partition.hpp"
#include "nilq/poly.hpp"

namespace nilq {

/// Vertex (u, i, k): position u within a row of length i, level i in S_P,
/// row index k within the level (1-based everywhere).
struct Vertex {
  int u = 0, i = 0, k = 0;
  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.u == b.u && a.i == b.i && a.k == b.k;
  }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
  friend bool operator<(const Vertex& a, const Vertex& b) {
    return std::tie(a.u, a.i, a.k) < std::tie(b.u, b.i, b.k);
  }
};

inline std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.u) + "," + std::to_string(v.i) + "," +
         std::to_string(v.k) + ")";
}

struct DiagramEdge {
  int src = 0, dst = 0;     // vertex indices
  EdgeVar var;
  bool augmented_only = false;
};

/// Minima of the odd-length maximal consecutive runs of S_P.  These are
/// the levels that carry a z variable; the non-isolated ones get their
/// wrap edges only in the augmented diagram.
inline std::vector<int> odd_run_minima(const Partition& P) {
  std::vector<int> out;
  for (const auto& run : support_runs(P))
    if (run.size() % 2 == 1) out.push_back(run.front());
  return out;
}

inline bool is_isolated_level(const Partition& P, int i) {
  return !P.has_level(i - 1) && !P.has_level(i + 1);
}

/// The diagram of the vertex poset attached to a partition: n vertices
/// (u,i,k) and the cover edges generated by the elementary maps, each
/// labeled with its variable. With `augmented`, wrap edges are added at
/// every non-isolated odd-run minimum level.
class PosetDiagram {
public:
  PosetDiagram(Partition P, bool augmented)
      : partition_(std::move(P)), augmented_(augmented) {
    build_vertices();
    build_edges();
    build_closure();
  }

  const Partition& partition() const { return partition_; }
  bool augmented() const { return augmented_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const Vertex& vertex(int idx) const { return vertices_[idx]; }

  int index_of(const Vertex& v) const {
    auto it = index_.find(std::make_tuple(v.u, v.i, v.k));
    if (it == index_.end())
      throw std::invalid_argument("diagram: no vertex " + to_string(v));
    return it->second;
  }
  bool has_vertex(const Vertex& v) const {
    return index_.count(std::make_tuple(v.u, v.i, v.k)) != 0;
  }

  const std::vector<int>& successors(int idx) const { return adj_[idx]; }
  bool has_edge(int a, int b) const {
    for (int s : adj_[a])
      if (s == b) return true;
    return false;
  }
  const EdgeVar& edge_var(int a, int b) const {
    for (const auto& e : edges_)
      if (e.src == a && e.dst == b) return e.var;
    throw std::invalid_argument("diagram: no edge");
  }

  /// Strict reachability a -> b along one or more edges.
  bool reachable(int a, int b) const { return reach_[a][b] != 0; }
  bool comparable(int a, int b) const {
    return a == b || reachable(a, b) || reachable(b, a);
  }

  /// Rank in a fixed topological order of the diagram.
  int topo_rank(int idx) const { return topo_rank_[idx]; }

  Vertex source() const { return {1, partition_.max_part(), 1}; }
  Vertex sink() const {
    int p1 = partition_.max_part();
    return {p1, p1, partition_.mult(p1)};
  }

private:
  void build_vertices() {
    auto support = partition_.support();
    // basis order: level descending, then k ascending, then u ascending
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
      int i = *it;
      for (int k = 1; k <= partition_.mult(i); ++k)
        for (int u = 1; u <= i; ++u)
          vertices_.push_back({u, i, k});
    }
    for (int idx = 0; idx < static_cast<int>(vertices_.size()); ++idx) {
      const Vertex& v = vertices_[idx];
      index_[std::make_tuple(v.u, v.i, v.k)] = idx;
    }
  }

  void add_edge(const Vertex& a, const Vertex& b, const EdgeVar& var, bool aug) {
    edges_.push_back({index_of(a), index_of(b), var, aug});
  }

  void build_edges() {
    const Partition& P = partition_;
    const int min_level = P.min_part();
    for (int i : P.support()) {
      int ni = P.mult(i);
      if (i != min_level) {
        int j = P.level_below(i);
        for (int u = 1; u <= j; ++u)
          add_edge({u, i, ni}, {u, j, 1}, EdgeVar::beta(i), false);
        for (int u = 1; u <= j; ++u)
          add_edge({u, j, P.mult(j)}, {u + i - j, i, 1}, EdgeVar::alpha(i), false);
      }
      for (int k = 1; k < ni; ++k)
        for (int u = 1; u <= i; ++u)
          add_edge({u, i, k}, {u, i, k + 1}, EdgeVar::e(i, k), false);
      if (is_isolated_level(P, i))
        for (int u = 1; u < i; ++u)
          add_edge({u, i, ni}, {u + 1, i, 1}, EdgeVar::z(i), false);
    }
    if (augmented_) {
      for (int l : odd_run_minima(P)) {
        if (is_isolated_level(P, l)) continue;  // already elementary
        for (int u = 1; u < l; ++u)
          add_edge({u, l, P.mult(l)}, {u + 1, l, 1}, EdgeVar::z(l), true);
      }
    }
    adj_.assign(vertices_.size(), {});
    for (const auto& e : edges_) adj_[e.src].push_back(e.dst);
  }

  void build_closure() {
    const int n = size();
    // topological order by DFS; the diagram must be acyclic
    topo_rank_.assign(n, -1);
    std::vector<int> state(n, 0), order;
    auto dfs = [&](auto&& self, int v) -> void {
      state[v] = 1;
      for (int w : adj_[v]) {
        if (state[w] == 1) throw std::logic_error("diagram: cycle detected");
        if (state[w] == 0) self(self, w);
      }
      state[v] = 2;
      order.push_back(v);
    };
    for (int v = 0; v < n; ++v)
      if (state[v] == 0) dfs(dfs, v);
    std::reverse(order.begin(), order.end());
    for (int r = 0; r < n; ++r) topo_rank_[order[r]] = r;

    reach_.assign(n, std::vector<unsigned char>(n, 0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      for (int w : adj_[v]) {
        reach_[v][w] = 1;
        for (int x = 0; x < n; ++x)
          if (reach_[w][x]) reach_[v][x] = 1;
      }
    }
  }

  Partition partition_;
  bool augmented_;
  std::vector<Vertex> vertices_;
  std::map<std::tuple<int, int, int>, int> index_;
  std::vector<DiagramEdge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<unsigned char>> reach_;
  std::vector<int> topo_rank_;
};

inline PosetDiagram build_diagram(const Partition& P, bool augmented) {
  return PosetDiagram(P, augmented);
}

/// Order reversing involution (u,i,k) -> (i+1-u, i, n_i+1-k).
inline Vertex tau(const Partition& P, const Vertex& v) {
  if (!P.has_level(v.i) || v.u < 1 || v.u > v.i || v.k < 1 || v.k > P.mult(v.i))
    throw std::invalid_argument("tau: invalid vertex " + to_string(v));
  return {v.i + 1 - v.u, v.i, P.mult(v.i) + 1 - v.k};
}

/// Position relative to the vertical center of symmetry: 2u - i - 1.
inline int rho(const Vertex& v) { return 2 * v.u - v.i - 1; }

/// Partial order of the vertex poset, realized as reachability in the
/// non-augmented diagram.
inline bool leq(const PosetDiagram& D, const Vertex& a, const Vertex& b) {
  if (D.augmented())
    throw std::invalid_argument("leq: the order is defined on the non-augmented diagram");
  int ia = D.index_of(a), ib = D.index_of(b);
  return ia == ib || D.reachable(ia, ib);
}

/// Longest directed path, counted in vertices.
inline int longest_chain(const PosetDiagram& D) {
  const int n = D.size();
  std::vector<int> idx(n);
  for (int v = 0; v < n; ++v) idx[D.topo_rank(v)] = v;
  std::vector<int> best(n, 1);
  int ans = n > 0 ? 1 : 0;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    for (int w : D.successors(*it))
      best[*it] = std::max(best[*it], 1 + best[w]);
    ans = std::max(ans, best[*it]);
  }
  return ans;
}

/// All directed paths from `a` to `b` with exactly `length` vertices,
/// by depth-first enumeration with reachability pruning.
inline std::vector<std::vector<Vertex>> chains_between(const PosetDiagram& D,
                                                       const Vertex& a,
                                                       const Vertex& b,
                                                       int length) {
  if (length < 1) throw std::invalid_argument("chains_between: length >= 1");
  int ia = D.index_of(a), ib = D.index_of(b);
  std::vector<std::vector<Vertex>> out;
  std::vector<int> path{ia};
  auto rec = [&](auto&& self, int cur, int left) -> void {
    if (left == 1) {
      if (cur == ib) {
        std::vector<Vertex> chain;
        chain.reserve(path.size());
        for (int v : path) chain.push_back(D.vertex(v));
        out.push_back(std::move(chain));
      }
      return;
    }
    for (int w : D.successors(cur)) {
      if (w != ib && !D.reachable(w, ib)) continue;
      path.push_back(w);
      self(self, w, left - 1);
      path.pop_back();
    }
  };
  rec(rec, ia, length);
  return out;
}

/// Graphviz export; augmented-only edges are dashed.
inline std::string to_dot(const PosetDiagram& D) {
  std::string out = "digraph diagram {\n  rankdir=LR;\n";
  for (int v = 0; v < D.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + to_string(D.vertex(v)) + "\"];\n";
  for (const auto& e : D.edges()) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) +
           " [label=\"" + e.var.name() + "\"";
    if (e.augmented_only) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace nilq
