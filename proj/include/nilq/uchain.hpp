#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilq/partition.hpp"
#include "nilq/poset.hpp"

namespace nilq {

/// Spec of an s-U-chain: decreasing levels of S_P with gaps >= 2.
struct UChainSpec {
  std::vector<int> levels;

  UChainSpec() = default;
  explicit UChainSpec(std::vector<int> ls) : levels(std::move(ls)) {}

  int s() const { return static_cast<int>(levels.size()); }

  void validate(const Partition& P) const {
    if (levels.empty()) throw std::invalid_argument("spec: empty");
    for (std::size_t j = 0; j < levels.size(); ++j) {
      if (!P.has_level(levels[j]))
        throw std::invalid_argument("spec: level " + std::to_string(levels[j]) +
                                    " not in S_P");
      if (j + 1 < levels.size() && levels[j] < levels[j + 1] + 2)
        throw std::invalid_argument("spec: levels must decrease by at least 2");
    }
  }

  /// The level set {a_j, a_j - 1 | j}.
  std::set<int> level_closure() const {
    std::set<int> out;
    for (int a : levels) {
      out.insert(a);
      out.insert(a - 1);
    }
    return out;
  }

  friend bool operator==(const UChainSpec& a, const UChainSpec& b) {
    return a.levels == b.levels;
  }
  friend bool operator<(const UChainSpec& a, const UChainSpec& b) {
    return a.levels < b.levels;
  }
};

inline std::string to_string(const UChainSpec& spec) {
  std::string out;
  for (int a : spec.levels) {
    if (!out.empty()) out += ',';
    out += std::to_string(a);
  }
  return out;
}

inline UChainSpec parse_spec(const std::string& text) {
  Partition p = parse_partition(text);  // same comma syntax
  return UChainSpec(p.parts());
}

/// The vertex set of the s-U-chain: every vertex at the spec levels
/// a_j, a_j - 1, and at each higher non-spec level l the outer bands
/// u <= h_l and u >= l + 1 - h_l, where h_l counts spec entries below l.
inline std::vector<Vertex> uchain_vertices(const Partition& P,
                                           const UChainSpec& spec) {
  spec.validate(P);
  std::set<int> closure = spec.level_closure();
  const int a_min = spec.levels.back();
  std::vector<Vertex> out;
  for (int l : P.support()) {
    int nl = P.mult(l);
    if (closure.count(l)) {
      for (int k = 1; k <= nl; ++k)
        for (int u = 1; u <= l; ++u) out.push_back({u, l, k});
    } else if (l > a_min) {
      int h = 0;
      for (int a : spec.levels)
        if (a < l) ++h;
      for (int k = 1; k <= nl; ++k)
        for (int u = 1; u <= l; ++u)
          if (u <= h || u >= l + 1 - h) out.push_back({u, l, k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Closed form for the vertex count, cross-checked against the explicit
/// set in uchain_size below.
inline long long uchain_size_formula(const Partition& P, const UChainSpec& spec) {
  spec.validate(P);
  std::set<int> closure = spec.level_closure();
  const int a_min = spec.levels.back();
  long long total = 0;
  for (int l : P.support()) {
    if (closure.count(l)) {
      total += static_cast<long long>(l) * P.mult(l);
    } else if (l > a_min) {
      int h = 0;
      for (int a : spec.levels)
        if (a < l) ++h;
      total += static_cast<long long>(P.mult(l)) * std::min(l, 2 * h);
    }
  }
  return total;
}

inline long long uchain_size(const Partition& P, const UChainSpec& spec) {
  long long counted = static_cast<long long>(uchain_vertices(P, spec).size());
  long long formula = uchain_size_formula(P, spec);
  if (counted != formula)
    throw std::logic_error("uchain_size: formula disagrees with vertex count for spec " +
                           to_string(spec));
  return counted;
}

/// An s-U-chain shelled into its component chains, outermost first.
/// Each component is totally ordered by the augmented-diagram order;
/// edge_path records whether consecutive vertices are joined by single
/// cover edges (always the case for maximal specs).
struct UChain {
  UChainSpec spec;
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> component_edge_path;
  std::vector<Vertex> vertex_set;  // sorted union of the components

  int size() const { return static_cast<int>(vertex_set.size()); }
  bool all_edge_paths() const {
    for (bool b : component_edge_path)
      if (!b) return false;
    return true;
  }
};

/// Shell the s-U-chain of `spec` inside the augmented diagram.
inline UChain build_uchain(const PosetDiagram& Daug, const UChainSpec& spec) {
  if (!Daug.augmented())
    throw std::invalid_argument("build_uchain: augmented diagram required");
  const Partition& P = Daug.partition();
  spec.validate(P);
  const int s = spec.s();

  UChain chain;
  chain.spec = spec;
  std::vector<Vertex> expected = uchain_vertices(P, spec);
  std::set<Vertex> seen;

  for (int comp = 1; comp <= s; ++comp) {
    const int a = spec.levels[s - comp];  // outermost component has a_s
    std::vector<int> member;
    for (int l : P.support()) {
      int nl = P.mult(l);
      if (l == a || l == a - 1) {
        for (int k = 1; k <= nl; ++k)
          for (int u = comp; u <= l + 1 - comp; ++u)
            member.push_back(Daug.index_of({u, l, k}));
      } else if (l > a) {
        for (int k = 1; k <= nl; ++k) {
          member.push_back(Daug.index_of({comp, l, k}));
          if (l + 1 - comp != comp)
            member.push_back(Daug.index_of({l + 1 - comp, l, k}));
        }
      }
    }
    std::sort(member.begin(), member.end(),
              [&](int x, int y) { return Daug.topo_rank(x) < Daug.topo_rank(y); });
    bool edge_path = true;
    for (std::size_t j = 0; j + 1 < member.size(); ++j) {
      if (!Daug.reachable(member[j], member[j + 1]))
        throw std::logic_error("build_uchain: component " + std::to_string(comp) +
                               " of spec " + to_string(spec) + " is not a chain");
      if (!Daug.has_edge(member[j], member[j + 1])) edge_path = false;
    }
    std::vector<Vertex> verts;
    verts.reserve(member.size());
    for (int idx : member) {
      const Vertex& v = Daug.vertex(idx);
      if (!seen.insert(v).second)
        throw std::logic_error("build_uchain: components overlap");
      verts.push_back(v);
    }
    chain.components.push_back(std::move(verts));
    chain.component_edge_path.push_back(edge_path);
  }

  chain.vertex_set.assign(seen.begin(), seen.end());
  if (chain.vertex_set != expected)
    throw std::logic_error("build_uchain: components do not tile the vertex set");
  return chain;
}

inline UChain build_uchain(const Partition& P, const UChainSpec& spec) {
  PosetDiagram Daug(P, true);
  return build_uchain(Daug, spec);
}

inline UChain simple_uchain(const Partition& P, int a) {
  if (!P.has_level(a))
    throw std::invalid_argument("simple_uchain: level not in S_P");
  return build_uchain(P, UChainSpec({a}));
}

/// All valid specs with exactly s entries.
inline std::vector<UChainSpec> enumerate_specs(const Partition& P, int s) {
  std::vector<int> support = P.support();  // increasing
  std::vector<UChainSpec> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int pos) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.emplace_back(cur);
      return;
    }
    for (int j = pos; j >= 0; --j) {
      if (!cur.empty() && cur.back() - support[j] < 2) continue;
      cur.push_back(support[j]);
      self(self, j - 1);
      cur.pop_back();
    }
  };
  rec(rec, static_cast<int>(support.size()) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline int max_spec_length(const Partition& P) {
  for (int s = static_cast<int>(P.support().size()); s >= 1; --s)
    if (!enumerate_specs(P, s).empty()) return s;
  return 0;
}

/// Maximality: no other spec with the same s has a strictly larger
/// vertex set under inclusion.
inline bool is_maximal_spec(const Partition& P, const UChainSpec& spec) {
  spec.validate(P);
  std::vector<Vertex> mine = uchain_vertices(P, spec);
  for (const UChainSpec& other : enumerate_specs(P, spec.s())) {
    if (other == spec) continue;
    std::vector<Vertex> theirs = uchain_vertices(P, other);
    if (theirs.size() > mine.size() &&
        std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end()))
      return false;
  }
  return true;
}

inline std::vector<UChainSpec> maximal_specs(const Partition& P, int s) {
  std::vector<UChainSpec> out;
  for (const UChainSpec& spec : enumerate_specs(P, s))
    if (is_maximal_spec(P, spec)) out.push_back(spec);
  return out;
}

/// Spec entries whose companion level a_j - 1 is missing from S_P.
inline std::vector<int> singleton_levels(const Partition& P, const UChainSpec& spec) {
  spec.validate(P);
  std::vector<int> out;
  for (int a : spec.levels)
    if (!P.has_level(a - 1)) out.push_back(a);
  return out;
}

/// The u-profile: u_s = size of the largest s-U-chain, s = 1..r_P, and
/// the partition of first differences.
struct LambdaUProfile {
  std::vector<long long> u;  // u[0] = 0, u[s] for s = 1..r_P
  Partition lambda;
  bool covers_all = false;   // u_{r_P} == n
};

inline LambdaUProfile lambda_u_profile(const Partition& P) {
  const int r = ar_cover_number(P);
  LambdaUProfile prof;
  prof.u.assign(1, 0);
  for (int s = 1; s <= r; ++s) {
    auto specs = enumerate_specs(P, s);
    if (specs.empty())
      throw std::logic_error("lambda_u: no valid spec of length " + std::to_string(s) +
                             " for " + to_string(P));
    long long best = 0;
    for (const auto& spec : specs)
      best = std::max(best, uchain_size(P, spec));
    prof.u.push_back(best);
  }
  std::vector<int> parts;
  for (int s = 1; s <= r; ++s) {
    long long d = prof.u[s] - prof.u[s - 1];
    if (d <= 0)
      throw std::logic_error("lambda_u: u-profile not strictly increasing for " +
                             to_string(P));
    parts.push_back(static_cast<int>(d));
  }
  for (std::size_t j = 0; j + 1 < parts.size(); ++j)
    if (parts[j] < parts[j + 1])
      throw std::logic_error("lambda_u: first differences not weakly decreasing for " +
                             to_string(P));
  prof.lambda = Partition(std::move(parts));
  prof.covers_all = prof.u.back() == P.n();
  return prof;
}

inline Partition lambda_u(const Partition& P) { return lambda_u_profile(P).lambda; }

enum class OblakTie { LargestLevel, SmallestLevel };

/// Peel maximum-weight simple chains: record ob(P, a) for the chosen
/// level, delete the parts a and a-1, shorten every part above a by 2,
/// and repeat on what is left.
inline Partition oblak_recursion(const Partition& P,
                                 OblakTie tie = OblakTie::LargestLevel) {
  std::vector<int> lengths;
  std::vector<int> parts = P.parts();
  while (!parts.empty()) {
    Partition cur(parts);
    int best_a = 0, best = -1;
    for (int a : cur.support()) {
      int v = ob(cur, a);
      bool better = v > best;
      if (v == best)
        better = tie == OblakTie::LargestLevel ? a > best_a : a < best_a;
      if (better) {
        best = v;
        best_a = a;
      }
    }
    lengths.push_back(best);
    std::vector<int> next;
    for (int p : parts) {
      if (p == best_a || p == best_a - 1) continue;
      if (p > best_a) {
        if (p - 2 >= 1) next.push_back(p - 2);
      } else {
        next.push_back(p);
      }
    }
    parts = std::move(next);
  }
  return Partition(std::move(lengths));
}

}  // namespace nilq
