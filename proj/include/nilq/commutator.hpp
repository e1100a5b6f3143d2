#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "nilq/field.hpp"
#include "nilq/linalg.hpp"
#include "nilq/partition.hpp"
#include "nilq/poly.hpp"
#include "nilq/poset.hpp"
#include "nilq/rng.hpp"
#include "nilq/uchain.hpp"

namespace nilq {

using PolyMat = DenseMat<SparsePoly>;
using VarAssignment = std::map<EdgeVar, Fp>;

/// Matrix convention: columns act, M(row, col) is the coefficient of
/// basis vertex `row` in M applied to basis vertex `col`.
template <typename Scalar>
Scalar coeff_on(const DenseMat<Scalar>& M, const PosetDiagram& D,
                const Vertex& src, const Vertex& dst) {
  return M(D.index_of(dst), D.index_of(src));
}

/// The Jordan matrix of type P in the vertex basis: (u,i,k) -> (u+1,i,k).
inline FpMat jordan_matrix(const Partition& P, std::uint32_t p) {
  PosetDiagram D(P, false);
  FpMat B = FpMat::Zero(D.size(), D.size());
  for (int idx = 0; idx < D.size(); ++idx) {
    const Vertex& v = D.vertex(idx);
    if (v.u < v.i) B(D.index_of({v.u + 1, v.i, v.k}), idx) = Fp(p, 1);
  }
  return B;
}

/// Membership in the distinguished maximal nilpotent subalgebra of the
/// centralizer: commutes with the Jordan matrix, nilpotent, and kills
/// the lower triangle of every level projection (row index k order).
inline bool is_in_ub(const FpMat& A, const Partition& P) {
  PosetDiagram D(P, false);
  if (A.rows() != D.size() || A.cols() != D.size()) return false;
  std::uint32_t p = 0;
  for (Eigen::Index c = 0; c < A.cols() && !p; ++c)
    for (Eigen::Index r = 0; r < A.rows() && !p; ++r) p = A(r, c).modulus();
  if (!p) p = kDefaultPrime;
  FpMat B = jordan_matrix(P, p);
  if (!is_zero_matrix<Fp>(A * B - B * A)) return false;
  if (!is_nilpotent(A)) return false;
  for (int i : P.support())
    for (int k = 1; k <= P.mult(i); ++k)
      for (int k2 = 1; k2 <= k; ++k2)
        if (coeff_on(A, D, {1, i, k}, {1, i, k2}) != Fp(0)) return false;
  return true;
}

/// The coordinates of the subalgebra as an affine space: one per maximal
/// shift orbit of comparable vertex pairs. An orbit is listed from its
/// head (the pair with u = 1 on the source side) through its shifts.
inline std::vector<std::vector<std::pair<int, int>>> ub_interval_orbits(
    const PosetDiagram& D) {
  if (D.augmented())
    throw std::invalid_argument("ub_interval_orbits: non-augmented diagram expected");
  std::vector<std::vector<std::pair<int, int>>> orbits;
  for (int a = 0; a < D.size(); ++a) {
    if (D.vertex(a).u != 1) continue;  // orbit heads have u = 1 at the source
    for (int b = 0; b < D.size(); ++b) {
      if (!D.reachable(a, b)) continue;
      std::vector<std::pair<int, int>> orbit;
      Vertex v = D.vertex(a), w = D.vertex(b);
      while (v.u <= v.i && w.u <= w.i) {
        orbit.emplace_back(D.index_of(v), D.index_of(w));
        ++v.u;
        ++w.u;
      }
      orbits.push_back(std::move(orbit));
    }
  }
  return orbits;
}

inline int ub_dimension(const Partition& P) {
  PosetDiagram D(P, false);
  return static_cast<int>(ub_interval_orbits(D).size());
}

/// A random element of the subalgebra: one uniform field value per orbit,
/// propagated along the shifts (the Toeplitz block condition).
inline FpMat random_ub_element(const PosetDiagram& D,
                               const std::vector<std::vector<std::pair<int, int>>>& orbits,
                               std::uint32_t p, Rng& rng) {
  FpMat A = FpMat::Zero(D.size(), D.size());
  for (const auto& orbit : orbits) {
    Fp value(p, static_cast<long long>(rng.below(p)));
    for (auto& [src, dst] : orbit) A(dst, src) = value;
  }
  return A;
}

inline FpMat random_ub_element(const Partition& P, std::uint32_t p, std::uint64_t seed) {
  PosetDiagram D(P, false);
  auto orbits = ub_interval_orbits(D);
  Rng rng(seed);
  return random_ub_element(D, orbits, p, rng);
}

/// Variables of the generic sparse commuting matrix for P: s_i, t_i for
/// every non-minimal level, t_{i,k} for 1 <= k < n_i, and z_l for every
/// odd-run minimum level l.
inline std::vector<EdgeVar> variables_of(const Partition& P) {
  std::vector<EdgeVar> vars;
  const int min_level = P.min_part();
  for (int i : P.support()) {
    if (i != min_level) {
      vars.push_back(EdgeVar::beta(i));
      vars.push_back(EdgeVar::alpha(i));
    }
    for (int k = 1; k < P.mult(i); ++k) vars.push_back(EdgeVar::e(i, k));
  }
  for (int l : odd_run_minima(P)) vars.push_back(EdgeVar::z(l));
  std::sort(vars.begin(), vars.end());
  return vars;
}

inline VarAssignment random_adequate_assignment(const Partition& P, std::uint32_t p,
                                                Rng& rng) {
  VarAssignment asg;
  for (const EdgeVar& v : variables_of(P))
    asg[v] = Fp(p, static_cast<long long>(rng.nonzero_below(p)));
  return asg;
}

/// The sparse generic commuting matrix specialized at a full nonzero
/// assignment: entry (v -> v') is the value of the variable on the
/// augmented-diagram edge v -> v'.
inline FpMat specialize_ar(const Partition& P, const VarAssignment& asg,
                           std::uint32_t p) {
  for (const EdgeVar& v : variables_of(P)) {
    auto it = asg.find(v);
    if (it == asg.end())
      throw std::invalid_argument("specialize_ar: missing value for " + v.name());
    if (it->second.is_zero())
      throw std::invalid_argument("specialize_ar: zero value for " + v.name());
  }
  PosetDiagram D(P, true);
  FpMat A = FpMat::Zero(D.size(), D.size());
  for (const auto& e : D.edges()) A(e.dst, e.src) = Fp(p, 0) + asg.at(e.var);
  return A;
}

/// Same matrix with the variables kept formal: every entry is a single
/// variable or zero.
inline PolyMat symbolic_ar(const Partition& P, int size_limit = 20) {
  if (P.n() > size_limit)
    throw std::invalid_argument("symbolic_ar: n exceeds the symbolic limit");
  PosetDiagram D(P, true);
  PolyMat A = PolyMat::Zero(D.size(), D.size());
  for (const auto& e : D.edges()) A(e.dst, e.src) = SparsePoly::variable(e.var);
  return A;
}

inline SparsePoly chain_monomial(const PosetDiagram& Daug,
                                 const std::vector<Vertex>& chain) {
  SparsePoly m(1);
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    int a = Daug.index_of(chain[j]), b = Daug.index_of(chain[j + 1]);
    m *= SparsePoly::variable(Daug.edge_var(a, b));
  }
  return m;
}

/// Entry of the u-th power as a sum of chain monomials: one monomial per
/// path of u+1 vertices from v to w in the augmented diagram.
inline SparsePoly power_entry_via_chains(const PosetDiagram& Daug, int u,
                                         const Vertex& v, const Vertex& w) {
  if (!Daug.augmented())
    throw std::invalid_argument("power_entry_via_chains: augmented diagram expected");
  if (u < 1) throw std::invalid_argument("power_entry_via_chains: u >= 1");
  SparsePoly sum;
  for (const auto& chain : chains_between(Daug, v, w, u + 1))
    sum += chain_monomial(Daug, chain);
  return sum;
}

/// The square matrix of the chain projection for an s-U-chain: rows are
/// (component, power u), columns the chain vertices in shelling order,
/// and the entry is the coefficient of the column vertex in A^u applied
/// to the component's initial vertex.
template <typename Scalar>
DenseMat<Scalar> matrix_m(const PosetDiagram& Daug, const UChain& chain,
                          const DenseMat<Scalar>& A) {
  if (A.rows() != Daug.size() || A.cols() != Daug.size())
    throw std::invalid_argument("matrix_m: dimension mismatch");
  const int N = chain.size();
  std::vector<int> col_vertex;  // diagram indices, shelling order
  col_vertex.reserve(N);
  for (const auto& comp : chain.components)
    for (const Vertex& v : comp) col_vertex.push_back(Daug.index_of(v));

  std::size_t max_len = 0;
  for (const auto& comp : chain.components)
    max_len = std::max(max_len, comp.size());

  DenseMat<Scalar> M = DenseMat<Scalar>::Zero(N, N);
  DenseMat<Scalar> power = DenseMat<Scalar>::Identity(Daug.size(), Daug.size());
  for (std::size_t u = 0; u < max_len; ++u) {
    int row = 0;
    for (const auto& comp : chain.components) {
      if (u < comp.size()) {
        int init = Daug.index_of(comp.front());
        for (int j = 0; j < N; ++j)
          M(row + static_cast<int>(u), j) = power(col_vertex[j], init);
      }
      row += static_cast<int>(comp.size());
    }
    if (u + 1 < max_len) power = (power * A).eval();
  }
  return M;
}

/// Product over all components and all prefixes of the standard-chain
/// monomials. Requires every component to be a cover-edge path, which
/// holds for maximal specs.
inline SparsePoly distinguished_monomial(const PosetDiagram& Daug, const UChain& chain) {
  if (!chain.all_edge_paths())
    throw std::invalid_argument(
        "distinguished_monomial: a component of spec " + to_string(chain.spec) +
        " is not a cover-edge path; standard chains are undefined");
  SparsePoly mu(1);
  for (const auto& comp : chain.components) {
    SparsePoly prefix(1);
    for (std::size_t j = 0; j + 1 < comp.size(); ++j) {
      int a = Daug.index_of(comp[j]), b = Daug.index_of(comp[j + 1]);
      prefix *= SparsePoly::variable(Daug.edge_var(a, b));
      mu *= prefix;
    }
  }
  return mu;
}

inline SparsePoly distinguished_monomial(const Partition& P, const UChainSpec& spec) {
  PosetDiagram Daug(P, true);
  return distinguished_monomial(Daug, build_uchain(Daug, spec));
}

inline Fp det_m_numeric(const Partition& P, const UChainSpec& spec, std::uint32_t p,
                        std::uint64_t seed) {
  Rng rng(seed);
  VarAssignment asg = random_adequate_assignment(P, p, rng);
  FpMat A = specialize_ar(P, asg, p);
  PosetDiagram Daug(P, true);
  UChain chain = build_uchain(Daug, spec);
  return det_of(matrix_m(Daug, chain, A));
}

inline SparsePoly det_m_symbolic(const Partition& P, const UChainSpec& spec,
                                 int size_limit = 9) {
  PosetDiagram Daug(P, true);
  UChain chain = build_uchain(Daug, spec);
  if (chain.size() > size_limit)
    throw std::invalid_argument("det_m_symbolic: chain size " +
                                std::to_string(chain.size()) +
                                " exceeds the symbolic limit " +
                                std::to_string(size_limit));
  PolyMat A = symbolic_ar(P);
  return det_cofactor(matrix_m(Daug, chain, A));
}

}  // namespace nilq
