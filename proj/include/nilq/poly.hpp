#pragma once

#include <Eigen/Core>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace nilq {

/// A formal edge variable of the diagram:
///   Beta(i)  -> s_i      (drop to the next smaller level)
///   Alpha(i) -> t_i      (climb from the next smaller level into i)
///   E(i,k)   -> t_{i,k}  (next row within level i)
///   Z(l)     -> z_l      (wrap within level l)
struct EdgeVar {
  enum class Kind { Beta, Alpha, E, Z };
  Kind kind = Kind::Beta;
  int i = 0;
  int k = 0;  // only for E

  static EdgeVar beta(int i) { return {Kind::Beta, i, 0}; }
  static EdgeVar alpha(int i) { return {Kind::Alpha, i, 0}; }
  static EdgeVar e(int i, int k) { return {Kind::E, i, k}; }
  static EdgeVar z(int l) { return {Kind::Z, l, 0}; }

  std::string name() const {
    switch (kind) {
      case Kind::Beta:  return "s_" + std::to_string(i);
      case Kind::Alpha: return "t_" + std::to_string(i);
      case Kind::E:     return "t_{" + std::to_string(i) + "," + std::to_string(k) + "}";
      case Kind::Z:     return "z_" + std::to_string(i);
    }
    return {};
  }

  // Display order: s variables by level descending, then t/t_{i,k}
  // ascending by level, then z ascending. Also the map key order.
  friend bool operator<(const EdgeVar& a, const EdgeVar& b) {
    auto group = [](Kind k) { return k == Kind::Beta ? 0 : (k == Kind::Z ? 2 : 1); };
    int ga = group(a.kind), gb = group(b.kind);
    if (ga != gb) return ga < gb;
    if (ga == 0) return a.i > b.i;
    if (ga == 2) return a.i < b.i;
    // t group: by level, Alpha before E, E by k
    if (a.i != b.i) return a.i < b.i;
    bool ae = a.kind == Kind::E, be = b.kind == Kind::E;
    if (ae != be) return !ae;
    return a.k < b.k;
  }
  friend bool operator==(const EdgeVar& a, const EdgeVar& b) {
    return a.kind == b.kind && a.i == b.i && a.k == b.k;
  }
  friend bool operator!=(const EdgeVar& a, const EdgeVar& b) { return !(a == b); }
};

/// Exponent vector: sorted (EdgeVar, exponent>0) pairs.
using Monomial = std::vector<std::pair<EdgeVar, int>>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t x = 0, y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
      r.push_back(a[x++]);
    } else if (x == a.size() || b[y].first < a[x].first) {
      r.push_back(b[y++]);
    } else {
      r.emplace_back(a[x].first, a[x].second + b[y].second);
      ++x; ++y;
    }
  }
  return r;
}

inline int mono_degree(const Monomial& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

/// Multivariate polynomial with integer coefficients over the edge
/// variables, stored as exponent-vector -> coefficient (no zeros kept).
class SparsePoly {
public:
  SparsePoly() = default;
  SparsePoly(long long c) { if (c) terms_[{}] = c; }  // NOLINT: implicit by design
  static SparsePoly variable(const EdgeVar& v) {
    SparsePoly p;
    p.terms_[Monomial{{v, 1}}] = 1;
    return p;
  }
  static SparsePoly monomial(Monomial m, long long c) {
    SparsePoly p;
    if (c) p.terms_[std::move(m)] = c;
    return p;
  }

  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }

  int total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
  }

  long long coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_)
        r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) {
    return !(a == b);
  }

private:
  void add_term(const Monomial& m, long long c) {
    if (!c) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  std::map<Monomial, long long> terms_;
};

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (auto& [v, e] : m) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

/// "s_4^4*s_2^3*t_2^2*t_4*z_4", terms joined with " + " / " - ".
inline std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& [m, c] : p.terms()) {
    long long a = c;
    if (out.empty()) {
      if (a < 0) { out += '-'; a = -a; }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1 || m.empty()) {
      out += std::to_string(a);
      if (!m.empty()) out += '*';
    }
    if (!m.empty()) out += to_string(m);
  }
  return out;
}

}  // namespace nilq

namespace Eigen {

template <>
struct NumTraits<nilq::SparsePoly> {
  typedef nilq::SparsePoly Real;
  typedef nilq::SparsePoly NonInteger;
  typedef nilq::SparsePoly Nested;
  typedef long long Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline nilq::SparsePoly epsilon() { return nilq::SparsePoly(); }
  static inline nilq::SparsePoly dummy_precision() { return nilq::SparsePoly(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
