#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilq {

/// An integer partition: weakly decreasing positive parts.
///
/// Two views are kept in sync: the part list and the multiplicity map
/// level -> n_i with support S_P (the distinct part values).
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    if (parts_.empty())
      throw std::invalid_argument("partition: empty (n >= 1 required)");
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("partition: nonpositive part");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    for (int p : parts_) ++mult_[p];
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int max_part() const { return parts_.front(); }
  int min_part() const { return parts_.back(); }

  /// Multiplicity n_i of the level i (0 when i is not a part).
  int mult(int i) const {
    auto it = mult_.find(i);
    return it == mult_.end() ? 0 : it->second;
  }

  /// Support S_P in increasing order.
  std::vector<int> support() const {
    std::vector<int> s;
    s.reserve(mult_.size());
    for (auto& [i, m] : mult_) s.push_back(i);
    return s;
  }

  bool has_level(int i) const { return mult_.count(i) != 0; }

  /// Next smaller level i^- in S_P, or 0 if none.
  int level_below(int i) const {
    auto it = mult_.lower_bound(i);
    if (it == mult_.begin()) return 0;
    return std::prev(it)->first;
  }

  /// Next larger level i^+ in S_P, or 0 if none.
  int level_above(int i) const {
    auto it = mult_.upper_bound(i);
    return it == mult_.end() ? 0 : it->first;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  /// Lexicographic on the part lists; a deterministic total order for
  /// containers, unrelated to dominance.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

private:
  std::vector<int> parts_;
  int n_ = 0;
  std::map<int, int> mult_;  // ascending by level
};

enum class Dominance { Greater, Less, Equal, Incomparable };

/// Parse "4,2,1" or "5,4,3^3,2^3,1^2"; order of tokens is irrelevant,
/// the result is canonically sorted.
inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("partition: empty input");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // trim blanks
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty()) throw std::invalid_argument("partition: malformed token");
    std::size_t caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    std::string expo = caret == std::string::npos ? "1" : tok.substr(caret + 1);
    auto to_int = [](const std::string& s) {
      if (s.empty()) throw std::invalid_argument("partition: malformed token");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(s, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("partition: malformed token '" + s + "'");
      }
      if (used != s.size()) throw std::invalid_argument("partition: malformed token '" + s + "'");
      return v;
    };
    int part = to_int(base), count = to_int(expo);
    if (part <= 0) throw std::invalid_argument("partition: part must be positive");
    if (count <= 0) throw std::invalid_argument("partition: exponent must be positive");
    for (int c = 0; c < count; ++c) parts.push_back(part);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

/// Canonical text form, exponent syntax when a multiplicity is >= 2,
/// e.g. "5,4,3^3,2^3,1^2".
inline std::string to_string(const Partition& P) {
  std::string out;
  const auto& parts = P.parts();
  for (std::size_t j = 0; j < parts.size();) {
    std::size_t k = j;
    while (k < parts.size() && parts[k] == parts[j]) ++k;
    if (!out.empty()) out += ',';
    out += std::to_string(parts[j]);
    if (k - j >= 2) out += '^' + std::to_string(k - j);
    j = k;
  }
  return out;
}

/// Dominance order: P >= P' iff every prefix sum of P is >= the one of P'.
/// Only partitions of the same total are comparable.
inline Dominance dominance_cmp(const Partition& P, const Partition& Q) {
  if (P.n() != Q.n())
    throw std::invalid_argument("dominance_cmp: totals differ");
  if (P == Q) return Dominance::Equal;
  bool ge = true, le = true;
  long long sp = 0, sq = 0;
  std::size_t t = std::max(P.parts().size(), Q.parts().size());
  for (std::size_t j = 0; j < t; ++j) {
    sp += j < P.parts().size() ? P.parts()[j] : 0;
    sq += j < Q.parts().size() ? Q.parts()[j] : 0;
    if (sp < sq) ge = false;
    if (sp > sq) le = false;
  }
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

inline bool dominates(const Partition& P, const Partition& Q) {
  Dominance d = dominance_cmp(P, Q);
  return d == Dominance::Greater || d == Dominance::Equal;
}

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& P) {
  std::vector<int> cols(P.max_part(), 0);
  for (int p : P.parts())
    for (int c = 0; c < p; ++c) ++cols[c];
  return Partition(std::move(cols));
}

/// Max part minus min part is at most one.
inline bool is_almost_rectangular(const Partition& P) {
  return P.max_part() - P.min_part() <= 1;
}

/// Maximal consecutive runs of S_P, each in increasing order.
inline std::vector<std::vector<int>> support_runs(const Partition& P) {
  std::vector<std::vector<int>> runs;
  for (int i : P.support()) {
    if (runs.empty() || runs.back().back() + 1 != i) runs.emplace_back();
    runs.back().push_back(i);
  }
  return runs;
}

/// r_P: minimum number of almost rectangular subpartitions covering P.
/// S_P splits into consecutive runs; a run of length m needs ceil(m/2)
/// pairs {a, a-1} or singletons, and runs are independent.
inline int ar_cover_number(const Partition& P) {
  int r = 0;
  for (const auto& run : support_runs(P))
    r += (static_cast<int>(run.size()) + 1) / 2;
  return r;
}

/// ob(P, a) = a*n_a + (a-1)*n_{a-1} + sum_{c > a} 2*n_c, for a in S_P.
inline int ob(const Partition& P, int a) {
  if (!P.has_level(a)) throw std::invalid_argument("ob: level not in S_P");
  int v = a * P.mult(a) + (a - 1) * P.mult(a - 1);
  for (int c : P.support())
    if (c > a) v += 2 * P.mult(c);
  return v;
}

/// All partitions of n, in descending lexicographic order of part lists.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, n);
  return out;
}

}  // namespace nilq
