#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilq/commutator.hpp"
#include "nilq/linalg.hpp"
#include "nilq/poly.hpp"
#include "nilq/rng.hpp"

using namespace nilq;

TEST_CASE("prime field basics") {
  const std::uint32_t p = 2147483647u;
  Fp a(p, 5), b(p, p - 2);
  CHECK((a + b).value() == 3);
  CHECK((a * b).value() == ((p - 10) % p));
  CHECK((a - a).is_zero());
  CHECK((a / a) == Fp(p, 1));
  CHECK(a.inverse() * a == Fp(1));
  CHECK(Fp(p, -3).value() == p - 3);
  CHECK(Fp(7, 5) + Fp(2) == Fp(7, 0));  // literals attach to the modulus
  CHECK_THROWS_AS(Fp(7, 1) + Fp(11, 1), std::invalid_argument);
  CHECK_THROWS_AS(Fp(7, 0).inverse(), std::domain_error);
  CHECK(is_prime(2147483647u));
  CHECK_FALSE(is_prime(2147483649u));
}

TEST_CASE("rank and determinant") {
  const std::uint32_t p = 101;
  FpMat A = FpMat::Zero(3, 3);
  A(0, 0) = Fp(p, 1); A(0, 1) = Fp(p, 2); A(0, 2) = Fp(p, 3);
  A(1, 0) = Fp(p, 2); A(1, 1) = Fp(p, 4); A(1, 2) = Fp(p, 6);  // 2x row 0
  A(2, 0) = Fp(p, 0); A(2, 1) = Fp(p, 1); A(2, 2) = Fp(p, 1);
  CHECK(rank_of(A) == 2);
  CHECK(det_of(A).is_zero());
  A(1, 1) = Fp(p, 5);
  CHECK(rank_of(A) == 3);
  // det by the cofactor route agrees with elimination
  CHECK(det_cofactor<Fp>(A) == det_of(A));

  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.below(5));
    FpMat M = FpMat::Zero(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) M(r, c) = Fp(p, static_cast<long long>(rng.below(p)));
    CHECK(det_cofactor<Fp>(M) == det_of(M));
  }
}

TEST_CASE("modulus-free literal matrices still eliminate") {
  // Identity() fills in plain integer literals; pivoting on them works
  CHECK(rank_of(FpMat::Identity(4, 4)) == 4);
  CHECK(det_of(FpMat::Identity(4, 4)) == Fp(1));
  CHECK(rank_of(FpMat::Zero(3, 3)) == 0);
}

TEST_CASE("nilpotency") {
  const std::uint32_t p = 101;
  FpMat N = FpMat::Zero(3, 3);
  N(0, 1) = Fp(p, 4);
  N(1, 2) = Fp(p, 9);
  CHECK(is_nilpotent(N));
  FpMat I = FpMat::Identity(3, 3);
  CHECK_FALSE(is_nilpotent(I));
  CHECK_THROWS_AS(jordan_type(I), std::domain_error);
}

TEST_CASE("jordan type from ranks") {
  const std::uint32_t p = 101;
  CHECK(jordan_type(FpMat::Zero(3, 3)) == parse_partition("1,1,1"));
  for (const char* text : {"4,2,1", "3,3", "5", "2,2,1,1"}) {
    Partition P = parse_partition(text);
    CHECK(jordan_type(jordan_matrix(P, p)) == P);
  }
}

// Independent characterization: the sum of the first i parts is the largest
// dimension of a subspace generated from i vectors under the matrix action.
// Checked over GF(2) where all vectors can be enumerated.
namespace {

int span_dim(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) return 0;
  std::vector<std::vector<int>> rows = gens;
  int n = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && rows[r][c])
        for (int j = 0; j < n; ++j) rows[r][j] ^= rows[rank][j];
    ++rank;
  }
  return rank;
}

std::vector<int> max_span_profile(const FpMat& A, int upto) {
  const int n = static_cast<int>(A.rows());
  std::vector<std::vector<std::vector<int>>> orbit;  // per vector: A^j v rows
  for (int code = 1; code < (1 << n); ++code) {
    std::vector<int> v(n, 0);
    for (int b = 0; b < n; ++b) v[b] = (code >> b) & 1;
    std::vector<std::vector<int>> rows;
    std::vector<int> cur = v;
    for (int j = 0; j < n; ++j) {
      bool zero = true;
      for (int x : cur) zero = zero && !x;
      if (zero) break;
      rows.push_back(cur);
      std::vector<int> nxt(n, 0);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          nxt[r] = (nxt[r] + static_cast<int>(A(r, c).value()) * cur[c]) & 1;
      cur = nxt;
    }
    orbit.push_back(rows);
  }
  std::vector<int> best(upto + 1, 0);
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from, int count) -> void {
    if (count > 0) {
      std::vector<std::vector<int>> gens;
      for (int idx : pick)
        for (const auto& row : orbit[idx]) gens.push_back(row);
      int d = span_dim(gens);
      best[count] = std::max(best[count], d);
    }
    if (count == upto) return;
    for (std::size_t next = from; next < orbit.size(); ++next) {
      pick.push_back(static_cast<int>(next));
      self(self, next + 1, count + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

TEST_CASE("rank route matches the max-span characterization over GF(2)") {
  Rng rng(99);
  int tested = 0;
  while (tested < 60) {
    int n = 3 + static_cast<int>(rng.below(5));  // 3..7
    FpMat A = FpMat::Zero(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c)
        A(r, c) = Fp(2, static_cast<long long>(rng.below(2)));
    Partition type = jordan_type(A);
    int r = type.num_parts();
    // cap the subset search: C(2^n - 1, r) generator choices
    if ((n == 5 && r > 3) || (n > 5 && r > 2)) continue;
    auto best = max_span_profile(A, r);
    long long prefix = 0;
    for (int i = 1; i <= r; ++i) {
      prefix += type.parts()[i - 1];
      CHECK(best[i] == prefix);
    }
    ++tested;
  }
}

TEST_CASE("polynomial arithmetic") {
  SparsePoly s4 = SparsePoly::variable(EdgeVar::beta(4));
  SparsePoly t2 = SparsePoly::variable(EdgeVar::alpha(2));
  SparsePoly z4 = SparsePoly::variable(EdgeVar::z(4));

  SparsePoly p = s4 * s4 + SparsePoly(3) * t2;
  CHECK(p.term_count() == 2);
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p * SparsePoly(0) == SparsePoly());
  CHECK((s4 * t2) * z4 == s4 * (t2 * z4));
  CHECK(s4 * t2 == t2 * s4);
  CHECK(SparsePoly(1) * p == p);

  SparsePoly q = s4 * t2 - t2 * s4;
  CHECK(q.is_zero());
}

TEST_CASE("polynomial text form") {
  SparsePoly s4 = SparsePoly::variable(EdgeVar::beta(4));
  SparsePoly s2 = SparsePoly::variable(EdgeVar::beta(2));
  SparsePoly t2 = SparsePoly::variable(EdgeVar::alpha(2));
  SparsePoly t4 = SparsePoly::variable(EdgeVar::alpha(4));
  SparsePoly z4 = SparsePoly::variable(EdgeVar::z(4));
  SparsePoly e31 = SparsePoly::variable(EdgeVar::e(3, 1));

  SparsePoly mu = s4 * s4 * s4 * s4 * s2 * s2 * s2 * t2 * t2 * t4 * z4;
  CHECK(to_string(mu) == "s_4^4*s_2^3*t_2^2*t_4*z_4");
  CHECK(to_string(SparsePoly(0)) == "0");
  CHECK(to_string(SparsePoly(1)) == "1");
  CHECK(to_string(SparsePoly(-2) * s4) == "-2*s_4");
  CHECK(to_string(t4 * s4 + z4 * z4) == "s_4*t_4 + z_4^2");
  CHECK(to_string(e31) == "t_{3,1}");
  CHECK(to_string(s4 - z4) == "s_4 - z_4");
}

TEST_CASE("matrices over the polynomial ring") {
  PolyMat A = PolyMat::Zero(2, 2);
  A(0, 1) = SparsePoly::variable(EdgeVar::beta(3));
  A(1, 0) = SparsePoly::variable(EdgeVar::alpha(3));
  PolyMat B = A * A;
  CHECK(B(0, 0) == A(0, 1) * A(1, 0));
  CHECK(B(0, 1).is_zero());
  PolyMat I = PolyMat::Identity(2, 2);
  CHECK(I(0, 0) == SparsePoly(1));
  CHECK(det_cofactor<SparsePoly>(A) == SparsePoly(0) - A(0, 1) * A(1, 0));
}
