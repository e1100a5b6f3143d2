// Acceptance suite: every criterion prints one pass/fail line with the
// measured runtime. The path to the CLI binary comes in as argv[1] for
// the criteria exercised end to end.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "nilq/commutator.hpp"
#include "nilq/greene.hpp"
#include "nilq/json_io.hpp"
#include "nilq/uchain.hpp"
#include "nilq/verify.hpp"

using namespace nilq;

namespace {

int g_failures = 0;

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void report(int num, bool pass, double secs, double limit, const std::string& detail) {
  bool in_time = limit <= 0 || secs < limit;
  bool ok = pass && in_time;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d (%.2f s%s): %s\n", ok ? "PASS" : "FAIL", num, secs,
              in_time ? "" : " OVER LIMIT", detail.c_str());
  std::fflush(stdout);
}

std::string run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

Vertex V(int u, int i, int k = 1) { return {u, i, k}; }

Partition brute_lambda(const Dag& d) {
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; prev < d.n; ++i) {
    int c = brute_force_coverage(d, i);
    parts.push_back(c - prev);
    prev = c;
  }
  return Partition(std::move(parts));
}

void criterion_1(const std::string& cli) {
  Timer t;
  bool ok = true;
  std::string detail = "qp/lambda-u/oblak on 4,2,1";
  Partition P = parse_partition("4,2,1"), expected = parse_partition("5,2");
  for (const char* sub : {"qp", "lambda-u", "oblak"}) {
    std::string out = trim(run_cli(cli, std::string(sub) + " -p 4,2,1"));
    if (out != "5,2") {
      ok = false;
      detail += std::string(" ") + sub + " said '" + out + "'";
    }
  }
  ok = ok && lambda_u(P) == expected && oblak_recursion(P) == expected;
  report(1, ok, t.seconds(), 1.0, detail);
}

void criterion_2() {
  Timer t;
  Partition P = parse_partition("4,2,2,1");
  UChain u2 = simple_uchain(P, 2), u4 = simple_uchain(P, 4);
  bool ok = u2.components[0] ==
            std::vector<Vertex>{V(1, 4), V(1, 2, 1), V(1, 2, 2), V(1, 1),
                                V(2, 2, 1), V(2, 2, 2), V(4, 4)};
  ok = ok && u4.components[0] == std::vector<Vertex>{V(1, 4), V(2, 4), V(3, 4), V(4, 4)};
  ok = ok && lambda_u(P) == parse_partition("7,2");
  ok = ok && lambda_u_profile(P).u == std::vector<long long>{0, 7, 9};
  report(2, ok, t.seconds(), 1.0, "simple chains and profile of 4,2,2,1");
}

void criterion_3() {
  Timer t;
  Partition P = parse_partition("5,4,3,3,2,1");
  bool ok = ob(P, 5) == 9 && ob(P, 4) == 12 && ob(P, 3) == 12 && ob(P, 2) == 11;
  ok = ok && uchain_size(P, UChainSpec({4, 2})) == 17;
  UChain c = build_uchain(P, UChainSpec({4, 2}));
  ok = ok && c.components[0] ==
                 std::vector<Vertex>{V(1, 5), V(1, 4), V(1, 3, 1), V(1, 3, 2),
                                     V(1, 2), V(1, 1), V(2, 2), V(3, 3, 1),
                                     V(3, 3, 2), V(4, 4), V(5, 5)};
  ok = ok && c.components[1] == std::vector<Vertex>{V(2, 5), V(2, 4), V(2, 3, 1),
                                                    V(2, 3, 2), V(3, 4), V(4, 5)};
  UChain c3 = build_uchain(P, UChainSpec({5, 3, 1}));
  ok = ok && c3.size() == 18 && c3.components[2] == std::vector<Vertex>{V(3, 5)};
  ok = ok && lambda_u(P) == parse_partition("12,5,1");
  report(3, ok, t.seconds(), 1.0, "chain data of 5,4,3,3,2,1");
}

void criterion_4() {
  Timer t;
  Partition P = parse_partition("5,4,3^3,2^3,1^2");
  bool ok = uchain_size(P, UChainSpec({3})) == 19;
  ok = ok && uchain_size(P, UChainSpec({4, 2})) == 25;
  QEstimate est = estimate_q(P, kDefaultPrime, 25, 313);
  ok = ok && est.estimate == parse_partition("19,6,1");
  report(4, ok, t.seconds(), 5.0, "generic type of 5,4,3^3,2^3,1^2");
}

void criterion_5(const std::string& cli) {
  Timer t;
  Partition P = parse_partition("4,2,1");
  std::string out = trim(run_cli(cli, "det-m -p 4,2,1 --spec 4,2 --symbolic"));
  bool ok = out == "s_4^4*s_2^3*t_2^2*t_4*z_4";
  SparsePoly d42 = det_m_symbolic(P, UChainSpec({4, 2}));
  ok = ok && d42.is_monomial() && to_string(d42) == "s_4^4*s_2^3*t_2^2*t_4*z_4";
  Monomial mu = d42.terms().begin()->first;
  ok = ok && d42.coefficient(mu) == 1;
  ok = ok && to_string(det_m_symbolic(P, UChainSpec({2}))) == "s_4^4*s_2^3*t_2^2*t_4";
  PosetDiagram D(P, true);
  PolyMat M = matrix_m(D, build_uchain(D, UChainSpec({4, 2})), symbolic_ar(P));
  SparsePoly expected = SparsePoly::variable(EdgeVar::alpha(4)) *
                            SparsePoly::variable(EdgeVar::beta(4)) +
                        SparsePoly::variable(EdgeVar::z(4)) *
                            SparsePoly::variable(EdgeVar::z(4));
  ok = ok && M(2, 6) == expected;
  report(5, ok, t.seconds(), 1.0, "symbolic determinants of 4,2,1");
}

void criterion_6() {
  Timer t;
  Partition P = parse_partition("5,4,3,3,2,1");
  PosetDiagram D(P, true);
  bool ok = chains_between(D, V(2, 5), V(2, 2), 5).size() == 1;
  ok = ok && chains_between(D, V(1, 5), V(3, 4), 7).size() == 2;
  long long entries = 0;
  for (int n = 1; n <= 8 && ok; ++n)
    for (const auto& Q : partitions_of(n)) {
      PosetDiagram Daug(Q, true);
      PolyMat A = symbolic_ar(Q);
      PolyMat power = A;
      for (int u = 1; u <= 6 && ok; ++u) {
        for (int a = 0; a < Daug.size() && ok; ++a)
          for (int b = 0; b < Daug.size() && ok; ++b) {
            ++entries;
            if (power(b, a) !=
                power_entry_via_chains(Daug, u, Daug.vertex(a), Daug.vertex(b)))
              ok = false;
          }
        power = (power * A).eval();
      }
    }
  report(6, ok, t.seconds(), 120.0,
         "chain counts and " + std::to_string(entries) + " power entries vs chain sums");
}

SweepResult g_sweep;  // shared by criteria 7, 8, 10

void criterion_7() {
  Timer t;
  CheckConfig cfg;
  cfg.seed = 1002;
  g_sweep = sweep(10, cfg, 1);
  double single = t.seconds();
  bool ok = g_sweep.reports.size() == 138;
  int bad = 0;
  for (const auto& rep : g_sweep.reports)
    for (const auto& c : rep.checks)
      if (c.name == "q_dominates_lambda_u" && c.status != CheckStatus::Pass) ++bad;
  ok = ok && bad == 0;

  Timer t4;
  SweepResult parallel = sweep(10, cfg, 4);
  double four_way = t4.seconds();
  ok = ok && to_json(parallel).dump() == to_json(g_sweep).dump();
  ok = ok && single < 600.0 && four_way < 180.0;
  report(7, ok, t.seconds(), 0,
         "dominance over the chain profile for all 138 partitions, n <= 10 "
         "(single " + std::to_string(single) + " s, 4-way " +
             std::to_string(four_way) + " s)");
}

void criterion_8() {
  Timer t;
  int bad = 0;
  for (const auto& rep : g_sweep.reports)
    for (const auto& c : rep.checks)
      if ((c.name == "index_equals_longest_chain" || c.name == "min_parts_agree" ||
           c.name == "equality_when_r_at_most_3" || c.name == "part_count_equals_r") &&
          c.status != CheckStatus::Pass)
        ++bad;
  report(8, bad == 0, t.seconds(), 0,
         "index, minimum part, r<=3 equality, part count across n <= 10");
}

void criterion_9() {
  Timer t;
  bool ok = true;
  for (int n = 1; n <= 10 && ok; ++n)
    for (const auto& P : partitions_of(n)) {
      Dag d = dag_of(PosetDiagram(P, false));
      if (greene_lambda(d) != brute_lambda(d)) {
        ok = false;
        break;
      }
    }
  Rng rng(909);
  for (int trial = 0; trial < 50 && ok; ++trial) {
    int n = 1 + static_cast<int>(rng.below(12));
    Dag d;
    d.n = n;
    int percent = 10 + static_cast<int>(rng.below(80));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.below(100) < static_cast<std::uint64_t>(percent))
          d.edges.emplace_back(a, b);
    if (greene_lambda(d) != brute_lambda(d)) ok = false;
  }
  report(9, ok, t.seconds(), 300.0,
         "flow chain-cover profile vs exhaustive oracle, posets and 50 random dags");
}

void criterion_10() {
  Timer t;
  int witnesses = 0;
  for (const auto& rep : g_sweep.reports)
    if (rep.greene != rep.lambda_u) ++witnesses;
  // a nonzero count is a research finding, not a failure
  report(10, true, t.seconds(), 0,
         "chain-cover vs multi-chain profile: " + std::to_string(witnesses) +
             " inequality witnesses across n <= 10" +
             (witnesses ? " (FINDING)" : ""));
}

void criterion_11() {
  Timer t;
  Rng seeds(1111);
  long long triples = 0;
  int all_zero = 0, zeros = 0;
  for (int n = 1; n <= 10; ++n)
    for (const auto& P : partitions_of(n))
      for (int s = 1; s <= ar_cover_number(P); ++s)
        for (const auto& spec : maximal_specs(P, s)) {
          ++triples;
          int zero_here = 0;
          for (int trial = 0; trial < 3; ++trial)
            if (det_m_numeric(P, spec, kDefaultPrime, seeds.next()).is_zero())
              ++zero_here;
          zeros += zero_here;
          if (zero_here == 3) ++all_zero;
        }
  report(11, all_zero == 0, t.seconds(), 0,
         std::to_string(triples) + " maximal-spec triples over p=2^31-1, " +
             std::to_string(zeros) + " zero evaluations, " +
             std::to_string(all_zero) + " all-zero triples");
}

void criterion_12(const std::string& cli) {
  Timer t;
  std::string a = run_cli(cli, "sweep --max-n 8 --seed 42 --json");
  std::string b = run_cli(cli, "sweep --max-n 8 --seed 42 --json");
  bool ok = !a.empty() && a == b;
  report(12, ok, t.seconds(), 0,
         "two sweep runs agree byte for byte (" + std::to_string(a.size()) +
             " bytes of JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  if (cli.empty())
    std::fprintf(stderr, "note: no CLI path given; CLI-level criteria will fail\n");
  criterion_1(cli);
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5(cli);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12(cli);
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
