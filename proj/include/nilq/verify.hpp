#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nilq/commutator.hpp"
#include "nilq/greene.hpp"
#include "nilq/linalg.hpp"
#include "nilq/partition.hpp"
#include "nilq/poset.hpp"
#include "nilq/rng.hpp"
#include "nilq/uchain.hpp"

namespace nilq {

/// Dominance-maximum generic Jordan type observed over random samples.
struct QEstimate {
  Partition partition;
  int samples = 0;
  std::uint32_t field = 0;
  std::uint64_t seed = 0;
  Partition estimate;
  std::map<Partition, int> histogram;
  bool unique_max = true;  // the estimate dominates every observed type
};

inline QEstimate estimate_q(const Partition& P, std::uint32_t field, int samples,
                            std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("estimate_q: samples >= 1");
  QEstimate est;
  est.partition = P;
  est.samples = samples;
  est.field = field;
  est.seed = seed;

  PosetDiagram D(P, false);
  auto orbits = ub_interval_orbits(D);
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    FpMat A = random_ub_element(D, orbits, field, rng);
    ++est.histogram[jordan_type(A)];
  }
  // the estimate is the type dominating every other observed type
  std::vector<Partition> maximal;
  for (auto& [type, cnt] : est.histogram) {
    bool dominated = false;
    for (auto& [other, cnt2] : est.histogram) {
      if (other == type) continue;
      if (dominance_cmp(other, type) == Dominance::Greater) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(type);
  }
  est.unique_max = maximal.size() == 1;
  est.estimate = *std::max_element(maximal.begin(), maximal.end());
  return est;
}

/// Every element of the subalgebra over a tiny field, for use as a floor
/// oracle. Small fields may genuinely disagree with the large-field
/// estimate, so disagreement is data, not an error.
struct ExhaustiveResult {
  Partition top;            // dominance maximum when unique_max, else the
                            // lexicographically largest maximal type
  bool unique_max = true;
  long long matrices = 0;
  std::map<Partition, long long> histogram;
};

inline ExhaustiveResult exhaustive_q(const Partition& P, std::uint32_t field) {
  if (field != 2 && field != 3)
    throw std::invalid_argument("exhaustive_q: field size must be 2 or 3");
  PosetDiagram D(P, false);
  auto orbits = ub_interval_orbits(D);
  const int dim = static_cast<int>(orbits.size());
  if (dim > 14)
    throw std::invalid_argument("exhaustive_q: affine dimension " + std::to_string(dim) +
                                " exceeds 14");
  ExhaustiveResult result;
  std::vector<int> digits(dim, 0);
  FpMat A = FpMat::Zero(D.size(), D.size());
  while (true) {
    for (int d = 0; d < dim; ++d) {
      Fp value(field, digits[d]);
      for (auto& [src, dst] : orbits[d]) A(dst, src) = value;
    }
    ++result.histogram[jordan_type(A)];
    ++result.matrices;
    int d = 0;
    while (d < dim && digits[d] == static_cast<int>(field) - 1) digits[d++] = 0;
    if (d == dim) break;
    ++digits[d];
  }
  std::vector<Partition> maximal;
  for (auto& [type, cnt] : result.histogram) {
    bool dominated = false;
    for (auto& [other, cnt2] : result.histogram) {
      if (other == type) continue;
      if (dominance_cmp(other, type) == Dominance::Greater) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(type);
  }
  result.unique_max = maximal.size() == 1;
  result.top = *std::max_element(maximal.begin(), maximal.end());
  return result;
}

enum class CheckStatus { Pass, Fail, Finding };

inline const char* to_cstring(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Finding: return "finding";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // empty when passing
};

struct CheckConfig {
  std::uint32_t field = kDefaultPrime;
  int samples = 25;
  std::uint64_t seed = 0;
  int detm_trials = 3;
};

/// Everything checked for one partition, plus the headline invariants.
struct CheckReport {
  Partition partition;
  int r_p = 0;
  Partition lambda_u;
  Partition oblak;
  Partition greene;
  Partition q_estimate;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::uint32_t field = 0;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  int findings() const {
    int f = 0;
    for (const auto& c : checks)
      if (c.status == CheckStatus::Finding) ++f;
    return f;
  }
};

inline CheckReport check_partition(const Partition& P, const CheckConfig& cfg) {
  CheckReport rep;
  rep.partition = P;
  rep.seed = cfg.seed;
  rep.field = cfg.field;
  rep.r_p = ar_cover_number(P);

  LambdaUProfile prof = lambda_u_profile(P);
  rep.lambda_u = prof.lambda;
  rep.oblak = oblak_recursion(P);
  PosetDiagram D(P, false);
  rep.greene = greene_lambda(D);
  QEstimate est = estimate_q(P, cfg.field, cfg.samples, cfg.seed);
  rep.q_estimate = est.estimate;
  const Partition& Q = est.estimate;

  auto add = [&](const std::string& name, bool ok, CheckStatus bad,
                 const std::string& witness) {
    rep.checks.push_back({name, ok ? CheckStatus::Pass : bad, ok ? "" : witness});
  };

  add("q_estimate_well_defined", est.unique_max, CheckStatus::Finding,
      "observed types have no dominance maximum");

  add("q_dominates_lambda_u", dominates(Q, rep.lambda_u), CheckStatus::Fail,
      "q=" + to_string(Q) + " lambda_u=" + to_string(rep.lambda_u));

  {
    bool ok = true;
    std::string bad;
    for (auto& [type, cnt] : est.histogram)
      if (!dominates(rep.greene, type)) {
        ok = false;
        bad = to_string(type);
        break;
      }
    add("incidence_bound_dominates_samples", ok, CheckStatus::Fail,
        "greene=" + to_string(rep.greene) + " sample=" + bad);
  }

  {
    int lc = longest_chain(D);
    bool ok = Q.max_part() == lc && prof.u[1] == lc;
    add("index_equals_longest_chain", ok, CheckStatus::Fail,
        "q_1=" + std::to_string(Q.max_part()) + " longest=" + std::to_string(lc) +
            " u_1=" + std::to_string(prof.u[1]));
  }

  add("min_parts_agree", Q.min_part() == rep.lambda_u.min_part(), CheckStatus::Fail,
      "q_min=" + std::to_string(Q.min_part()) +
          " lambda_u_min=" + std::to_string(rep.lambda_u.min_part()));

  {
    bool ok = rep.r_p > 3 || (Q == rep.lambda_u && Q == rep.greene);
    add("equality_when_r_at_most_3", ok, CheckStatus::Fail,
        "q=" + to_string(Q) + " lambda_u=" + to_string(rep.lambda_u) +
            " greene=" + to_string(rep.greene));
  }

  {
    bool ok = true;
    for (std::size_t j = 0; j + 1 < Q.parts().size(); ++j)
      if (Q.parts()[j] - Q.parts()[j + 1] < 2) ok = false;
    add("parts_gap_at_least_2", ok, CheckStatus::Fail, "q=" + to_string(Q));
  }

  {
    QEstimate twice = estimate_q(Q, cfg.field, cfg.samples,
                                 derive_seed(cfg.seed, "idempotent|" + to_string(Q)));
    rep.checks.push_back({"q_idempotent", twice.estimate == Q ? CheckStatus::Pass
                                                              : CheckStatus::Fail,
                          twice.estimate == Q
                              ? "heuristic: composes two estimates"
                              : "q=" + to_string(Q) +
                                    " q(q)=" + to_string(twice.estimate)});
  }

  add("part_count_equals_r", Q.num_parts() == rep.r_p, CheckStatus::Fail,
      "parts=" + std::to_string(Q.num_parts()) + " r_p=" + std::to_string(rep.r_p));

  add("lambda_probe", rep.greene == rep.lambda_u, CheckStatus::Finding,
      "greene=" + to_string(rep.greene) + " lambda_u=" + to_string(rep.lambda_u));

  {
    bool ok = true;
    std::string bad;
    for (int s = 1; s <= rep.r_p && ok; ++s) {
      for (const UChainSpec& spec : maximal_specs(P, s)) {
        bool nonzero = false;
        for (int t = 0; t < cfg.detm_trials && !nonzero; ++t) {
          std::uint64_t s2 = derive_seed(cfg.seed, "detm|" + to_string(spec) + "|" +
                                                       std::to_string(t));
          if (!det_m_numeric(P, spec, cfg.field, s2).is_zero()) nonzero = true;
        }
        if (!nonzero) {
          ok = false;
          bad = to_string(spec);
          break;
        }
      }
    }
    add("det_m_nonzero", ok, CheckStatus::Fail, "all trials zero for spec " + bad);
  }

  return rep;
}

struct SweepResult {
  int max_n = 0;
  CheckConfig config;
  std::vector<CheckReport> reports;
  std::vector<double> seconds_per_n;  // indexed by n-1; informational only

  int failed_reports() const {
    int f = 0;
    for (const auto& r : reports)
      if (!r.all_passed()) ++f;
    return f;
  }
  int findings() const {
    int f = 0;
    for (const auto& r : reports) f += r.findings();
    return f;
  }
};

/// Check every partition of every n <= max_n. Per-partition seeds are
/// derived from the master seed, so reports do not depend on the number
/// of worker threads.
inline SweepResult sweep(int max_n, const CheckConfig& cfg, int jobs = 1) {
  if (max_n < 1 || max_n > 12)
    throw std::invalid_argument("sweep: max_n must be within 1..12");
  SweepResult result;
  result.max_n = max_n;
  result.config = cfg;

  std::vector<Partition> all;
  std::vector<int> n_of;
  for (int n = 1; n <= max_n; ++n)
    for (auto& P : partitions_of(n)) {
      all.push_back(P);
      n_of.push_back(n);
    }
  result.reports.resize(all.size());
  result.seconds_per_n.assign(max_n, 0.0);

  auto run_one = [&](std::size_t idx) {
    CheckConfig local = cfg;
    local.seed = derive_seed(cfg.seed, to_string(all[idx]));
    try {
      result.reports[idx] = check_partition(all[idx], local);
    } catch (const std::exception& ex) {
      CheckReport rep;
      rep.partition = all[idx];
      rep.seed = local.seed;
      rep.field = cfg.field;
      rep.checks.push_back({"internal_error", CheckStatus::Fail, ex.what()});
      result.reports[idx] = rep;
    }
  };

  if (jobs <= 1) {
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
      auto t0 = std::chrono::steady_clock::now();
      run_one(idx);
      auto t1 = std::chrono::steady_clock::now();
      result.seconds_per_n[n_of[idx] - 1] +=
          std::chrono::duration<double>(t1 - t0).count();
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t idx = w; idx < all.size(); idx += jobs) run_one(idx);
      });
    for (auto& t : pool) t.join();
  }
  return result;
}

}  // namespace nilq
