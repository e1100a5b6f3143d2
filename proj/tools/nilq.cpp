// Command line front end: generic commuting Jordan types, chain invariants
// of the vertex poset, and the determinant machinery behind them.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "nilq/commutator.hpp"
#include "nilq/greene.hpp"
#include "nilq/json_io.hpp"
#include "nilq/partition.hpp"
#include "nilq/poset.hpp"
#include "nilq/rng.hpp"
#include "nilq/uchain.hpp"
#include "nilq/verify.hpp"

namespace {

struct Options {
  std::string partition;
  std::string spec;
  std::string out;
  bool json = false;
  bool augmented = false;
  bool symbolic = false;
  std::uint64_t seed = 0;
  std::uint64_t field = nilq::kDefaultPrime;
  int samples = 25;
  int max_n = 8;
  int jobs = 1;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + opt.out);
  file << text;
}

std::uint32_t checked_field(const Options& opt) {
  if (opt.field < 2 || opt.field > 4294967291ULL || !nilq::is_prime(opt.field))
    throw std::invalid_argument("--field must be a prime that fits 32 bits");
  return static_cast<std::uint32_t>(opt.field);
}

nilq::Partition need_partition(const Options& opt) {
  if (opt.partition.empty())
    throw std::invalid_argument("--partition is required");
  return nilq::parse_partition(opt.partition);
}

int run_qp(const Options& opt) {
  using namespace nilq;
  Partition P = need_partition(opt);
  std::uint32_t p = checked_field(opt);
  if (p <= static_cast<std::uint32_t>(P.n()))
    std::cerr << "warning: field size " << p << " does not exceed n = " << P.n()
              << "; the estimate may undershoot the infinite-field type\n";
  QEstimate est = estimate_q(P, p, opt.samples, opt.seed);
  if (!est.unique_max)
    std::cerr << "warning: observed types had no dominance maximum\n";
  emit(opt, opt.json ? to_json(est).dump(2) : to_string(est.estimate));
  return 0;
}

int run_lambda_u(const Options& opt) {
  using namespace nilq;
  Partition P = need_partition(opt);
  LambdaUProfile prof = lambda_u_profile(P);
  Partition oblak = oblak_recursion(P);
  if (opt.json) {
    Json j;
    j["partition"] = to_string(P);
    j["lambda_u"] = to_string(prof.lambda);
    j["oblak"] = to_string(oblak);
    j["u_profile"] = prof.u;
    j["covers_all"] = prof.covers_all;
    emit(opt, j.dump(2));
  } else {
    emit(opt, to_string(prof.lambda));
  }
  if (prof.lambda != oblak) {
    std::cerr << "error: recursive peeling gave " << to_string(oblak)
              << " but the chain profile gave " << to_string(prof.lambda) << "\n";
    return 1;
  }
  if (!prof.covers_all) {
    std::cerr << "finding: the largest multi-chain misses " << P.n() - prof.u.back()
              << " vertices\n";
    return 1;
  }
  return 0;
}

int run_lambda(const Options& opt) {
  using namespace nilq;
  Partition P = need_partition(opt);
  Partition lam = greene_lambda(PosetDiagram(P, false));
  if (opt.json) {
    Json j;
    j["partition"] = to_string(P);
    j["greene"] = to_string(lam);
    emit(opt, j.dump(2));
  } else {
    emit(opt, to_string(lam));
  }
  return 0;
}

int run_oblak(const Options& opt) {
  using namespace nilq;
  Partition P = need_partition(opt);
  emit(opt, to_string(oblak_recursion(P)));
  return 0;
}

int run_poset(const Options& opt) {
  using namespace nilq;
  Partition P = need_partition(opt);
  PosetDiagram D(P, opt.augmented);
  emit(opt, opt.json ? to_json(D).dump(2) : to_dot(D));
  return 0;
}

int run_uchains(const Options& opt) {
  using namespace nilq;
  Partition P = need_partition(opt);
  PosetDiagram Daug(P, true);
  int r = ar_cover_number(P);
  Json chains = Json::array();
  std::string text;
  for (int s = 1; s <= r; ++s) {
    long long best = 0;
    for (const auto& spec : enumerate_specs(P, s))
      best = std::max(best, uchain_size(P, spec));
    for (const auto& spec : maximal_specs(P, s)) {
      UChain chain = build_uchain(Daug, spec);
      Json j = to_json(chain);
      j["maximal"] = true;
      j["largest_for_s"] = chain.size() == best;
      auto singles = singleton_levels(P, spec);
      j["singleton_levels"] = singles;
      chains.push_back(j);
      text += "s=" + std::to_string(s) + " spec=(" + to_string(spec) +
              ") length=" + std::to_string(chain.size()) +
              (chain.size() == best ? "  <- largest" : "") + "\n";
      for (const auto& comp : chain.components) {
        text += "   ";
        for (const Vertex& v : comp) text += " " + to_string(v);
        text += "\n";
      }
    }
  }
  if (opt.json) {
    Json j;
    j["partition"] = to_string(P);
    j["r_p"] = r;
    j["lambda_u"] = to_string(lambda_u(P));
    j["chains"] = chains;
    emit(opt, j.dump(2));
  } else {
    text += "lambda_u = " + to_string(lambda_u(P)) + "\n";
    emit(opt, text);
  }
  return 0;
}

int run_det_m(const Options& opt) {
  using namespace nilq;
  Partition P = need_partition(opt);
  if (opt.spec.empty()) throw std::invalid_argument("--spec is required");
  UChainSpec spec = parse_spec(opt.spec);
  spec.validate(P);
  PosetDiagram Daug(P, true);
  UChain chain = build_uchain(Daug, spec);

  Json j;
  j["partition"] = to_string(P);
  j["spec"] = spec.levels;
  j["size"] = chain.size();
  if (opt.symbolic) {
    SparsePoly det = det_m_symbolic(P, spec);
    j["mode"] = "symbolic";
    j["matrix"] = to_json(matrix_m(Daug, chain, symbolic_ar(P)));
    j["det"] = to_string(det);
    emit(opt, opt.json ? j.dump(2) : to_string(det));
    return 0;
  }
  std::uint32_t p = checked_field(opt);
  Rng rng(opt.seed);
  VarAssignment asg = random_adequate_assignment(P, p, rng);
  FpMat M = matrix_m(Daug, chain, specialize_ar(P, asg, p));
  Fp det = det_of(M);
  j["mode"] = "numeric";
  j["field"] = p;
  j["seed"] = opt.seed;
  j["matrix"] = to_json(M);
  j["det"] = det.value();
  emit(opt, opt.json ? j.dump(2) : std::to_string(det.value()));
  return 0;
}

std::string human_report(const nilq::CheckReport& rep) {
  using namespace nilq;
  std::string text = "partition " + to_string(rep.partition) +
                     "  n=" + std::to_string(rep.partition.n()) +
                     "  r_p=" + std::to_string(rep.r_p) + "\n";
  text += "  lambda_u=" + to_string(rep.lambda_u) + "  oblak=" + to_string(rep.oblak) +
          "  greene=" + to_string(rep.greene) +
          "  q_estimate=" + to_string(rep.q_estimate) + "\n";
  for (const auto& c : rep.checks) {
    text += std::string("  [") + to_cstring(c.status) + "] " + c.name;
    if (!c.witness.empty()) text += "  (" + c.witness + ")";
    text += "\n";
  }
  return text;
}

int run_verify(const Options& opt) {
  using namespace nilq;
  Partition P = need_partition(opt);
  CheckConfig cfg;
  cfg.field = checked_field(opt);
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  CheckReport rep = check_partition(P, cfg);
  emit(opt, opt.json ? to_json(rep).dump(2) : human_report(rep));
  return rep.all_passed() ? 0 : 1;
}

int run_sweep(const Options& opt) {
  using namespace nilq;
  CheckConfig cfg;
  cfg.field = checked_field(opt);
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  SweepResult res = sweep(opt.max_n, cfg, opt.jobs);
  if (opt.jobs <= 1) {
    for (int n = 1; n <= res.max_n; ++n)
      std::cerr << "n=" << n << ": " << res.seconds_per_n[n - 1] << " s\n";
  }
  if (opt.json) {
    emit(opt, to_json(res).dump(2));
  } else {
    std::string text;
    for (const auto& rep : res.reports) {
      text += to_string(rep.partition);
      text += rep.all_passed() ? ": ok" : ": FAILED";
      if (int f = rep.findings()) text += " (" + std::to_string(f) + " findings)";
      text += "\n";
    }
    text += "checked " + std::to_string(res.reports.size()) + " partitions, " +
            std::to_string(res.failed_reports()) + " failed, " +
            std::to_string(res.findings()) + " findings\n";
    emit(opt, text);
  }
  return res.failed_reports() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of nilpotent commutators"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool partition_required) {
    if (partition_required)
      cmd->add_option("--partition,-p", opt.partition,
                      "partition, e.g. 4,2,1 or 5,4,3^3,2^3,1^2");
    cmd->add_flag("--json", opt.json, "machine readable output");
    cmd->add_option("--out", opt.out, "write output to a file");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--field", opt.field, "prime modulus");
    cmd->add_option("--samples", opt.samples, "samples per estimate");
    return cmd;
  };

  CLI::App* qp = add_common(app.add_subcommand("qp", "estimate the generic commuting Jordan type"), true);
  CLI::App* lamu = add_common(app.add_subcommand("lambda-u", "multi-chain invariant of the vertex poset"), true);
  CLI::App* lam = add_common(app.add_subcommand("lambda", "chain-cover invariant of the vertex poset"), true);
  CLI::App* obl = add_common(app.add_subcommand("oblak", "recursive chain peeling"), true);
  CLI::App* pos = add_common(app.add_subcommand("poset", "emit the vertex diagram (DOT or JSON)"), true);
  pos->add_flag("--augmented", opt.augmented, "include the augmented wrap edges");
  CLI::App* uch = add_common(app.add_subcommand("uchains", "list maximal multi-chains with lengths"), true);
  CLI::App* det = add_common(app.add_subcommand("det-m", "determinant of the chain projection matrix"), true);
  det->add_option("--spec", opt.spec, "chain spec, e.g. 4,2");
  det->add_flag("--symbolic", opt.symbolic, "expand over the polynomial ring");
  CLI::App* ver = add_common(app.add_subcommand("verify", "run every check for one partition"), true);
  CLI::App* swp = add_common(app.add_subcommand("sweep", "run every check for all partitions up to a size"), false);
  swp->add_option("--max-n", opt.max_n, "largest partition size (<= 12)");
  swp->add_option("--jobs", opt.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (qp->parsed()) return run_qp(opt);
    if (lamu->parsed()) return run_lambda_u(opt);
    if (lam->parsed()) return run_lambda(opt);
    if (obl->parsed()) return run_oblak(opt);
    if (pos->parsed()) return run_poset(opt);
    if (uch->parsed()) return run_uchains(opt);
    if (det->parsed()) return run_det_m(opt);
    if (ver->parsed()) return run_verify(opt);
    if (swp->parsed()) return run_sweep(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
