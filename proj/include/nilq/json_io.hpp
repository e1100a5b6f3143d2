#pragma once

#include <json.hpp>

#include "nilq/commutator.hpp"
#include "nilq/poset.hpp"
#include "nilq/uchain.hpp"
#include "nilq/verify.hpp"

namespace nilq {

// nlohmann::ordered_json keeps insertion order, which keeps every
// serialization byte-stable for identical inputs.
using Json = nlohmann::ordered_json;

inline Json to_json(const Vertex& v) { return Json::array({v.u, v.i, v.k}); }

inline Json to_json(const PosetDiagram& D) {
  Json j;
  j["partition"] = to_string(D.partition());
  j["augmented"] = D.augmented();
  j["vertices"] = Json::array();
  for (const Vertex& v : D.vertices()) j["vertices"].push_back(to_json(v));
  j["edges"] = Json::array();
  for (const auto& e : D.edges()) {
    Json je;
    je["from"] = to_json(D.vertex(e.src));
    je["to"] = to_json(D.vertex(e.dst));
    je["var"] = e.var.name();
    if (e.augmented_only) je["augmented_only"] = true;
    j["edges"].push_back(je);
  }
  return j;
}

inline Json to_json(const UChain& chain) {
  Json j;
  j["spec"] = chain.spec.levels;
  j["length"] = chain.vertex_set.size();
  j["components"] = Json::array();
  for (const auto& comp : chain.components) {
    Json jc = Json::array();
    for (const Vertex& v : comp) jc.push_back(to_json(v));
    j["components"].push_back(jc);
  }
  return j;
}

/// Nonzero entries as (row, col, value) triplets.
inline Json to_json(const FpMat& A) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < A.rows(); ++r)
    for (Eigen::Index c = 0; c < A.cols(); ++c)
      if (!A(r, c).is_zero()) j.push_back(Json::array({r, c, A(r, c).value()}));
  return j;
}

inline Json to_json(const PolyMat& A) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < A.rows(); ++r)
    for (Eigen::Index c = 0; c < A.cols(); ++c)
      if (!A(r, c).is_zero()) j.push_back(Json::array({r, c, to_string(A(r, c))}));
  return j;
}

inline Json to_json(const QEstimate& est) {
  Json j;
  j["partition"] = to_string(est.partition);
  j["n"] = est.partition.n();
  j["samples"] = est.samples;
  j["field"] = est.field;
  j["seed"] = est.seed;
  j["estimate"] = to_string(est.estimate);
  j["unique_max"] = est.unique_max;
  j["histogram"] = Json::array();
  for (auto& [type, count] : est.histogram) {
    Json h;
    h["type"] = to_string(type);
    h["count"] = count;
    j["histogram"].push_back(h);
  }
  return j;
}

inline Json to_json(const CheckReport& rep) {
  Json j;
  j["partition"] = to_string(rep.partition);
  j["n"] = rep.partition.n();
  j["r_p"] = rep.r_p;
  j["lambda_u"] = to_string(rep.lambda_u);
  j["oblak"] = to_string(rep.oblak);
  j["greene"] = to_string(rep.greene);
  j["q_estimate"] = to_string(rep.q_estimate);
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["status"] = to_cstring(c.status);
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  j["seed"] = rep.seed;
  j["field"] = rep.field;
  return j;
}

inline Json to_json(const SweepResult& res) {
  Json j;
  j["max_n"] = res.max_n;
  j["seed"] = res.config.seed;
  j["field"] = res.config.field;
  j["samples"] = res.config.samples;
  j["reports"] = Json::array();
  int checks_passed = 0, checks_failed = 0;
  for (const auto& rep : res.reports) {
    j["reports"].push_back(to_json(rep));
    for (const auto& c : rep.checks)
      (c.status == CheckStatus::Fail ? checks_failed : checks_passed) += 1;
  }
  Json summary;
  summary["partitions"] = res.reports.size();
  summary["reports_failed"] = res.failed_reports();
  summary["checks_passed"] = checks_passed;
  summary["checks_failed"] = checks_failed;
  summary["findings"] = res.findings();
  j["summary"] = summary;
  return j;
}

}  // namespace nilq
