#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hookpair/bijections.hpp"
#include "hookpair/partition.hpp"
#include "hookpair/projective.hpp"
#include "hookpair/serialize.hpp"

namespace hookpair {

/// Every class-B partition for this k: one per subset of {1..k}, taken by
/// increasing bitmask.
inline std::vector<ClassBPartition> enumerate_class_B(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidBound, "k must be positive");
  if (k > 20) throw Error(ErrorCode::InvalidBound, "k too large for subset enumeration");
  std::vector<ClassBPartition> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> lambda;
    for (int v = k; v >= 1; --v) {
      if (mask & (1u << (v - 1))) lambda.push_back(v);
    }
    out.push_back(alpha_from_strict(StrictPartition::make(std::move(lambda), k)));
  }
  return out;
}

enum class Identity { Hook = 1, ArmLeg = 2, Rotation = 3, Projective = 4 };

constexpr std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::Hook: return "1";
    case Identity::ArmLeg: return "2";
    case Identity::Rotation: return "3";
    case Identity::Projective: return "proj";
  }
  return "?";
}

inline Identity parse_identity(std::string_view s) {
  if (s == "1") return Identity::Hook;
  if (s == "2") return Identity::ArmLeg;
  if (s == "3") return Identity::Rotation;
  if (s == "proj" || s == "projective") return Identity::Projective;
  throw Error(ErrorCode::IndexOutOfRange, "unknown theorem '" + std::string(s) + "'");
}

/// Worker count from HOOKPAIR_JOBS, or 1.
inline int default_jobs() {
  if (const char* env = std::getenv("HOOKPAIR_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct SweepConfig {
  int max_n = 1;
  int max_k = 1;
  std::vector<Identity> theorems{Identity::Hook, Identity::ArmLeg, Identity::Rotation};
  std::optional<std::string> out;
  int jobs = 1;

  void validate() const {
    if (max_n < 1 || max_k < 1) throw Error(ErrorCode::InvalidBound, "max-n and max-k must be at least 1");
    if (theorems.empty()) throw Error(ErrorCode::InvalidBound, "no theorem selected");
    if (jobs < 1) throw Error(ErrorCode::InvalidBound, "jobs must be at least 1");
  }
};

struct CaseResult {
  Identity theorem = Identity::Hook;
  int k = 0;
  int n = 0;
  std::vector<int> alpha;
  std::vector<int> lambda;       // projective cases only
  bool passed = false;
  bool range_formulas_ok = true;  // projective cases only
  std::string failure;
};

struct SweepReport {
  SweepConfig config;
  std::vector<CaseResult> cases;  // enumeration order
  std::map<Identity, std::size_t> counts;
  std::optional<CaseResult> first_counterexample;
  std::size_t range_formula_mismatches = 0;
  double seconds = 0;

  bool passed() const noexcept { return !first_counterexample; }
};

namespace detail {

struct SweepTask {
  Identity theorem;
  std::optional<Partition> partition;
  std::optional<ClassBPartition> class_b;
};

inline CaseResult run_task(const SweepTask& task) {
  CaseResult res;
  res.theorem = task.theorem;
  if (task.theorem == Identity::Projective) {
    const ClassBPartition& b = *task.class_b;
    res.k = b.k();
    res.n = b.alpha.n();
    res.alpha.assign(b.alpha.parts().begin(), b.alpha.parts().end());
    res.lambda = b.lambda.parts();
    const ProjectiveReport rep = verify_projective(b);
    res.passed = rep.passed();
    res.range_formulas_ok = rep.range_formulas_ok();
    if (!rep.passed()) {
      res.failure = rep.difference.value_or("projective proof step failed");
    }
    return res;
  }
  const Partition& p = *task.partition;
  res.k = p.k();
  res.n = p.n();
  res.alpha.assign(p.parts().begin(), p.parts().end());
  const TheoremReport rep = verify_theorem(p, static_cast<int>(task.theorem));
  res.passed = rep.passed();
  res.failure = rep.failure();
  return res;
}

}  // namespace detail

inline void write_report(const SweepReport& rep, const std::string& path);

/// Runs the selected verifiers over every input with k <= max_k (and
/// n <= max_n for theorems 1-3). Results come back in enumeration order
/// regardless of the worker count. Writes the JSON report when cfg.out is
/// set.
inline SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<Identity> theorems = cfg.theorems;
  std::sort(theorems.begin(), theorems.end());
  theorems.erase(std::unique(theorems.begin(), theorems.end()), theorems.end());

  std::vector<detail::SweepTask> tasks;
  for (Identity id : theorems) {
    for (int k = 1; k <= cfg.max_k; ++k) {
      if (id == Identity::Projective) {
        for (auto& b : enumerate_class_B(k)) tasks.push_back({id, std::nullopt, std::move(b)});
        continue;
      }
      for (int n = 1; n <= cfg.max_n; ++n) {
        for_each_partition(k, n, [&](const Partition& p) { tasks.push_back({id, p, std::nullopt}); });
      }
    }
  }

  std::vector<CaseResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) results[t] = detail::run_task(tasks[t]);
  };
  {
    const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  SweepReport rep;
  rep.config = cfg;
  rep.config.theorems = theorems;
  for (auto& r : results) {
    ++rep.counts[r.theorem];
    if (!r.passed && !rep.first_counterexample) rep.first_counterexample = r;
    if (!r.range_formulas_ok) ++rep.range_formula_mismatches;
  }
  rep.cases = std::move(results);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cfg.out) write_report(rep, *cfg.out);
  return rep;
}

inline json case_json(const CaseResult& c) {
  json out = {{"theorem", std::string(to_string(c.theorem))}, {"k", c.k}, {"n", c.n}, {"alpha", c.alpha}};
  if (c.theorem == Identity::Projective) {
    out["lambda"] = c.lambda;
    out["rangeFormulas"] = verdict(c.range_formulas_ok);
  }
  out["verdict"] = verdict(c.passed);
  if (!c.passed) out["failure"] = c.failure;
  return out;
}

/// The wall-clock duration is deliberately absent so equal configurations
/// give byte-identical reports.
inline json to_json(const SweepReport& rep) {
  json theorems = json::array();
  for (Identity id : rep.config.theorems) theorems.push_back(std::string(to_string(id)));
  json counts = json::object();
  for (const auto& [id, c] : rep.counts) counts[std::string(to_string(id))] = c;
  json cases = json::array();
  for (const auto& c : rep.cases) cases.push_back(case_json(c));
  return {{"config", {{"maxK", rep.config.max_k}, {"maxN", rep.config.max_n}, {"theorems", theorems}}},
          {"verdict", verdict(rep.passed())},
          {"counts", counts},
          {"firstCounterexample", rep.first_counterexample ? case_json(*rep.first_counterexample) : json(nullptr)},
          {"projectiveRangeFormulaMismatches", rep.range_formula_mismatches},
          {"cases", cases}};
}

inline void write_report(const SweepReport& rep, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << to_json(rep).dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace hookpair
