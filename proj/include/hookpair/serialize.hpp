#pragma once

#include <json.hpp>

#include "hookpair/bijections.hpp"
#include "hookpair/cell_set.hpp"
#include "hookpair/dyck.hpp"
#include "hookpair/multiset.hpp"
#include "hookpair/projective.hpp"

namespace hookpair {

using json = nlohmann::ordered_json;

/// {"rows": [{"row": r, "colMin": a, "colMax": b}, ...]}, rows ascending. A
/// row with gaps is written as one entry per contiguous run.
inline json to_json(const CellSet& g) {
  json rows = json::array();
  for (const auto& r : g.rows()) {
    const auto cells = g.row(r.row);
    int start = cells.front().col;
    for (std::size_t t = 1; t <= cells.size(); ++t) {
      if (t == cells.size() || cells[t].col != cells[t - 1].col + 1) {
        rows.push_back({{"row", r.row}, {"colMin", start}, {"colMax", cells[t - 1].col}});
        if (t < cells.size()) start = cells[t].col;
      }
    }
  }
  return {{"rows", rows}};
}

/// [{"arm": a, "leg": l, "count": c}, ...] in (arm, leg) order.
inline json to_json(const ArmLegMultiset& m) {
  json out = json::array();
  for (const auto& [key, c] : m) out.push_back({{"arm", key.arm}, {"leg", key.leg}, {"count", c}});
  return out;
}

inline json to_json(const IntMultiset& m) {
  json out = json::array();
  for (const auto& [key, c] : m) out.push_back({{"value", key}, {"count", c}});
  return out;
}

inline json cell_json(Cell x) { return json::array({x.row, x.col}); }

/// [{"from": [r,c], "to": [r,c], "target": tag, "al": [a,l]}, ...] where al
/// is measured in source_ambient.
inline json to_json(const CellMap& map, const CellSet& source_ambient) {
  json out = json::array();
  for (const auto& e : map) {
    const ArmLegPair al = arm_leg(source_ambient, e.from);
    out.push_back({{"from", cell_json(e.from)},
                   {"to", cell_json(e.to)},
                   {"target", std::string(to_string(e.target))},
                   {"al", json::array({al.arm, al.leg})}});
  }
  return out;
}

inline json to_json(const BijectionCertificate& cert) {
  json entries = json::array();
  for (const auto& r : cert.records) {
    entries.push_back({{"from", cell_json(r.from)},
                       {"to", cell_json(r.to)},
                       {"target", std::string(to_string(r.target))},
                       {"al", json::array({r.source_al.arm, r.source_al.leg})},
                       {"targetAl", json::array({r.target_al.arm, r.target_al.leg})},
                       {"ok", r.ok}});
  }
  return {{"source", std::string(to_string(cert.source))},
          {"statistic", cert.statistic == Statistic::ArmLeg ? "armleg" : "hook"},
          {"map", entries},
          {"verdict", cert.passed() ? "pass" : "fail"},
          {"failures", cert.failures}};
}

/// {"steps": [{"dir": +1|-1, "kind": "x"|"z", "index": j}, ...]}
inline json to_json(const DyckPath& d) {
  json steps = json::array();
  for (const auto& st : d.steps()) {
    steps.push_back({{"dir", st.dir}, {"kind", st.label.kind == LabelKind::X ? "x" : "z"}, {"index", st.label.index}});
  }
  return {{"steps", steps}};
}

inline json to_json(const TheoremReport& rep) {
  json out = {{"theorem", rep.theorem},
              {"k", rep.partition.k()},
              {"n", rep.partition.n()},
              {"alpha", std::vector<int>(rep.partition.parts().begin(), rep.partition.parts().end())}};
  if (rep.theorem == 1) {
    out["lhs"] = to_json(rep.hook_lhs);
    out["rhs"] = to_json(rep.hook_rhs);
  } else {
    out["lhs"] = to_json(rep.al_lhs);
    out["rhs"] = to_json(rep.al_rhs);
  }
  out["oracle"] = rep.oracle_equal ? "pass" : "fail";
  out["certificate"] = to_json(rep.certificate);
  out["verdict"] = rep.passed() ? "pass" : "fail";
  if (!rep.passed()) out["counterexample"] = rep.failure();
  return out;
}

inline const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

/// {"alpha": [...], "lambda": [...], "m": m, "theorem": "pass"|"fail",
///  "perI": [{"i", "u", "s", "techprop", "mChecks", ...}, ...]}
inline json to_json(const ProjectiveReport& rep) {
  json per_i = json::array();
  for (const auto& st : rep.steps) {
    json e = {{"i", st.i}, {"u", nullptr}, {"s", st.s}, {"techprop", nullptr}, {"mChecks", nullptr}};
    if (st.u) e["u"] = *st.u;
    if (st.techprop) {
      e["techprop"] = json::array({st.techprop->parts[0], st.techprop->parts[1], st.techprop->parts[2], st.techprop->parts[3]});
    }
    if (st.mdec) {
      e["mChecks"] = verdict(st.mdec->structural_ok() && st.mdec->ranges_at_split_row_ok());
      e["splitRow"] = st.mdec->split_row;
      e["rangeFormulas"] = verdict(st.mdec->ranges_ok());
    } else {
      e["skipped"] = "no T_[i] cell above the diagonal";
    }
    per_i.push_back(std::move(e));
  }
  const auto& alpha = rep.b.alpha.parts();
  json out = {{"alpha", std::vector<int>(alpha.begin(), alpha.end())},
              {"lambda", rep.b.lambda.parts()},
              {"m", rep.b.m()},
              {"theorem", verdict(rep.theorem_ok() && rep.p_sq_equals_p_t && rep.al_p_sq_equals_al_p_t)},
              {"perI", per_i},
              {"verdict", verdict(rep.passed())}};
  if (rep.difference) out["counterexample"] = *rep.difference;
  return out;
}

}  // namespace hookpair
