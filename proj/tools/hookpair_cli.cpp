// hookpair: inspect the skew diagrams, bijections and Dyck paths behind the
// hook/arm-leg multiset identities, and sweep them exhaustively.
//
// Exit status: 0 everything checked passed, 1 a counterexample was found,
// 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hookpair/hookpair.hpp"

namespace {

using namespace hookpair;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse part '" + item + "'");
    }
  }
  return parts;
}

struct ShapeArgs {
  int k = 0;
  int n = 0;
  std::string alpha;

  void add_to(CLI::App* app, bool n_required = true) {
    app->add_option("--k", k, "number of parts (rows)")->required();
    auto* opt = app->add_option("--n", n, "part bound (columns)");
    if (n_required) opt->required();
    app->add_option("--alpha", alpha, "comma-separated parts; missing trailing zeros are padded")->required();
  }

  Partition partition() const { return Partition::padded(parse_parts(alpha), k, n); }
};

ClassBPartition require_class_b(const Partition& p) {
  auto b = is_class_B(p);
  if (!b) throw UsageError(p.to_string() + " is not of the form (l | l-1)");
  return *b;
}

void print_multiset(std::ostream& os, const ArmLegMultiset& m) {
  os << "{";
  bool first = true;
  for (const auto& [key, c] : m) {
    os << (first ? "" : ", ") << key.to_string();
    if (c > 1) os << "x" << c;
    first = false;
  }
  os << "}";
}

void print_multiset(std::ostream& os, const IntMultiset& m) {
  os << "{";
  bool first = true;
  for (const auto& [key, c] : m) {
    os << (first ? "" : ", ") << key;
    if (c > 1) os << "x" << c;
    first = false;
  }
  os << "}";
}

int cmd_verify(const ShapeArgs& shape, const std::string& theorem, bool as_json) {
  const Identity id = parse_identity(theorem);
  if (id == Identity::Projective) {
    ShapeArgs s = shape;
    if (s.n == 0) s.n = s.k + 1;
    const ProjectiveReport rep = verify_projective(require_class_b(s.partition()));
    if (as_json) {
      std::cout << to_json(rep).dump(2) << '\n';
    } else {
      std::cout << "projective identity for alpha=" << rep.b.alpha.to_string() << ": "
                << (rep.theorem_ok() ? "pass" : "fail") << '\n';
      std::cout << "  AL(p(SQ)) = ";
      print_multiset(std::cout, rep.lhs);
      std::cout << "\n  p(SQ) = p(T): " << verdict(rep.p_sq_equals_p_t && rep.al_p_sq_equals_al_p_t) << '\n';
      for (const auto& st : rep.steps) {
        std::cout << "  i=" << st.i << " s=" << st.s;
        if (!st.u) {
          std::cout << " u=none (M-decomposition skipped)\n";
          continue;
        }
        std::cout << " u=" << *st.u << " techprop=" << verdict(st.techprop->all())
                  << " mChecks=" << verdict(st.mdec->structural_ok() && st.mdec->ranges_at_split_row_ok())
                  << " splitRow=" << st.mdec->split_row << " rangeFormulas=" << verdict(st.mdec->ranges_ok())
                  << '\n';
      }
      if (rep.difference) std::cout << "  counterexample: " << *rep.difference << '\n';
    }
    return rep.passed() ? kExitPass : kExitCounterexample;
  }

  const TheoremReport rep = verify_theorem(shape.partition(), static_cast<int>(id));
  if (as_json) {
    std::cout << to_json(rep).dump(2) << '\n';
  } else {
    std::cout << "theorem " << rep.theorem << " for alpha=" << rep.partition.to_string() << ", k=" << rep.partition.k()
              << ", n=" << rep.partition.n() << ": " << verdict(rep.passed()) << '\n';
    std::cout << "  lhs = ";
    if (rep.theorem == 1) {
      print_multiset(std::cout, rep.hook_lhs);
      std::cout << "\n  rhs = ";
      print_multiset(std::cout, rep.hook_rhs);
    } else {
      print_multiset(std::cout, rep.al_lhs);
      std::cout << "\n  rhs = ";
      print_multiset(std::cout, rep.al_rhs);
    }
    std::cout << "\n  oracle: " << verdict(rep.oracle_equal) << ", certificate: " << verdict(rep.certificate.passed())
              << " (" << rep.certificate.records.size() << " cells)\n";
    if (!rep.passed()) std::cout << "  counterexample: " << rep.failure() << '\n';
  }
  return rep.passed() ? kExitPass : kExitCounterexample;
}

int cmd_sweep(SweepConfig cfg, const std::vector<std::string>& theorems, bool projective) {
  if (!theorems.empty()) {
    cfg.theorems.clear();
    for (const auto& t : theorems) cfg.theorems.push_back(parse_identity(t));
  }
  if (projective) cfg.theorems.push_back(Identity::Projective);
  const SweepReport rep = run_sweep(cfg);
  for (const auto& [id, count] : rep.counts) {
    std::cout << "theorem " << to_string(id) << ": " << count << " cases\n";
  }
  if (rep.range_formula_mismatches) {
    std::cout << "projective closed-form ranges with s mismatched in " << rep.range_formula_mismatches
              << " case(s); see rangeFormulas in the report\n";
  }
  std::cout << "verdict: " << verdict(rep.passed()) << " (" << rep.seconds << " s)\n";
  if (rep.first_counterexample) {
    const auto& c = *rep.first_counterexample;
    std::cout << "first counterexample: theorem " << to_string(c.theorem) << " k=" << c.k << " n=" << c.n << ": "
              << c.failure << '\n';
  }
  return rep.passed() ? kExitPass : kExitCounterexample;
}

int cmd_show(const ShapeArgs& shape, const std::string& region, bool pq, std::optional<int> dots,
             std::optional<int> shift, bool as_json) {
  const Partition p = shape.partition();
  CellSet g;
  std::optional<int> diag;
  if (region == "Ti") {
    if (!shift) throw UsageError("--region Ti needs --i");
    const ClassBPartition b = require_class_b(p);
    g = shift_Ti(b, *shift).cells;
    if (pq) diag = diagonal_spec(DiagonalKind::T, b).sum;
  } else {
    const RegionKind kind = parse_region(region);
    g = build_region(p, kind);
    if (pq) {
      const auto dk = diagonal_kind(kind);
      if (!dk) throw Error(ErrorCode::KindWithoutDiagonal, region);
      diag = diagonal_spec(*dk, require_class_b(p)).sum;
    }
  }
  CellSet marks;
  if (dots) marks = g.filter([&](Cell x) { return g.arm(x) == *dots - 1; });
  if (as_json) {
    json out = to_json(g);
    out["al"] = to_json(al_multiset(g));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << render_ascii(g, diag, marks);
  }
  return kExitPass;
}

int cmd_dyck(const ShapeArgs& shape, int i, bool as_json) {
  const Partition p = shape.partition();
  const SigmaSequence sigma = build_sigma(p, i);
  const DyckPath path = build_dyck(sigma);
  const Pairing pairing = pair_updown(path);
  if (as_json) {
    json out = to_json(path);
    out["sigma"] = sigma.to_string();
    out["pairing"] = pairing.up_to_down;
    std::cout << out.dump(2) << '\n';
    return kExitPass;
  }
  std::cout << "sigma_" << i << " = " << sigma.to_string() << '\n';
  std::cout << render_dyck(path);
  std::cout << "P_" << i << ":";
  for (int j = 1; j <= p.k(); ++j) std::cout << ' ' << j << "->" << pairing(j);
  std::cout << '\n';
  return kExitPass;
}

int cmd_map(const ShapeArgs& shape, bool use_phi, bool use_psi, bool with_certificate) {
  if (use_phi == use_psi) throw UsageError("choose exactly one of --phi and --psi");
  const Partition p = shape.partition();
  if (with_certificate) {
    const BijectionCertificate cert = use_phi ? certify_phi(p) : certify_psi(p);
    std::cout << to_json(cert).dump(2) << '\n';
    return cert.passed() ? kExitPass : kExitCounterexample;
  }
  const CellMap m = use_phi ? phi(p) : psi(p);
  const CellSet ambient = build_region(p, use_phi ? RegionKind::T : RegionKind::SQ);
  std::cout << to_json(m, ambient).dump(2) << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew diagram arm/leg multiset identities: bijections, Dyck paths and exhaustive checks"};
  app.require_subcommand(1);

  ShapeArgs verify_shape;
  std::string verify_theorem_name = "2";
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "check one identity for one partition");
  verify_shape.add_to(verify, false);
  verify->add_option("--theorem", verify_theorem_name, "1, 2, 3 or proj");
  verify->add_flag("--json", verify_json, "print the full report as JSON");

  SweepConfig sweep_cfg;
  sweep_cfg.jobs = default_jobs();
  std::string sweep_out;
  std::vector<std::string> sweep_theorems;
  bool sweep_projective = false;
  auto* sweep = app.add_subcommand("sweep", "verify every partition up to the given bounds");
  sweep->add_option("--max-k", sweep_cfg.max_k, "largest k")->required();
  sweep->add_option("--max-n", sweep_cfg.max_n, "largest n")->required();
  sweep->add_option("--theorems", sweep_theorems, "subset of 1,2,3,proj (default 1,2,3)")->delimiter(',');
  sweep->add_flag("--projective", sweep_projective, "also sweep the class-B identity for every k <= max-k");
  sweep->add_option("--jobs", sweep_cfg.jobs, "worker threads (default $HOOKPAIR_JOBS or 1)");
  sweep->add_option("--out", sweep_out, "write the JSON report here");

  ShapeArgs show_shape;
  std::string show_region;
  bool show_pq = false;
  std::optional<int> show_dots;
  std::optional<int> show_shift;
  bool show_json = false;
  auto* show = app.add_subcommand("show", "draw a region");
  show_shape.add_to(show);
  show->add_option("--region", show_region, "D, R, T, V, SQ, Tstar, R1, R2, T1star, T2star or Ti")->required();
  show->add_flag("--pq", show_pq, "mark the diagonal split (class-B partitions only)");
  show->add_option("--dots", show_dots, "mark the cells with arm length I-1");
  show->add_option("--i", show_shift, "shift index for --region Ti");
  show->add_flag("--json", show_json, "print the cell set as JSON");

  ShapeArgs dyck_shape;
  int dyck_i = 1;
  bool dyck_json = false;
  auto* dyck = app.add_subcommand("dyck", "print sigma_i, the path rho_i and the pairing P_i");
  dyck_shape.add_to(dyck);
  dyck->add_option("--i", dyck_i, "arm index, 1..n")->required();
  dyck->add_flag("--json", dyck_json, "print the path as JSON");

  ShapeArgs map_shape;
  bool map_phi = false;
  bool map_psi = false;
  bool map_cert = false;
  auto* map = app.add_subcommand("map", "dump a bijection as JSON");
  map_shape.add_to(map);
  map->add_flag("--phi", map_phi, "T -> T*");
  map->add_flag("--psi", map_psi, "SQ -> R + D");
  map->add_flag("--certificate", map_cert, "include per-cell statistics and a verdict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_shape, verify_theorem_name, verify_json);
    if (*sweep) {
      if (!sweep_out.empty()) sweep_cfg.out = sweep_out;
      return cmd_sweep(sweep_cfg, sweep_theorems, sweep_projective);
    }
    if (*show) return cmd_show(show_shape, show_region, show_pq, show_dots, show_shift, show_json);
    if (*dyck) return cmd_dyck(dyck_shape, dyck_i, dyck_json);
    if (*map) return cmd_map(map_shape, map_phi, map_psi, map_cert);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hookpair::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::CounterexampleFound ? kExitCounterexample : kExitUsage;
  }
  return kExitUsage;
}
