// Command-line driver: fixed-locus sums for real genus-one invariants of
// odd-dimensional projective space.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "realgw/invariants.hpp"
#include "realgw/report.hpp"

using namespace realgw;

namespace {

enum Exit { kOk = 0, kUsage = 1, kConstraint = 2, kWeightDependent = 3, kCrossCheck = 4 };

struct Config {
  int space = 3;
  std::string phi = "eta";
  int degree = 0;
  int t = 0;
  std::string format = "text";
  std::string convention = "parity";
  bool list_graphs = false;
  bool per_type = false;
  bool sign_flip = false;
  int cross_check = 0;
  std::uint64_t seed = 1;
  std::string dot;
  unsigned threads = 0;
};

int run(const Config& cfg) {
  if (cfg.space < 3 || cfg.space % 2 == 0) {
    std::cerr << "error: --space must be odd and at least 3\n";
    return kUsage;
  }
  int m = (cfg.space + 1) / 2;
  Involution phi = parse_involution(cfg.phi);
  ReportFormat fmt = parse_format(cfg.format);
  ComputeOptions opt;
  opt.convention = parse_convention(cfg.convention);
  opt.require_constant = false;
  opt.threads = cfg.threads;

  InvariantRequest req;
  try {
    req = make_request(m, phi, cfg.degree, cfg.t > 0 ? std::optional<int>(cfg.t) : std::nullopt);
  } catch (const ConstraintError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConstraint;
  }

  if (cfg.list_graphs || !cfg.dot.empty()) {
    auto graphs = enumerate_half_graphs(req.space, req.degree, req.phi);
    if (!cfg.dot.empty()) {
      std::ofstream out(cfg.dot);
      if (!out) {
        std::cerr << "error: cannot write " << cfg.dot << "\n";
        return kUsage;
      }
      out << to_dot(req.space, graphs);
    }
    if (cfg.list_graphs) {
      if (fmt == ReportFormat::kJson) {
        std::cout << graphs_json(req.space, graphs);
      } else {
        for (const auto& g : graphs)
          std::cout << canonical_id(g) << (fmt == ReportFormat::kCsv ? "," : "  ") << to_string(g.kind)
                    << (fmt == ReportFormat::kCsv ? "," : "  aut=")
                    << automorphism_order(req.space, g) << "\n";
        if (fmt == ReportFormat::kText)
          std::cout << graphs.size() << " halves, " << shape_count(graphs, GraphKind::kSeparable)
                    << " separable and " << shape_count(graphs, GraphKind::kNonSeparable)
                    << " non-separable shapes\n";
      }
      return kOk;
    }
  }

  if (cfg.sign_flip) {
    auto v = sign_flip_experiment(req, opt);
    if (v.weight_dependent)
      std::cout << "sign flip: weight dependent\n" << to_string(v.flipped_total) << "\n";
    else
      std::cout << "sign flip: constant " << to_string(*v.constant) << "\n";
    return kOk;
  }

  if (cfg.per_type && (phi != Involution::kTau || req.degree % 2)) {
    std::cerr << "error: --per-type needs --phi tau and an even degree\n";
    return kUsage;
  }

  InvariantResult res = compute_invariant(req, opt);

  if (cfg.cross_check > 0 && res.vanishing.empty()) {
    auto rep = cross_eval_check(res, cfg.cross_check, cfg.seed);
    if (!rep) {
      std::cerr << "cross-check failed: " << rep.mismatch << "\n";
      return kCrossCheck;
    }
    std::cerr << "cross-check: " << rep.trials << " trials agree (" << rep.redraws << " redraws)\n";
  }

  if (cfg.per_type && fmt == ReportFormat::kText) {
    for (const auto& [k, f] : res.per_type) std::cout << to_string(k) << " = " << to_string(f) << "\n";
    if (res.weight_independent) std::cout << "N = " << to_string(res.total) << "\n";
  } else {
    std::cout << emit_report(res, fmt);
  }
  if (!res.weight_independent) {
    std::cerr << "error: weight dependence detected\n";
    return kWeightDependent;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real genus-one invariants of P^{2m-1} by torus localization"};
  Config cfg;
  app.add_option("--space", cfg.space, "Target dimension 2m-1 (odd, >= 3)")->envname("REALGW_SPACE");
  app.add_option("--phi", cfg.phi, "Involution on the domain: tau or eta")
      ->check(CLI::IsMember({"tau", "eta"}))
      ->envname("REALGW_PHI");
  app.add_option("--degree,-d", cfg.degree, "Curve degree d")
      ->required()
      ->check(CLI::PositiveNumber)
      ->envname("REALGW_DEGREE");
  app.add_option("--t", cfg.t, "Insertion exponent (default 2m-1)")->envname("REALGW_T");
  app.add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("REALGW_FORMAT");
  app.add_option("--convention", cfg.convention, "Non-separable convention: parity or uniform")
      ->check(CLI::IsMember({"parity", "uniform"}))
      ->envname("REALGW_CONVENTION");
  app.add_flag("--list-graphs", cfg.list_graphs, "List the enumerated half-graphs and exit")
      ->envname("REALGW_LIST_GRAPHS");
  app.add_flag("--per-type", cfg.per_type, "Print the c_a, c_m, c_k subtotals (tau only)")
      ->envname("REALGW_PER_TYPE");
  app.add_flag("--sign-flip-experiment", cfg.sign_flip, "Recompute with the non-separable sign negated")
      ->envname("REALGW_SIGN_FLIP");
  app.add_option("--cross-check", cfg.cross_check, "Random substitute-first trials")
      ->check(CLI::NonNegativeNumber)
      ->envname("REALGW_CROSS_CHECK");
  app.add_option("--seed", cfg.seed, "Seed for --cross-check")->envname("REALGW_SEED");
  app.add_option("--dot", cfg.dot, "Write the graphs in DOT format to this path")->envname("REALGW_DOT");
  app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->envname("REALGW_THREADS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  try {
    return run(cfg);
  } catch (const ConstraintError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConstraint;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
