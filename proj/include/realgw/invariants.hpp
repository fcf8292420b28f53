#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realgw/graphs.hpp"
#include "realgw/localization.hpp"
#include "realgw/rational_function.hpp"

namespace realgw {

class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WeightDependenceError : public std::runtime_error {
 public:
  explicit WeightDependenceError(RationalFunction residual)
      : std::runtime_error("weight dependence detected: " + to_string(residual)),
        residual_(std::move(residual)) {}
  const RationalFunction& residual() const { return residual_; }

 private:
  RationalFunction residual_;
};

struct InvariantRequest {
  SpaceSpec space;
  Involution phi = Involution::kEta;
  int degree = 2;
  int t = 3;
  int ell = 2;
};

// Fills ell from ell*(t-1) = m*d; t defaults to 2m-1.
InvariantRequest make_request(int m, Involution phi, int degree, std::optional<int> t = std::nullopt);
void check_dimension(const InvariantRequest& req);

struct ComputeOptions {
  NodeConvention convention = NodeConvention::kDegreeParity;
  bool flip_nonseparable_sign = false;
  // Throw WeightDependenceError instead of returning a non-constant total.
  bool require_constant = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct GraphContribution {
  HalfGraph graph;
  std::string id;
  std::string locus;     // canonical key of the full fixed locus
  int locus_halves = 1;  // halves in the ledger representing that locus
  long aut = 1;
  Integer divisor = 1;
  int sign = 1;          // factor applied to non-separable halves
  std::vector<TypeMultiplicity> types;
  Rational weight;       // 2^ell / (divisor * aut * locus_halves)
  RationalFunction value;  // weight * insertion * euler inverse
};

struct InvariantResult {
  InvariantRequest request;
  NodeConvention convention = NodeConvention::kDegreeParity;
  Rational total;
  RationalFunction total_function;
  bool weight_independent = true;
  std::string vanishing;  // non-empty when short-circuited
  std::map<InvolutionKind, RationalFunction> per_type;
  std::vector<GraphContribution> ledger;
};

InvariantResult compute_invariant(const InvariantRequest& req, const ComputeOptions& opt = {});

// c_a, c_m, c_k subtotals for tau; unreduced and generally weight dependent.
std::map<InvolutionKind, RationalFunction> per_type_decomposition(const InvariantRequest& req,
                                                                  const ComputeOptions& opt = {});

RationalFunction classical_sanity(const SpaceSpec& space, int k);

struct CrossCheckReport {
  bool passed = true;
  int trials = 0;
  int redraws = 0;
  std::string mismatch;
  explicit operator bool() const { return passed; }
};

CrossCheckReport cross_eval_check(const InvariantResult& result, int trials, std::uint64_t seed);

struct SignFlipVerdict {
  bool weight_dependent = false;
  RationalFunction flipped_total;
  std::optional<Rational> constant;
};

SignFlipVerdict sign_flip_experiment(const InvariantRequest& req, const ComputeOptions& opt = {});

}  // namespace realgw
