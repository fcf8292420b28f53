#include "realgw/invariants.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

namespace realgw {

InvariantRequest make_request(int m, Involution phi, int degree, std::optional<int> t) {
  if (m < 1) throw ConstraintError("space parameter m must be positive");
  if (degree < 1) throw ConstraintError("degree must be positive");
  InvariantRequest r;
  r.space = SpaceSpec{m};
  r.phi = phi;
  r.degree = degree;
  r.t = t.value_or(2 * m - 1);
  if (r.t < 2)
    throw ConstraintError("insertion exponent t = " + std::to_string(r.t) + " cuts no dimension");
  int rhs = m * degree;
  if (rhs % (r.t - 1))
    throw ConstraintError("dimension constraint has no solution: ell*(t-1) = ell*" +
                          std::to_string(r.t - 1) + " cannot equal m*d = " + std::to_string(rhs));
  r.ell = rhs / (r.t - 1);
  return r;
}

void check_dimension(const InvariantRequest& req) {
  long lhs = static_cast<long>(req.ell) * (req.t - 1);
  long rhs = static_cast<long>(req.space.m) * req.degree;
  if (req.degree < 1 || req.ell < 0 || lhs != rhs)
    throw ConstraintError("dimension constraint violated: ell*(t-1) = " + std::to_string(lhs) +
                          " but m*d = " + std::to_string(rhs));
}

namespace {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::map<InvolutionKind, RationalFunction> empty_types(int m) {
  return {{InvolutionKind::kCa, RationalFunction(m)},
          {InvolutionKind::kCm, RationalFunction(m)},
          {InvolutionKind::kCk, RationalFunction(m)}};
}

// Running sum in ledger order; the accumulated denominator soon holds
// most later denominators, so each step's gcd is cheap.
RationalFunction sum_all(const std::vector<RationalFunction>& xs, int m) {
  RationalFunction s(m);
  for (const auto& x : xs) s = s + x;
  return s;
}

}  // namespace

InvariantResult compute_invariant(const InvariantRequest& req, const ComputeOptions& opt) {
  check_dimension(req);
  const int m = req.space.m;
  InvariantResult res;
  res.request = req;
  res.convention = opt.convention;
  res.per_type = empty_types(m);
  res.total_function = RationalFunction(m);
  res.total = 0;
  if (req.t % 2 == 0) {
    res.vanishing = "t even";
    return res;
  }
  if (req.phi == Involution::kEta && req.degree % 2) {
    res.vanishing = "d odd";
    return res;
  }

  auto graphs = enumerate_half_graphs(req.space, req.degree, req.phi);
  std::vector<GraphContribution> ledger(graphs.size());
  std::unordered_map<std::string, int> locus_count;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto& c = ledger[i];
    c.graph = graphs[i];
    c.id = canonical_id(graphs[i]);
    c.locus = locus_key(full_graph(req.space, graphs[i]));
    ++locus_count[c.locus];
  }

  Integer two_ell;
  mpz_ui_pow_ui(two_ell.get_mpz_t(), 2, req.ell);
  SymbolicWeights ws{req.space};
  parallel_for(ledger.size(), opt.threads, [&](std::size_t i) {
    auto& c = ledger[i];
    const HalfGraph& g = c.graph;
    c.locus_halves = locus_count.at(c.locus);
    c.aut = automorphism_order(req.space, g);
    c.divisor = multiplicity_divisor(g, opt.convention);
    c.types = classify_types(g, req.phi);
    c.sign = 1;
    if (g.kind == GraphKind::kNonSeparable) {
      c.sign = nonseparable_sign(opt.convention, req.degree);
      if (opt.flip_nonseparable_sign) c.sign = -c.sign;
    }
    Integer den = c.divisor * c.aut * c.locus_halves;
    c.weight = Rational(two_ell, den);
    c.weight.canonicalize();
    RationalFunction v = local::insertion_factor(ws, g, req.t, req.ell) *
                         local::graph_euler_inverse(ws, g, c.sign);
    c.value = v * c.weight;
  });

  std::map<InvolutionKind, std::vector<RationalFunction>> parts;
  for (const auto& c : ledger)
    for (const auto& tm : c.types) parts[tm.kind].push_back(c.value * Rational(tm.multiplicity));
  for (auto& [kind, xs] : parts) res.per_type[kind] = sum_all(xs, m);
  res.total_function = res.per_type[InvolutionKind::kCa] + res.per_type[InvolutionKind::kCm] +
                       res.per_type[InvolutionKind::kCk];
  res.ledger = std::move(ledger);

  auto c = res.total_function.as_constant();
  res.weight_independent = c.has_value();
  if (c) {
    res.total = *c;
  } else if (opt.require_constant) {
    throw WeightDependenceError(res.total_function);
  }
  return res;
}

std::map<InvolutionKind, RationalFunction> per_type_decomposition(const InvariantRequest& req,
                                                                  const ComputeOptions& opt) {
  if (req.phi != Involution::kTau) throw std::invalid_argument("per-type decomposition needs phi = tau");
  if (req.degree % 2) throw std::invalid_argument("per-type decomposition needs even degree");
  ComputeOptions o = opt;
  o.require_constant = false;
  return compute_invariant(req, o).per_type;
}

RationalFunction classical_sanity(const SpaceSpec& space, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  SymbolicWeights ws{space};
  RationalFunction sum(space.m);
  for (int i = 1; i <= space.num_labels(); ++i)
    sum = sum + local::power(ws, ws.lambda(i), k) / local::point_factor(ws, i);
  return sum;
}

CrossCheckReport cross_eval_check(const InvariantResult& result, int trials, std::uint64_t seed) {
  CrossCheckReport rep;
  const auto& req = result.request;
  const int m = req.space.m;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  const int max_redraws = 64;

  for (int trial = 0; trial < trials; ++trial) {
    bool done = false;
    for (int attempt = 0; attempt <= max_redraws && !done; ++attempt) {
      std::vector<Rational> pt;
      for (int i = 0; i < m; ++i) {
        int v = 0;
        while (v == 0) v = dist(rng);
        pt.emplace_back(v);
      }
      try {
        NumericWeights nw{req.space, pt};
        Rational sum = 0;
        for (const auto& c : result.ledger) {
          CheckedRational v = local::insertion_factor(nw, c.graph, req.t, req.ell) *
                              local::graph_euler_inverse(nw, c.graph, c.sign);
          Rational numeric = v.v * c.weight;
          Rational exact = c.value.evaluate(pt);
          if (numeric != exact) {
            rep.passed = false;
            rep.mismatch = c.id + ": substituted " + numeric.get_str() + " vs evaluated " + exact.get_str();
            return rep;
          }
          int mult = 0;
          for (const auto& tm : c.types) mult += tm.multiplicity;
          sum += numeric * mult;
        }
        Rational expected = result.total_function.evaluate(pt);
        if (sum != expected) {
          rep.passed = false;
          rep.mismatch = "sum " + sum.get_str() + " vs total " + expected.get_str();
          return rep;
        }
        done = true;
      } catch (const PoleError&) {
        ++rep.redraws;
      }
    }
    if (!done) {
      rep.passed = false;
      rep.mismatch = "no pole-free weights found";
      return rep;
    }
    ++rep.trials;
  }
  return rep;
}

SignFlipVerdict sign_flip_experiment(const InvariantRequest& req, const ComputeOptions& opt) {
  if (req.phi != Involution::kEta) throw std::invalid_argument("sign flip experiment needs phi = eta");
  bool any = false;
  if (req.degree % 2 == 0 && req.t % 2)
    for (const auto& g : enumerate_half_graphs(req.space, req.degree, req.phi))
      if (g.kind == GraphKind::kNonSeparable) any = true;
  if (!any) throw std::invalid_argument("experiment vacuous");
  ComputeOptions o = opt;
  o.flip_nonseparable_sign = !opt.flip_nonseparable_sign;
  o.require_constant = false;
  auto r = compute_invariant(req, o);
  SignFlipVerdict v;
  v.flipped_total = r.total_function;
  v.constant = r.total_function.as_constant();
  v.weight_dependent = !v.constant.has_value();
  return v;
}

}  // namespace realgw
