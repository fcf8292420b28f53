#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "realgw/report.hpp"

using namespace realgw;

namespace {

void check_same(const InvariantResult& a, const InvariantResult& b) {
  CHECK(a.request.space.m == b.request.space.m);
  CHECK(a.request.phi == b.request.phi);
  CHECK(a.request.degree == b.request.degree);
  CHECK(a.request.t == b.request.t);
  CHECK(a.request.ell == b.request.ell);
  CHECK(a.convention == b.convention);
  CHECK(a.total == b.total);
  CHECK(a.total_function == b.total_function);
  CHECK(a.weight_independent == b.weight_independent);
  CHECK(a.vanishing == b.vanishing);
  CHECK(a.per_type == b.per_type);
  REQUIRE(a.ledger.size() == b.ledger.size());
  for (std::size_t i = 0; i < a.ledger.size(); ++i) {
    const auto &x = a.ledger[i], &y = b.ledger[i];
    CHECK(x.id == y.id);
    CHECK(canonical_id(y.graph) == x.id);
    CHECK(x.locus == y.locus);
    CHECK(x.aut == y.aut);
    CHECK(x.divisor == y.divisor);
    CHECK(x.types == y.types);
    CHECK(x.locus_halves == y.locus_halves);
    CHECK(x.sign == y.sign);
    CHECK(x.weight == y.weight);
    CHECK(x.value == y.value);
  }
}

}  // namespace

TEST_CASE("degree-two json ledger") {
  auto r = compute_invariant(make_request(2, Involution::kEta, 2));
  auto j = nlohmann::json::parse(emit_report(r, ReportFormat::kJson));
  REQUIRE(j["graphs"].size() == 8);
  RationalFunction sep(2), ns(2);
  for (const auto& g : j["graphs"]) {
    auto v = parse_rational_function(2, g["value"].get<std::string>());
    (g["kind"] == "separable" ? sep : ns) = (g["kind"] == "separable" ? sep : ns) + v;
  }
  CHECK(to_string(*sep.as_constant()) == "1/4");
  CHECK(to_string(*ns.as_constant()) == "-1/4");
  CHECK(j["total"] == "0");
  CHECK(j["vanishing"].is_null());
}

TEST_CASE("json round trip") {
  for (auto phi : {Involution::kEta, Involution::kTau})
    for (int d : {1, 2, 4}) {
      auto r = compute_invariant(make_request(2, phi, d));
      std::string text = emit_report(r, ReportFormat::kJson);
      auto back = parse_json_report(text);
      check_same(r, back);
      CHECK(emit_report(back, ReportFormat::kJson) == text);
    }
}

TEST_CASE("canonical ids parse back to the same half") {
  SpaceSpec s{2};
  for (const auto& g : enumerate_half_graphs(s, 4, Involution::kTau)) {
    auto h = parse_canonical_id(canonical_id(g));
    CHECK_NOTHROW(validate(s, h));
    CHECK(canonical_id(h) == canonical_id(g));
  }
  CHECK_THROWS_AS(parse_canonical_id("Q|1|"), std::invalid_argument);
}

TEST_CASE("text report") {
  auto r = compute_invariant(make_request(2, Involution::kEta, 4));
  std::string t = emit_report(r, ReportFormat::kText);
  CHECK(t.size() > 10);
  CHECK(t.substr(t.size() - 8) == "N = -15\n");
  CHECK(t.find("halves: 46") != std::string::npos);
  auto z = compute_invariant(make_request(2, Involution::kEta, 3));
  CHECK(emit_report(z, ReportFormat::kText).find("N = 0 (vanishing: d odd)") != std::string::npos);
}

TEST_CASE("csv report") {
  auto r = compute_invariant(make_request(2, Involution::kEta, 2));
  std::string c = emit_report(r, ReportFormat::kCsv);
  CHECK(c.rfind("id,kind,aut,divisor,locus_halves,sign,weight,types,value\n", 0) == 0);
  CHECK(std::count(c.begin(), c.end(), '\n') == 9);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
