#include "realgw/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace realgw {

using nlohmann::ordered_json;

ReportFormat parse_format(const std::string& s) {
  if (s == "text") return ReportFormat::kText;
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, json or csv)");
}

namespace {

std::string total_string(const InvariantResult& r) {
  return r.weight_independent ? to_string(r.total) : to_string(r.total_function);
}

std::string types_string(const std::vector<TypeMultiplicity>& types) {
  std::string s;
  for (const auto& t : types) s += (s.empty() ? "" : ";") + to_string(t.kind) + ":" + std::to_string(t.multiplicity);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

ordered_json to_json(const InvariantResult& r) {
  ordered_json j;
  j["space"] = {{"m", r.request.space.m}, {"dim", r.request.space.dimension()}};
  j["phi"] = to_string(r.request.phi);
  j["degree"] = r.request.degree;
  j["t"] = r.request.t;
  j["ell"] = r.request.ell;
  j["convention"] = to_string(r.convention);
  j["total"] = total_string(r);
  j["weight_independent"] = r.weight_independent;
  if (r.vanishing.empty())
    j["vanishing"] = nullptr;
  else
    j["vanishing"] = r.vanishing;
  ordered_json pt = ordered_json::object();
  for (const auto& [k, f] : r.per_type) pt[to_string(k)] = to_string(f);
  j["per_type"] = pt;
  ordered_json gs = ordered_json::array();
  for (const auto& c : r.ledger) {
    ordered_json g;
    g["id"] = c.id;
    g["kind"] = to_string(c.graph.kind);
    g["aut"] = c.aut;
    g["divisor"] = c.divisor.get_str();
    ordered_json ts = ordered_json::array();
    for (const auto& t : c.types) ts.push_back({to_string(t.kind), t.multiplicity});
    g["types"] = ts;
    g["locus_halves"] = c.locus_halves;
    g["sign"] = c.sign;
    g["weight"] = to_string(c.weight);
    g["value"] = to_string(c.value);
    gs.push_back(g);
  }
  j["graphs"] = gs;
  return j;
}

std::string text_report(const InvariantResult& r) {
  std::ostringstream os;
  const auto& q = r.request;
  os << "P^" << q.space.dimension() << "  phi = " << to_string(q.phi) << "  d = " << q.degree
     << "  t = " << q.t << "  ell = " << q.ell << "  convention = " << to_string(r.convention) << "\n";
  if (!r.vanishing.empty()) {
    os << "N = 0 (vanishing: " << r.vanishing << ")\n";
    return os.str();
  }
  std::size_t w = 2;
  for (const auto& c : r.ledger) w = std::max(w, c.id.size());
  os << std::left << std::setw(static_cast<int>(w)) << "id" << "  " << std::setw(13) << "kind"
     << "  aut  D    types               value\n";
  std::vector<HalfGraph> gs;
  for (const auto& c : r.ledger) {
    gs.push_back(c.graph);
    os << std::left << std::setw(static_cast<int>(w)) << c.id << "  " << std::setw(13)
       << to_string(c.graph.kind) << "  " << std::setw(3) << c.aut << "  " << std::setw(3)
       << c.divisor.get_str() << "  " << std::setw(18) << types_string(c.types) << "  "
       << to_string(c.value) << "\n";
  }
  os << "halves: " << r.ledger.size() << "  shapes: " << shape_count(gs, GraphKind::kSeparable)
     << " separable, " << shape_count(gs, GraphKind::kNonSeparable) << " non-separable\n";
  if (r.weight_independent)
    os << "N = " << to_string(r.total) << "\n";
  else
    os << "N is weight dependent: " << to_string(r.total_function) << "\n";
  return os.str();
}

std::string csv_report(const InvariantResult& r) {
  std::ostringstream os;
  os << "id,kind,aut,divisor,locus_halves,sign,weight,types,value\n";
  for (const auto& c : r.ledger)
    os << csv_field(c.id) << "," << to_string(c.graph.kind) << "," << c.aut << ","
       << c.divisor.get_str() << "," << c.locus_halves << "," << c.sign << ","
       << to_string(c.weight) << "," << types_string(c.types) << "," << to_string(c.value) << "\n";
  return os.str();
}

std::vector<int> split_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

std::string emit_report(const InvariantResult& result, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return to_json(result).dump(2) + "\n";
    case ReportFormat::kCsv: return csv_report(result);
    case ReportFormat::kText: return text_report(result);
  }
  return {};
}

HalfGraph parse_canonical_id(const std::string& id) {
  std::vector<std::string> parts;
  std::stringstream ss(id);
  std::string item;
  while (std::getline(ss, item, '|')) parts.push_back(item);
  if (parts.size() != 4 || (parts[0] != "S" && parts[0] != "N"))
    throw std::invalid_argument("bad graph id '" + id + "'");
  HalfGraph g;
  g.kind = parts[0] == "S" ? GraphKind::kSeparable : GraphKind::kNonSeparable;
  g.labels = split_ints(parts[1], ',');
  std::stringstream es(parts[2]);
  while (std::getline(es, item, ',')) {
    Edge e;
    char dash, colon;
    std::stringstream one(item);
    one >> e.u >> dash >> e.v >> colon >> e.degree;
    if (!one || dash != '-' || colon != ':') throw std::invalid_argument("bad edge in id '" + id + "'");
    g.edges.push_back(e);
  }
  const std::string& dec = parts[3];
  if (g.kind == GraphKind::kSeparable) {
    if (dec.rfind("h=", 0) != 0) throw std::invalid_argument("bad half-edges in id '" + id + "'");
    std::stringstream hs(dec.substr(2));
    for (auto& h : g.half_edges) {
      char colon;
      hs >> h.vertex >> colon >> h.degree;
      hs.ignore(1);
    }
  } else {
    if (dec.rfind("p=", 0) != 0) throw std::invalid_argument("bad node pair in id '" + id + "'");
    auto p = split_ints(dec.substr(2), ',');
    if (p.size() != 2) throw std::invalid_argument("bad node pair in id '" + id + "'");
    g.p0 = p[0];
    g.p0_bar = p[1];
  }
  return g;
}

InvariantResult parse_json_report(const std::string& text) {
  auto j = ordered_json::parse(text);
  InvariantResult r;
  int m = j.at("space").at("m").get<int>();
  r.request.space = SpaceSpec{m};
  r.request.phi = parse_involution(j.at("phi").get<std::string>());
  r.request.degree = j.at("degree").get<int>();
  r.request.t = j.at("t").get<int>();
  r.request.ell = j.at("ell").get<int>();
  r.convention = parse_convention(j.value("convention", std::string("parity")));
  r.weight_independent = j.at("weight_independent").get<bool>();
  if (j.contains("vanishing") && !j["vanishing"].is_null()) r.vanishing = j["vanishing"].get<std::string>();
  r.total_function = parse_rational_function(m, j.at("total").get<std::string>());
  r.total = r.total_function.as_constant().value_or(Rational(0));
  for (auto& [k, v] : j.at("per_type").items()) {
    InvolutionKind kind = k == "c_a" ? InvolutionKind::kCa
                          : k == "c_m" ? InvolutionKind::kCm
                          : k == "c_k" ? InvolutionKind::kCk
                                       : throw std::invalid_argument("unknown type '" + k + "'");
    r.per_type[kind] = parse_rational_function(m, v.get<std::string>());
  }
  for (const auto& g : j.at("graphs")) {
    GraphContribution c;
    c.id = g.at("id").get<std::string>();
    c.graph = parse_canonical_id(c.id);
    c.locus = locus_key(full_graph(r.request.space, c.graph));
    c.aut = g.at("aut").get<long>();
    c.divisor = Integer(g.at("divisor").get<std::string>());
    for (const auto& t : g.at("types")) {
      auto name = t.at(0).get<std::string>();
      InvolutionKind kind = name == "c_a" ? InvolutionKind::kCa
                            : name == "c_m" ? InvolutionKind::kCm
                                            : InvolutionKind::kCk;
      c.types.push_back({kind, t.at(1).get<int>()});
    }
    c.locus_halves = g.value("locus_halves", 1);
    c.sign = g.value("sign", 1);
    c.weight = parse_rational(g.value("weight", std::string("1")));
    c.value = parse_rational_function(m, g.at("value").get<std::string>());
    r.ledger.push_back(std::move(c));
  }
  return r;
}

std::string graphs_json(const SpaceSpec& space, const std::vector<HalfGraph>& graphs) {
  ordered_json arr = ordered_json::array();
  for (const auto& g : graphs) {
    ordered_json o;
    o["id"] = canonical_id(g);
    o["kind"] = to_string(g.kind);
    o["degree"] = degree_of(g);
    o["aut"] = automorphism_order(space, g);
    ordered_json vs = ordered_json::array();
    for (int v = 0; v < g.num_vertices(); ++v) vs.push_back({{"id", v}, {"label", g.labels[v]}});
    o["vertices"] = vs;
    ordered_json es = ordered_json::array();
    for (const auto& e : g.edges) es.push_back({{"u", e.u}, {"v", e.v}, {"degree", e.degree}});
    o["edges"] = es;
    if (g.kind == GraphKind::kSeparable) {
      ordered_json hs = ordered_json::array();
      for (const auto& h : g.half_edges) hs.push_back({{"vertex", h.vertex}, {"degree", h.degree}});
      o["half_edges"] = hs;
    } else {
      o["p0"] = g.p0;
      o["p0_bar"] = g.p0_bar;
      o["spine"] = g.spine();
    }
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

}  // namespace realgw
