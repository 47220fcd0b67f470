#include "schurext/json_io.hpp"
#include "schurext/errors.hpp"

#include <limits>
#include <regex>

namespace schurext {

json integer_to_json(const Integer& x) {
  static const Integer lo = std::numeric_limits<long long>::min(), hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return static_cast<long long>(x);
  return to_string(x);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    static const std::regex digits("-?[0-9]+");
    if (!std::regex_match(text, digits)) throw ParseError("expected an integer, got " + j.dump());
    return Integer(text);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json dims_to_json(const std::map<int, std::size_t>& dims) {
  json j = json::object();
  for (auto& [k, v] : dims) j[std::to_string(k)] = v;
  return j;
}

std::map<int, std::size_t> dims_from_json(const json& j) {
  std::map<int, std::size_t> out;
  for (auto& [k, v] : j.items()) out[std::stoi(k)] = v.get<std::size_t>();
  return out;
}

namespace lin {

void to_json(json& j, const Ring& r) {
  j = r.is_field() ? json{{"ring", "gf"}, {"p", r.p()}} : json{{"ring", "int"}};
}

void from_json(const json& j, Ring& r) {
  const std::string kind = j.at("ring").get<std::string>();
  if (kind == "int")
    r = Ring::integers();
  else if (kind == "gf")
    r = Ring::prime_field(j.at("p").get<unsigned>());
  else
    throw ParseError("unknown ring '" + kind + "'");
}

void to_json(json& j, const HomologyGroup& g) {
  j = json{{"ring", g.ring}, {"free_rank", g.free_rank}, {"torsion", json::array()}};
  for (auto& f : g.invariant_factors) j["torsion"].push_back(integer_to_json(f));
}

void from_json(const json& j, HomologyGroup& g) {
  g.ring = j.at("ring").get<Ring>();
  g.free_rank = j.at("free_rank").get<std::size_t>();
  g.invariant_factors.clear();
  for (auto& f : j.at("torsion")) g.invariant_factors.push_back(integer_from_json(f));
}

void to_json(json& j, const IntegerMatrix& m) {
  j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", json::array()}};
  for (auto& row : m.dense()) {
    json r = json::array();
    for (auto& x : row) r.push_back(integer_to_json(x));
    j["entries"].push_back(r);
  }
}

void from_json(const json& j, IntegerMatrix& m) {
  const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  m = IntegerMatrix(rows, cols);
  const json& e = j.at("entries");
  if (e.size() != rows) throw ParseError("matrix row count does not match its entries");
  for (std::size_t r = 0; r < rows; ++r) {
    if (e[r].size() != cols) throw ParseError("matrix column count does not match its entries");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, integer_from_json(e[r][c]));
  }
}

void to_json(json& j, const ChainComplex& c) {
  j = json{{"ring", c.ring()}, {"degrees", {c.lo(), c.hi()}}, {"terms", json::object()}, {"diffs", json::object()}};
  for (int n = c.lo(); n <= c.hi(); ++n) {
    j["terms"][std::to_string(n)] = c.rank(n);
    if (n > c.lo()) j["diffs"][std::to_string(n)] = c.diff(n);
  }
  json labels = json::object();
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (!c.labels(n).empty()) labels[std::to_string(n)] = c.labels(n);
  if (!labels.empty()) j["labels"] = labels;
}

void from_json(const json& j, ChainComplex& c) {
  const int lo = j.at("degrees").at(0).get<int>(), hi = j.at("degrees").at(1).get<int>();
  std::map<int, std::size_t> ranks;
  std::map<int, IntegerMatrix> diffs;
  std::map<int, std::vector<std::string>> labels;
  for (auto& [k, v] : j.at("terms").items()) ranks[std::stoi(k)] = v.get<std::size_t>();
  for (auto& [k, v] : j.at("diffs").items()) diffs[std::stoi(k)] = v.get<IntegerMatrix>();
  if (j.contains("labels"))
    for (auto& [k, v] : j.at("labels").items()) labels[std::stoi(k)] = v.get<std::vector<std::string>>();
  c = ChainComplex(j.at("ring").get<Ring>(), lo, hi, ranks, diffs, labels);
}

}  // namespace lin

namespace comb {

void to_json(json& j, const Partition& p) { j = p.to_string(); }

void from_json(const json& j, Partition& p) { p = Partition::parse(j.get<std::string>()); }

}  // namespace comb

namespace spec {

void to_json(json& j, const ExtTable& t) {
  j = json{{"ring", t.ring}, {"source", t.source}, {"target", t.target}, {"entries", json::object()},
           {"rewrites", t.rewrites}};
  for (auto& [k, g] : t.entries) j["entries"][std::to_string(k)] = g;
}

void from_json(const json& j, ExtTable& t) {
  t.ring = j.at("ring").get<Ring>();
  t.source = j.at("source").get<std::string>();
  t.target = j.at("target").get<std::string>();
  t.entries.clear();
  for (auto& [k, v] : j.at("entries").items()) t.entries[std::stoi(k)] = v.get<HomologyGroup>();
  t.rewrites = j.at("rewrites").get<std::vector<std::string>>();
}

}  // namespace spec

namespace series {

void to_json(json& j, const BiPoly& b) {
  j = json{{"tmax", b.t_max()}, {"umax", b.u_max()}, {"coeffs", json::array()}};
  for (auto& [k, c] : b.coeffs()) j["coeffs"].push_back({k.first, k.second, integer_to_json(c)});
}

void from_json(const json& j, BiPoly& b) {
  b = BiPoly(j.at("tmax").get<int>(), j.at("umax").get<int>());
  for (auto& e : j.at("coeffs")) b.add(e.at(0).get<int>(), e.at(1).get<int>(), integer_from_json(e.at(2)));
}

}  // namespace series

namespace res {

void to_json(json& j, const ResolutionShape& s) {
  j = json{{"mu", s.target.to_string()}, {"flavor", flavor_name(s.flavor)}, {"terms", json::object()},
           {"count", summand_count(s)}, {"length", s.length()}};
  for (auto& [deg, t] : s.terms) {
    json list = json::array();
    for (auto& p : t) list.push_back(p.to_string());
    j["terms"][std::to_string(deg)] = list;
  }
}

void from_json(const json& j, ResolutionShape& s) {
  s.target = Partition::parse(j.at("mu").get<std::string>());
  const std::string f = j.at("flavor").get<std::string>();
  if (f != "divided" && f != "exterior") throw ParseError("unknown resolution flavor '" + f + "'");
  s.flavor = f == "divided" ? Flavor::divided : Flavor::exterior;
  s.terms.clear();
  for (auto& [k, v] : j.at("terms").items()) {
    auto& t = s.terms[std::stoi(k)];
    for (auto& p : v) t.push_back(Partition::parse(p.get<std::string>()));
  }
}

}  // namespace res

void to_json(json& j, const CheckReport& r) {
  j = json{{"name", r.name}, {"cases", r.cases}, {"ok", r.ok()}, {"failures", r.failures}, {"notes", r.notes}};
}

void from_json(const json& j, CheckReport& r) {
  r.name = j.at("name").get<std::string>();
  r.cases = j.at("cases").get<std::size_t>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
}

}  // namespace schurext
