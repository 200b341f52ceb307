#include "xxz/io/json.hpp"

#include <sstream>

namespace xxz::io {
namespace {

std::string scalar_text(const ReportValue& v) {
  if (const auto* r = std::get_if<BigRat>(&v)) return exact::to_string(*r);
  if (const auto* c = std::get_if<CycloQ>(&v)) return exact::to_string(*c);
  return std::get<BigComplex>(v).to_string();
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\" ") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

ordered_json to_json(const BigRat& x) { return exact::to_string(x); }

ordered_json to_json(const CycloQ& x) { return {{"a", exact::to_string(x.a())}, {"b", exact::to_string(x.b())}}; }

ordered_json to_json(const BigComplex& z) { return {{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

ordered_json to_json(const ReportValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["conjecture"] = r.conjecture;
  j["n"] = r.n;
  j["method"] = r.method == Method::kExact ? "exact" : "numeric";
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["equal"] = r.equal;
  j["precision_bits"] = r.precision_bits ? ordered_json(*r.precision_bits) : ordered_json(nullptr);
  j["tolerance"] = r.tolerance ? ordered_json(r.tolerance->to_string(6)) : ordered_json(nullptr);
  if (!r.details.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [k, v] : r.details) d[k] = to_json(v);
    j["details"] = d;
  }
  return j;
}

ordered_json to_json(const RootSet& rs) {
  auto roots = [&](const std::vector<BigComplex>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& z : v) {
      ordered_json e = to_json(z);
      e["precision"] = rs.precision;
      a.push_back(e);
    }
    return a;
  };
  ordered_json j;
  j["boundary"] = std::string(to_string(rs.boundary));
  j["n"] = rs.n;
  j["L"] = rs.L;
  j["precision"] = rs.precision;
  j["residual"] = rs.residual.to_string(6);
  j["roots"] = roots(rs.w);
  if (rs.boundary == Boundary::kReflecting) j["wt"] = roots(rs.wt);
  return j;
}

std::string csv_header() { return "conjecture,n,method,lhs,rhs,equal,precision_bits,tolerance"; }

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << csv_field(r.conjecture) << ',' << r.n << ',' << (r.method == Method::kExact ? "exact" : "numeric") << ','
     << csv_field(scalar_text(r.lhs)) << ',' << csv_field(scalar_text(r.rhs)) << ',' << (r.equal ? "true" : "false")
     << ',' << (r.precision_bits ? std::to_string(*r.precision_bits) : "") << ','
     << (r.tolerance ? r.tolerance->to_string(6) : "");
  return os.str();
}

BigRat rat_from_json(const ordered_json& j) { return exact::parse_rat(j.get<std::string>()); }

CycloQ cyclo_from_json(const ordered_json& j) {
  return {exact::parse_rat(j.at("a").get<std::string>()), exact::parse_rat(j.at("b").get<std::string>())};
}

}  // namespace xxz::io
