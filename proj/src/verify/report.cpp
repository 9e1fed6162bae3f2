#include <sstream>

#include "keller/verify/harness.hpp"

namespace keller {

using nlohmann::json;

namespace {

json interval(const Interval& i) { return json::array({to_string(i.lo), to_string(i.hi)}); }

json algebraic(const AlgebraicNumber& a) {
  return {{"min_poly", a.min_poly().to_string()},
          {"box", {{"re", interval(a.box().re)}, {"im", interval(a.box().im)}}}};
}

json members(const std::vector<MemberCount>& v) {
  json out = json::array();
  for (const auto& m : v) out.push_back({{"lambda", m.lambda.to_string()}, {"r", m.r}, {"reduced", m.reduced}});
  return out;
}

std::string check_counts(const MapReport& m) {
  int p = 0, f = 0, s = 0;
  for (const auto& c : m.checks) (c.outcome == Outcome::Pass ? p : c.outcome == Outcome::Fail ? f : s)++;
  return std::to_string(p) + "/" + std::to_string(f) + "/" + std::to_string(s);
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

json to_json(const AlgebraicPoint& p) {
  json out = {{"chart", p.chart}, {"field", p.field_string()}, {"u", p.u.to_string()},
              {"v", p.v.to_string()}, {"orbit_size", p.orbit_size}};
  json e = json::array();
  for (const auto& a : p.embedded()) e.push_back(algebraic(a));
  out["embedded"] = e;
  return out;
}

json to_json(const PencilProfile& p) {
  json sampled = json::array();
  for (const auto& s : p.sampled)
    sampled.push_back({{"lambda", "(" + to_string(s.a) + " : " + to_string(s.b) + ")"}, {"r", s.r}});
  return {{"sampled", sampled},
          {"generic_r", p.generic_r},
          {"generic_fraction", p.generic_fraction},
          {"generic_genus",
           {{"verdict", to_string(p.generic_genus.kind)},
            {"genus", p.generic_genus.genus},
            {"certificate", p.generic_genus.certificate}}},
          {"checked", members(p.checked)},
          {"specials", members(p.specials)},
          {"unresolved", p.unresolved},
          {"total_reducibility", p.total_reducibility},
          {"complete", p.complete},
          {"all_members_reduced", p.all_members_reduced},
          {"has_empty_member", p.has_empty_member}};
}

json to_json(const ResolutionTree& t) {
  json affine = json::array(), inf = json::array();
  for (const auto& p : t.base.affine) affine.push_back(to_json(p));
  for (const auto& p : t.base.at_infinity) inf.push_back(to_json(p));
  json lam = json::array();
  for (const auto& l : t.m_lambda) lam.push_back({{"lambda", l.lambda.to_string()}, {"m", l.m_lambda}});
  std::map<std::string, int> types;
  for (const auto& c : t.components)
    if (c.horizontal()) types[to_string(c.type)] += c.weight;
  return {{"base_points", {{"affine", affine}, {"at_infinity", inf}}},
          {"blowups", t.blowups.size()},
          {"h_infinity", t.h_infinity},
          {"h_b", t.h_b},
          {"h_G", t.h_G},
          {"m", t.m},
          {"m_lambda", lam},
          {"types", types},
          {"graph", json::parse(dual_graph_json(t))}};
}

json to_json(const FiniteFibres& f) {
  json out = {{"finite", f.finite}, {"certificate", f.certificate}};
  if (!f.finite) {
    out["curve"] = f.curve.to_string();
    out["value"] = {{"u_min_poly", f.witness_u}, {"v_min_poly", f.witness_v}};
  }
  return out;
}

json to_json(const NonProperSet& s) {
  json comps = json::array();
  for (const auto& c : s.components) {
    json j = {{"poly", c.poly.to_string()},
              {"is_line_through_origin", c.is_line_through_origin},
              {"sample", to_json(c.sample)},
              {"fibre_sum", c.fibre_sum}};
    if (c.parametrization_degrees)
      j["parametrization_degrees"] = {c.parametrization_degrees->first, c.parametrization_degrees->second};
    if (!c.escape.empty()) j["escape"] = c.escape;
    comps.push_back(j);
  }
  return {{"deg_geo", s.deg_geo},
          {"components", comps},
          {"rejected", s.rejected},
          {"unresolved", s.unresolved},
          {"complete", s.complete()}};
}

json to_json(const MapReport& r) {
  json out = r.doc;
  out["name"] = r.name;
  out["status"] = r.status == MapStatus::Ok ? "ok" : r.status == MapStatus::CapExceeded ? "cap_exceeded" : "error";
  if (!r.error.empty()) out["error"] = r.error;
  if (!r.offending.empty()) out["offending_min_poly"] = r.offending;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"id", c.id}, {"outcome", to_string(c.outcome)}};
    if (!c.detail.empty()) j[c.outcome == Outcome::Skipped ? "reason" : "detail"] = c.detail;
    checks.push_back(j);
  }
  out["checks"] = checks;
  json t2 = {{"applicable", r.theorem2.applicable}, {"a", r.theorem2.a}, {"b", r.theorem2.b}, {"c", r.theorem2.c}};
  if (!r.theorem2.reason.empty()) t2["reason"] = r.theorem2.reason;
  if (r.theorem2.equivalent) t2["equivalent"] = *r.theorem2.equivalent;
  out["theorem2"] = t2;
  out["exit_code"] = r.exit_code();
  return out;
}

json to_json(const HarnessReport& r) {
  json maps = json::array();
  for (const auto& m : r.maps) maps.push_back(to_json(m));
  return {{"maps", maps},
          {"theorem2",
           {{"outcome", to_string(r.theorem2.outcome)},
            {"applicable", r.theorem2.applicable},
            {"violations", r.theorem2.violations}}},
          {"totals", {{"pass", r.passed}, {"fail", r.failed}, {"skipped", r.skipped}}},
          {"exit_code", exit_code(r)}};
}

namespace {

// Left-justify by display columns; UTF-8 continuation bytes take no width.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t cols = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++cols;
  return s + std::string(cols < width ? width - cols : 0, ' ') + ' ';
}

std::string row(const std::vector<std::string>& cells) {
  static const std::size_t widths[] = {22, 8, 9, 6, 6, 5, 18, 22};
  std::string out;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) out += pad(cells[i], widths[i]);
  return out + cells.back() + "\n";
}

}  // namespace

std::string summary_table(const HarnessReport& r) {
  std::ostringstream os;
  os << row({"map", "fibres", "deg_geo", "r", "h", "sit", "A_F", "a/b/c", "checks p/f/s"});
  for (const auto& m : r.maps) {
    std::string fib = m.finite ? (*m.finite ? "finite" : "infinite") : "-";
    std::string dg = m.deg_geo ? "deg_geo=" + std::to_string(*m.deg_geo) : "-";
    std::string h = m.h_infinity ? "h=" + std::to_string(*m.h_infinity) + "+" + std::to_string(*m.sum_h_b) : "-";
    std::string abc;
    if (m.status == MapStatus::CapExceeded) {
      abc = "cap: " + m.offending;
    } else if (m.theorem2.applicable) {
      const auto& t = m.theorem2;
      abc = t.a == t.b && t.b == t.c ? std::string("a=b=c=") + (t.a ? "✓" : "✗")
                                     : std::string("a") + (t.a ? "✓" : "✗") + " b" + (t.b ? "✓" : "✗") + " c" +
                                           (t.c ? "✓" : "✗");
    } else {
      abc = "hyp:" + m.theorem2.reason + " ✗";
    }
    os << row({m.name, fib, dg, m.r_profile.empty() ? "-" : m.r_profile, h, m.situation.empty() ? "-" : m.situation,
               m.a_f.empty() ? "-" : m.a_f, abc, check_counts(m)});
  }
  os << "theorem 2: " << to_string(r.theorem2.outcome) << " (" << r.theorem2.applicable << " applicable";
  for (const auto& v : r.theorem2.violations) os << "; VIOLATION " << v;
  os << ")\n";
  os << "checks: " << r.passed << " pass, " << r.failed << " fail, " << r.skipped << " skipped\n";
  return os.str();
}

}  // namespace keller
