#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "keller/core/errors.hpp"
#include "keller/verify/harness.hpp"

namespace keller {

using nlohmann::json;

namespace {

bool is_failure(const Check& c) { return c.outcome == Outcome::Fail; }

void add(MapReport& r, std::string id, bool pass, std::string detail = "") {
  r.checks.push_back({std::move(id), pass ? Outcome::Pass : Outcome::Fail, std::move(detail)});
}
void skip(MapReport& r, std::string id, std::string reason) {
  r.checks.push_back({std::move(id), Outcome::Skipped, std::move(reason)});
}

// Runs one stage; errors are recorded and reported as false.
template <class Fn>
bool stage(MapReport& r, const char* name, Fn&& fn) {
  std::string msg;
  try {
    fn();
    return true;
  } catch (const DegreeCapError& e) {
    r.status = MapStatus::CapExceeded;
    r.offending = e.min_poly();
    msg = e.what();
  } catch (const Error& e) {
    // A degenerate pencil is a failed hypothesis, not a toolkit failure.
    const bool hypothesis = e.kind() == ErrorKind::DegeneratePencil || e.kind() == ErrorKind::InfiniteBaseLocus;
    if (e.kind() == ErrorKind::BlowupBudgetExceeded) r.status = MapStatus::CapExceeded;
    else if (!hypothesis && r.status == MapStatus::Ok) r.status = MapStatus::Error;
    msg = e.what();
  }
  if (r.error.empty() && r.status != MapStatus::Ok) r.error = std::string(name) + ": " + msg;
  r.doc["stage_errors"][name] = msg;
  return false;
}

std::string nonempty_reason(const PencilProfile& p) {
  if (p.generic_r != 1) return "irreducibility";
  if (!p.complete) return "reducible-locus";
  if (p.total_reducibility != 0 || !p.all_members_reduced || p.has_empty_member) return "irreducibility";
  if (p.generic_genus.kind != RationalityVerdict::Kind::Rational) return "rationality";
  return "";
}

bool has_type(const ResolutionTree& t, TypeLabel l) {
  return std::any_of(t.components.begin(), t.components.end(), [&](const auto& c) { return c.type == l; });
}

std::string af_text(const NonProperSet& af) {
  if (af.empty()) return af.complete() ? "∅" : "∅?";
  std::string s;
  for (const auto& c : af.components) s += (s.empty() ? "" : ",") + c.poly.to_string();
  return af.complete() ? s : s + "?";
}

void expectations(MapReport& r, const CorpusEntry& e) {
  for (const auto& [key, want] : e.expected.items()) {
    const std::string id = "expect." + key;
    json got;
    const json& d = r.doc["dossier"];
    if (key == "exit") got = r.exit_code();
    else if (key == "offending_min_poly") got = r.offending;
    else if (key == "h_G" || key == "h_infinity" || key == "m") got = r.doc["resolution"].value(key, json());
    else if (key == "total_reducibility" || key == "generic_r") got = r.doc["pencil"].value(key, json());
    else if (key == "a_f") {
      got = json::array();
      for (const auto& c : d.value("a_f_components", json::array())) got.push_back(c["poly"]);
    } else if (key == "theorem2_applicable") got = r.theorem2.applicable;
    else if (key == "situation") got = r.situation;
    else got = d.value(key, json());
    if (got.is_null()) skip(r, id, "value not computed");
    else add(r, id, got == want, "expected " + want.dump() + ", got " + got.dump());
  }
}

}  // namespace

bool MapReport::failed() const {
  return status == MapStatus::Error || std::any_of(checks.begin(), checks.end(), is_failure);
}

int MapReport::exit_code() const {
  if (status == MapStatus::CapExceeded) return 3;
  return failed() ? 1 : 0;
}

MapReport run_map(const CorpusEntry& entry, const RunConfig& cfg) {
  MapReport r;
  r.name = entry.name;
  const PencilMap f = PencilMap::parse(entry.P, entry.Q);
  r.doc["map"] = {{"P", f.P.to_string()}, {"Q", f.Q.to_string()}, {"tags", entry.tags}};
  r.doc["seed"] = cfg.seed;
  if (entry.expected.contains("exit")) r.doc["expected_exit"] = entry.expected["exit"];
  json& dossier = r.doc["dossier"];

  FiniteFibres ff;
  stage(r, "finite_fibres", [&] { ff = finite_fibres_check(f); });
  r.finite = ff.finite;
  dossier["finite_fibres"] = ff.finite;
  dossier["finite_fibres_certificate"] = to_json(ff);

  std::optional<ResolutionTree> tree;
  bool infinite_locus = false;
  try {
    ResolveOptions opts;
    opts.cap = cfg.cap;
    tree = resolve_pencil(f, opts);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InfiniteBaseLocus) infinite_locus = true;
    else stage(r, "resolve", [&] { throw; });
  }
  if (r.status == MapStatus::CapExceeded) {
    for (const char* id : {"fibre_sum", "horizontal_positive", "horizontal_sum", "reducibility_count", "suzuki", "two_horizontal"}) skip(r, id, "cap exceeded: " + r.offending);
    r.theorem2.reason = "cap";
    expectations(r, entry);
    return r;
  }
  if (tree) {
    r.doc["resolution"] = to_json(*tree);
    r.h_infinity = tree->h_infinity;
    int s = 0;
    for (std::size_t i = 0; i < tree->h_b.size(); ++i) s += tree->h_b[i] * tree->base.affine[i].orbit_size;
    r.sum_h_b = s;
  }

  std::optional<PencilProfile> prof;
  stage(r, "pencil", [&] { prof = scan_pencil(f, cfg.samples, cfg.seed); });
  if (prof) {
    r.doc["pencil"] = to_json(*prof);
    r.r_profile = std::to_string(prof->generic_r) + "/" + std::to_string(prof->total_reducibility) +
                  (prof->complete ? "" : "+");
  }

  std::optional<NonProperSet> af;
  if (ff.finite) {
    stage(r, "jelonek", [&] {
      af = nonproper_set(f, cfg.seed);
      if (tree) attach_parametrization_degrees(*af, *tree);
    });
  }
  if (af) {
    r.deg_geo = af->deg_geo;
    r.a_f = af_text(*af);
    dossier["deg_geo"] = af->deg_geo;
    json nps = to_json(*af);
    dossier["a_f_components"] = nps["components"];
    dossier["a_f"] = nps;
  }

  std::optional<Predicates> pred;
  stage(r, "predicates", [&] { pred = predicates(f, af ? af->deg_geo : 0, ff.finite && af.has_value()); });
  if (pred) {
    dossier["jacobian"] = pred->jacobian.to_string();
    dossier["keller"] = pred->keller;
    dossier["regular_value"] = to_string(pred->regular_value);
    dossier["invertible"] = pred->invertible;
  }

  if (pred) {
    bool ok = !pred->invertible || (af && af->deg_geo == 1 && af->empty());
    ok = ok && (!pred->keller || (pred->jacobian.is_constant() && !pred->jacobian.is_zero()));
    add(r, "dossier_invariants", ok);
  }

  // Full fibres off A_F, deficient fibres on it.
  if (!ff.finite) skip(r, "fibre_sum", "fibres not finite");
  else if (!af) skip(r, "fibre_sum", "A_F not computed");
  else if (!af->complete()) skip(r, "fibre_sum", "A_F incomplete");
  else {
    stage(r, "fibre_sum", [&] {
      std::vector<MultiPoly> avoid;
      for (const auto& c : af->components) avoid.push_back(c.poly);
      for (const auto& s : af->rejected) avoid.push_back(parse_poly(s, {"u", "v"}));
      std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
      std::uniform_int_distribution<int> d(-7, 7);
      std::string bad;
      int done = 0;
      while (done < cfg.fibre_sum_samples) {
        const Rational u = d(rng), v = d(rng);
        if (std::any_of(avoid.begin(), avoid.end(), [&](const auto& g) { return g.evaluate_all({u, v}) == 0; }))
          continue;
        auto fs = check_fiber_sum(f, u, v, af->deg_geo, *af, cfg.seed);
        if (fs.sum != af->deg_geo || !fs.consistent)
          bad += "(" + to_string(u) + ", " + to_string(v) + ") sum " + std::to_string(fs.sum) + "; ";
        ++done;
      }
      for (const auto& c : af->components) {
        const int n = fibre_count(f, c.sample.u, c.sample.v, cfg.seed + 1);
        if (n >= af->deg_geo) bad += c.poly.to_string() + " sample not deficient; ";
      }
      add(r, "fibre_sum", bad.empty(),
          bad.empty() ? std::to_string(done) + " values off A_F, " + std::to_string(af->components.size()) +
                            " components deficient"
                      : bad);
    });
  }

  if (!tree) {
    r.theorem2.reason = "resolution";
    const std::string why = infinite_locus ? "P and Q share a factor" : "resolution failed";
    for (const char* id : {"horizontal_positive", "horizontal_sum", "reducibility_count", "suzuki", "two_horizontal", "lemma2a", "lemma2b", "lemma2c"}) skip(r, id, why);
  } else {
    const auto& t = *tree;
    bool positive = t.h_infinity >= 1 && std::all_of(t.h_b.begin(), t.h_b.end(), [](int h) { return h >= 1; });
    add(r, "horizontal_positive", positive, "h_infinity " + std::to_string(t.h_infinity));
    add(r, "horizontal_sum", t.h_G == t.h_infinity + *r.sum_h_b,
        std::to_string(t.h_G) + " = " + std::to_string(t.h_infinity) + " + " + std::to_string(*r.sum_h_b));

    if (!prof) {
      for (const char* id : {"reducibility_count", "suzuki", "two_horizontal"}) skip(r, id, "pencil scan failed");
    } else {
      const auto& p = *prof;
      const int rhs = t.h_G - 2;
      const std::string lr = std::to_string(p.total_reducibility) + (p.complete ? " == " : " <= ") + std::to_string(rhs);
      if (p.generic_r != 1) skip(r, "reducibility_count", "hypothesis: generic member reducible");
      else if (p.generic_genus.kind != RationalityVerdict::Kind::Rational)
        skip(r, "reducibility_count", "hypothesis: generic member not certified rational");
      else add(r, "reducibility_count", p.complete ? p.total_reducibility == rhs : p.total_reducibility <= rhs, lr);

      try {
        auto s = euler_bookkeeping(t, p);
        add(r, "suzuki", s.pass, std::to_string(s.left) + " = " + std::to_string(s.right));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisNotCertified) throw;
        skip(r, "suzuki", e.what());
      }

      const std::string hyp = ff.finite ? nonempty_reason(p) : "finite-fibres";
      if (!hyp.empty()) skip(r, "two_horizontal", "hypothesis: " + hyp);
      else add(r, "two_horizontal", t.h_G == 2, "h_G " + std::to_string(t.h_G));
      r.theorem2.applicable = hyp.empty() && af.has_value() && pred.has_value();
      r.theorem2.reason = hyp.empty() && !r.theorem2.applicable ? "incomplete" : hyp;
    }
    if (t.h_G == 2) {
      if (t.h_infinity == 2 && t.base.affine.empty()) r.situation = "i";
      else if (t.h_infinity == 1 && t.base.affine.size() == 1 && t.base.affine[0].orbit_size == 1 && t.h_b[0] == 1)
        r.situation = "ii";
    }
    r.doc["situation"] = r.situation;

    add(r, "lemma2a", has_type(t, TypeLabel::IIa));
    if (!af) skip(r, "lemma2b", "A_F not computed");
    else {
      bool origin = std::any_of(af->components.begin(), af->components.end(),
                                [](const auto& c) { return c.poly.evaluate_all({0, 0}) == 0; });
      if (!origin) skip(r, "lemma2b", "(0,0) not in A_F");
      else add(r, "lemma2b", has_type(t, TypeLabel::IIb));
    }
    bool c_ok = std::all_of(t.components.begin(), t.components.end(), [](const auto& c) {
      return !c.dicritical || c.horizontal() || c.image_line_through_origin;
    });
    add(r, "lemma2c", c_ok);

    if (af && af->complete()) {
      std::set<std::string> a, b;
      for (const auto& c : t.components)
        if (c.dicritical) a.insert(c.image.normalized().to_string());
      for (const auto& c : af->components) b.insert(c.poly.normalized().to_string());
      add(r, "a_f_cross", a == b, std::to_string(a.size()) + " dicritical images, " + std::to_string(b.size()) +
                                      " elimination components");
      add(r, "proper_iff_no_dicritical", af->empty() == a.empty());
      if (pred) {
        auto v = theorem4_ratio_check(f, t, *af, pred->keller);
        json rows = json::array();
        bool ok = true;
        for (const auto& x : v) {
          ok = ok && x.consistent;
          rows.push_back({{"component", x.component.to_string()}, {"matched", x.matched}, {"deg_phi", x.deg_phi},
                          {"deg_psi", x.deg_psi}, {"ratio_holds", x.ratio_holds},
                          {"line_through_origin", x.line_through_origin}, {"forbids_keller", x.forbids_keller}});
        }
        r.doc["theorem4"] = rows;
        if (v.empty()) skip(r, "theorem4", "A_F empty");
        else add(r, "theorem4", ok);
      }
    } else {
      skip(r, "a_f_cross", "A_F not complete");
    }
  }
  if (!ff.finite) r.theorem2.reason = "finite-fibres";

  if (pred) {
    r.theorem2.a = pred->regular_value == RegularValue::Regular;
    r.theorem2.b = pred->keller;
    r.theorem2.c = pred->invertible;
  }
  if (r.theorem2.applicable) {
    r.theorem2.equivalent = r.theorem2.a == r.theorem2.b && r.theorem2.b == r.theorem2.c;
    add(r, "theorem2", *r.theorem2.equivalent);
  } else {
    skip(r, "theorem2", "hypothesis: " + r.theorem2.reason);
  }
  dossier["theorem2_applicable"] = r.theorem2.applicable;
  dossier["predicate_table"] = {{"a", r.theorem2.a}, {"b", r.theorem2.b}, {"c", r.theorem2.c}};
  expectations(r, entry);
  return r;
}

SuiteVerdict theorem2_harness(const std::vector<MapReport>& maps) {
  SuiteVerdict v;
  for (const auto& m : maps) {
    if (!m.theorem2.applicable) continue;
    ++v.applicable;
    if (!m.theorem2.equivalent.value_or(false))
      v.violations.push_back(m.name + ": a=" + std::to_string(m.theorem2.a) + " b=" + std::to_string(m.theorem2.b) +
                             " c=" + std::to_string(m.theorem2.c));
  }
  if (v.applicable > 0) v.outcome = v.violations.empty() ? Outcome::Pass : Outcome::Fail;
  return v;
}

HarnessReport run_corpus(const std::vector<CorpusEntry>& corpus, const RunConfig& cfg, int jobs) {
  HarnessReport out;
  out.maps.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < corpus.size();) out.maps[i] = run_map(corpus[i], cfg);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  out.theorem2 = theorem2_harness(out.maps);
  for (const auto& m : out.maps)
    for (const auto& c : m.checks)
      (c.outcome == Outcome::Pass ? out.passed : c.outcome == Outcome::Fail ? out.failed : out.skipped)++;
  return out;
}

int exit_code(const HarnessReport& r) {
  bool fail = r.theorem2.outcome == Outcome::Fail, cap = false;
  for (const auto& m : r.maps) {
    const int want = m.doc.contains("expected_exit") ? m.doc["expected_exit"].get<int>() : 0;
    const int got = m.exit_code();
    if (got == want) continue;
    if (got == 3) cap = true;
    else fail = true;
  }
  return fail ? 1 : cap ? 3 : 0;
}

}  // namespace keller
