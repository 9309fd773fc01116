// Scenario files: JSON descriptions of the library's objects with a list of
// named checks, loaded with pointered validation errors and executed into
// deterministic JSON reports.
#ifndef COVERTORUS_SCENARIO_HPP
#define COVERTORUS_SCENARIO_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "covertorus/cover.hpp"
#include "covertorus/functorial.hpp"
#include "covertorus/levi.hpp"
#include "covertorus/suites.hpp"
#include "covertorus/tits.hpp"
#include "covertorus/weil.hpp"

namespace covertorus::scenario {

using Json = nlohmann::json;

// schema or cross-reference violation: the tool exits with status 2
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const char* schema_version() { return "v1"; }

// ---------------------------------------------------------------------------
// Primitive parsers

namespace sdetail {

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ScenarioError(where + ": missing key \"" + key + "\"");
  return *it;
}

inline Frac parse_frac(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Frac(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) return Frac(std::stoll(s));
      return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw ScenarioError(where + ": malformed fraction \"" + s + "\"");
    }
  }
  throw ScenarioError(where + ": expected an integer or \"num/den\" string");
}

inline std::string frac_str(const Frac& f) {
  if (f.den == 1) return std::to_string(f.num);
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

inline IVec parse_ivec(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ScenarioError(where + ": expected an integer vector");
  IVec v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ScenarioError(where + ": expected an integer vector");
    v.push_back(e.get<long long>());
  }
  return v;
}

inline IMat parse_imat(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ScenarioError(where + ": expected an integer matrix");
  IMat m;
  for (size_t i = 0; i < j.size(); ++i)
    m.push_back(parse_ivec(j[i], where + " row " + std::to_string(i)));
  return m;
}

inline std::vector<int> parse_int_list(const Json& j, const std::string& where) {
  IVec v = parse_ivec(j, where);
  return std::vector<int>(v.begin(), v.end());
}

inline GroupPtr parse_group(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ScenarioError(where + ": expected a group object");
  const std::string type = field(j, "type", where).get<std::string>();
  try {
    if (type == "perm") {
      std::vector<std::vector<int>> gens;
      for (const auto& g : field(j, "generators", where))
        gens.push_back(parse_int_list(g, where + ".generators"));
      return std::make_shared<FiniteGroup>(FiniteGroup::from_perms(gens));
    }
    if (type == "table") {
      std::vector<std::vector<int>> mul;
      for (const auto& row : field(j, "mul", where))
        mul.push_back(parse_int_list(row, where + ".mul"));
      return std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(mul)));
    }
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(where + ": " + e.what());
  }
  throw ScenarioError(where + ": unknown group type \"" + type + "\"");
}

inline GaloisLattice parse_lattice(const Json& j, GroupPtr gamma, const std::string& where) {
  GaloisLattice lat;
  lat.gamma = gamma;
  lat.rank = field(j, "rank", where).get<int>();
  const Json& act = field(j, "action", where);
  if ((int)act.size() != gamma->n)
    throw ScenarioError(where + ": one action matrix per group element required");
  for (size_t g = 0; g < act.size(); ++g)
    lat.act.push_back(parse_imat(act[g], where + ".action[" + std::to_string(g) + "]"));
  try {
    lat.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(where + ": " + e.what());
  }
  return lat;
}

inline FieldBackend parse_field_model(const Json& j, const std::string& where) {
  const std::string kind = field(j, "kind", where).get<std::string>();
  try {
    if (kind == "archimedean") return FieldBackend::archimedean();
    int p = field(j, "p", where).get<int>();
    int k = j.value("precision", 6);
    if (kind == "padic-unramified") return FieldBackend::padic_unramified(p, k);
    if (kind == "padic-ramified") return FieldBackend::padic_ramified(p, j.value("u", 1), k);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(where + ": " + e.what());
  }
  throw ScenarioError(where + ": unknown field model kind \"" + kind + "\"");
}

inline Json cochain_json(const Cochain& c) {
  Json out;
  out["degree"] = c.degree;
  out["rank"] = c.rank();
  out["group_order"] = c.n();
  Json values = Json::array();
  for (const TorusElement& v : c.table) {
    Json cell = Json::array();
    for (const Frac& f : v) cell.push_back(frac_str(f));
    values.push_back(std::move(cell));
  }
  out["values"] = std::move(values);
  return out;
}

inline Json ivec_json(const IVec& v) {
  Json out = Json::array();
  for (long long x : v) out.push_back(x);
  return out;
}

}  // namespace sdetail

// ---------------------------------------------------------------------------
// The scenario object

// the sigma sets live behind shared_ptr so the raw pointers held by the
// derived objects (Weil models, comparison maps) survive moves of the Scenario
struct FunctorialityBlock {
  std::shared_ptr<SigmaSet> target;
  std::vector<int> f;
  std::optional<IMat> f_star;
  SurjSigmaMap map;  // validated at load time
};

struct RootDatumBlock {
  RootDatum rd;
  std::vector<int> levi;
  std::vector<int> delta;
  std::optional<GaloisLattice> action;  // twisted action; defaults to the datum's own
};

struct Scenario {
  std::string name;
  Json raw;
  GroupPtr gamma;
  std::shared_ptr<SigmaSet> sigma;
  std::map<std::string, Gauge> gauges;
  std::map<int, FieldBackend> field_models;  // keyed by orbit representative
  std::optional<WeilModel> weil;
  std::optional<WeilChiData> weil_chi;
  std::optional<FunctorialityBlock> func;
  std::optional<RootDatumBlock> rootdat;
  Json expect;  // optional expected values folded into checks
  std::vector<std::string> checks;
};

inline Scenario load_scenario(const Json& j) {
  using namespace sdetail;
  if (!j.is_object()) throw ScenarioError("scenario: expected a JSON object");
  if (j.value("schema", "") != schema_version())
    throw ScenarioError("scenario: schema must be \"" + std::string(schema_version()) + "\"");
  Scenario s;
  s.raw = j;
  s.name = field(j, "name", "scenario").get<std::string>();
  s.expect = j.value("expect", Json::object());
  for (const auto& c : field(j, "checks", "scenario")) s.checks.push_back(c.get<std::string>());

  if (j.contains("group")) s.gamma = parse_group(j["group"], "group");

  if (j.contains("sigma_set")) {
    if (!s.gamma) throw ScenarioError("sigma_set: requires a group block");
    const Json& sj = j["sigma_set"];
    SigmaSet R;
    if (j.contains("lattice"))
      R.lat = parse_lattice(j["lattice"], s.gamma, "lattice");
    else
      R.lat = GaloisLattice::trivial(s.gamma, (int)field(sj, "bar", "sigma_set")[0].size());
    int m = field(sj, "elements", "sigma_set").get<int>();
    for (const auto& row : field(sj, "gamma_action", "sigma_set"))
      R.gact.push_back(parse_int_list(row, "sigma_set.gamma_action"));
    R.neg = parse_int_list(field(sj, "negation", "sigma_set"), "sigma_set.negation");
    for (const auto& row : field(sj, "bar", "sigma_set"))
      R.bar.push_back(parse_ivec(row, "sigma_set.bar"));
    if ((int)R.neg.size() != m)
      throw ScenarioError("sigma_set: element count disagrees with the negation table");
    try {
      R.validate();
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(std::string("sigma_set: ") + e.what());
    }
    s.sigma = std::make_shared<SigmaSet>(std::move(R));
  }

  if (j.contains("gauges")) {
    if (!s.sigma) throw ScenarioError("gauges: requires a sigma_set block");
    for (const auto& [name, pj] : j["gauges"].items()) {
      try {
        s.gauges.emplace(name, finish_gauge(*s.sigma, parse_int_list(pj, "gauges." + name)));
      } catch (const std::invalid_argument& e) {
        throw ScenarioError("gauges." + name + ": " + e.what());
      }
    }
  }

  if (j.contains("field_models")) {
    if (!s.sigma) throw ScenarioError("field_models: requires a sigma_set block");
    auto orbits = classify(*s.sigma);
    for (const auto& [key, fj] : j["field_models"].items()) {
      int rep = std::stoi(key);
      bool found = false;
      for (const auto& o : orbits) found = found || o.rep == rep;
      if (!found)
        throw ScenarioError("field_models: \"" + key + "\" is not an orbit representative");
      s.field_models.emplace(rep, parse_field_model(fj, "field_models." + key));
    }
  }

  if (j.contains("weil_model")) {
    if (!s.sigma) throw ScenarioError("weil_model: requires a sigma_set block");
    const Json& wj = j["weil_model"];
    GroupPtr W = parse_group(field(wj, "group", "weil_model"), "weil_model.group");
    GroupHom phi{W, s.gamma,
                 parse_int_list(field(wj, "projection", "weil_model"), "weil_model.projection")};
    try {
      phi.validate();
      s.weil = weil_model(*s.sigma, W, phi);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(std::string("weil_model: ") + e.what());
    }
  }

  if (j.contains("chi_data")) {
    if (!s.weil) throw ScenarioError("chi_data: requires a weil_model block");
    WeilChiData d;
    for (size_t o = 0; o < s.weil->orbits.size(); ++o) {
      std::string key = std::to_string(s.weil->orbits[o].rep);
      if (!j["chi_data"].contains(key))
        throw ScenarioError("chi_data: missing orbit representative \"" + key + "\"");
      OrbitCharacter c;
      for (const auto& v : j["chi_data"][key])
        c.val.push_back(sdetail::parse_frac(v, "chi_data." + key));
      d.chi.push_back(std::move(c));
    }
    try {
      validate_weil_chi(*s.weil, d);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(std::string("chi_data: ") + e.what());
    }
    s.weil_chi = std::move(d);
  }

  if (j.contains("functoriality")) {
    if (!s.sigma) throw ScenarioError("functoriality: requires a sigma_set block (the source)");
    const Json& fj = j["functoriality"];
    FunctorialityBlock fb;
    const Json& tj = field(fj, "target", "functoriality");
    SigmaSet T;
    if (tj.contains("lattice"))
      T.lat = parse_lattice(tj["lattice"], s.gamma, "functoriality.target.lattice");
    else
      T.lat = GaloisLattice::trivial(
          s.gamma, (int)field(field(tj, "sigma_set", "functoriality.target"), "bar",
                              "functoriality.target.sigma_set")[0]
                       .size());
    const Json& tsj = field(tj, "sigma_set", "functoriality.target");
    for (const auto& row : field(tsj, "gamma_action", "functoriality.target.sigma_set"))
      T.gact.push_back(parse_int_list(row, "functoriality.target.gamma_action"));
    T.neg = parse_int_list(field(tsj, "negation", "functoriality.target.sigma_set"),
                           "functoriality.target.negation");
    for (const auto& row : field(tsj, "bar", "functoriality.target.sigma_set"))
      T.bar.push_back(parse_ivec(row, "functoriality.target.bar"));
    try {
      T.validate();
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(std::string("functoriality.target: ") + e.what());
    }
    fb.target = std::make_shared<SigmaSet>(std::move(T));
    fb.f = parse_int_list(field(fj, "f", "functoriality"), "functoriality.f");
    if (fj.contains("f_star")) fb.f_star = parse_imat(fj["f_star"], "functoriality.f_star");
    s.func = std::move(fb);
  }

  if (j.contains("root_datum")) {
    const Json& rj = j["root_datum"];
    RootDatumBlock rb;
    int rank = field(rj, "rank", "root_datum").get<int>();
    GroupPtr base = std::make_shared<FiniteGroup>();
    rb.rd.lat = GaloisLattice::trivial(base, rank);
    for (const auto& v : field(rj, "roots", "root_datum"))
      rb.rd.roots.push_back(parse_ivec(v, "root_datum.roots"));
    for (const auto& v : field(rj, "coroots", "root_datum"))
      rb.rd.coroots.push_back(parse_ivec(v, "root_datum.coroots"));
    try {
      rb.rd.validate();
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(std::string("root_datum: ") + e.what());
    }
    if (rj.contains("levi"))
      rb.levi = parse_int_list(rj["levi"], "root_datum.levi");
    if (rj.contains("delta"))
      rb.delta = parse_int_list(rj["delta"], "root_datum.delta");
    if (rj.contains("action")) {
      const Json& aj = rj["action"];
      GroupPtr g = parse_group(field(aj, "group", "root_datum.action"), "root_datum.action.group");
      GaloisLattice gal;
      gal.gamma = g;
      gal.rank = rank;
      const Json& mats = field(aj, "matrices", "root_datum.action");
      if ((int)mats.size() != g->n)
        throw ScenarioError("root_datum.action: one matrix per group element required");
      for (size_t i = 0; i < mats.size(); ++i)
        gal.act.push_back(
            parse_imat(mats[i], "root_datum.action.matrices[" + std::to_string(i) + "]"));
      try {
        gal.validate();
      } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("root_datum.action: ") + e.what());
      }
      rb.action = std::move(gal);
    }
    s.rootdat = std::move(rb);
  }

  // the map is validated eagerly so broken data fails the load, not the run
  if (s.func) {
    try {
      if (s.func->f_star)
        s.func->map = check_surj_map(*s.sigma, *s.func->target, s.func->f, *s.func->f_star);
      else
        s.func->map = check_surj_map(*s.sigma, *s.func->target, s.func->f);
    } catch (const std::exception& e) {
      throw ScenarioError(std::string("functoriality: ") + e.what());
    }
  }

  static const std::vector<std::string> known = {
      "sigma-classify",  "tits-cocycle",  "gauge-comparison",   "split-status",
      "weil-parameter",  "functorial-map", "levi-orbits",        "levi-factorization"};
  for (const std::string& c : s.checks) {
    bool ok = false;
    for (const std::string& k : known) ok = ok || k == c;
    if (!ok) throw ScenarioError("checks: unknown check \"" + c + "\"");
  }
  return s;
}

inline Scenario load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ScenarioError(path + ": " + e.what());
  }
  return load_scenario(j);
}

// ---------------------------------------------------------------------------
// Check execution

namespace sdetail {

inline unsigned long long fnv1a(const std::string& s) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline void need(bool present, const std::string& check, const std::string& block) {
  if (!present)
    throw ScenarioError("check \"" + check + "\" requires a " + block + " block");
}

inline const Gauge& gauge_or(const Scenario& s, const std::string& name, Gauge& storage) {
  auto it = s.gauges.find(name);
  if (it != s.gauges.end()) return it->second;
  storage = make_gauge_halfset(*s.sigma);
  return storage;
}

// compare an "expect" entry when present; report mismatches as check failures
inline bool expect_matches(const Scenario& s, const std::string& key, const Json& actual,
                           Json& data) {
  if (!s.expect.contains(key)) return true;
  data["expected_" + key] = s.expect[key];
  return s.expect[key] == actual;
}

inline Json run_check(const Scenario& s, const std::string& check) {
  Json out;
  out["name"] = check;
  Json data;
  bool pass = true;

  if (check == "sigma-classify") {
    need(s.sigma != nullptr, check, "sigma_set");
    Json orbits = Json::array();
    for (const auto& o : classify(*s.sigma)) {
      Json oj;
      oj["representative"] = o.rep;
      oj["symmetric"] = o.symmetric;
      Json els = Json::array();
      for (int e : o.elements) els.push_back(e);
      oj["elements"] = std::move(els);
      orbits.push_back(std::move(oj));
    }
    pass = expect_matches(s, "orbit_count", Json((int)orbits.size()), data);
    data["orbits"] = std::move(orbits);
  } else if (check == "tits-cocycle") {
    need(s.sigma != nullptr, check, "sigma_set");
    Gauge storage;
    const Gauge& p = gauge_or(s, "p", storage);
    Cochain t = tits_cocycle(*s.sigma, p);
    pass = is_cocycle(t) && t.is_normalized();
    Json gj = Json::array();
    for (int v : p.p) gj.push_back(v);
    data["gauge"] = std::move(gj);
    data["table"] = cochain_json(t);
  } else if (check == "gauge-comparison") {
    need(s.sigma != nullptr, check, "sigma_set");
    if (!s.gauges.count("p") || !s.gauges.count("q"))
      throw ScenarioError("check \"gauge-comparison\" requires gauges \"p\" and \"q\"");
    const Gauge& p = s.gauges.at("p");
    const Gauge& q = s.gauges.at("q");
    Cochain spq = gauge_cochain(*s.sigma, p, q);
    pass = cochain_eq(cochain_sub(tits_cocycle(*s.sigma, p), tits_cocycle(*s.sigma, q)),
                      differential(spq));
    data["comparison_cochain"] = cochain_json(spq);
  } else if (check == "split-status") {
    need(s.sigma != nullptr, check, "sigma_set");
    auto orbits = classify(*s.sigma);
    std::vector<FieldBackend> backends;
    for (const auto& o : orbits) {
      auto it = s.field_models.find(o.rep);
      if (it == s.field_models.end())
        throw ScenarioError("split-status: no field model for orbit representative " +
                            std::to_string(o.rep));
      backends.push_back(it->second);
    }
    auto ctx = make_context(*s.sigma, backends);
    const char* names[] = {"canonical-split", "split-non-canonical", "nonsplit"};
    Json status = names[(int)split_status(ctx)];
    pass = expect_matches(s, "split_status", status, data);
    data["split_status"] = std::move(status);
  } else if (check == "weil-parameter") {
    need(s.sigma != nullptr, check, "sigma_set");
    need(s.weil.has_value(), check, "weil_model");
    const WeilModel& wm = *s.weil;
    WeilChiData d;
    if (s.weil_chi) {
      d = *s.weil_chi;
    } else {
      for (size_t o = 0; o < wm.orbits.size(); ++o) {
        auto adm = admissible_orbit_characters(wm, o, false);
        if (adm.empty())
          throw ScenarioError("weil-parameter: no admissible character on orbit of " +
                              std::to_string(wm.orbits[o].rep));
        d.chi.push_back(adm.front());
      }
    }
    Cochain rp = r_p(wm, d);
    pass = check_parameter_differential(wm, rp) && cochain_eq(r_p_section_form(wm, d), rp);
    data["parameter"] = cochain_json(rp);
  } else if (check == "functorial-map") {
    need(s.func.has_value(), check, "functoriality");
    const SurjSigmaMap& m = s.func->map;
    Json img = Json::array();
    for (int v : m.orbit_image) img.push_back(v);
    data["orbit_image"] = std::move(img);
    data["source_orbits"] = (int)m.src_orbits.size();
    data["target_orbits"] = (int)m.dst_orbits.size();
  } else if (check == "levi-orbits") {
    need(s.rootdat.has_value(), check, "root_datum");
    const RootDatumBlock& rb = *s.rootdat;
    LeviDatum levi;
    RMabSet rs;
    try {
      levi = make_levi(rb.rd, rb.levi);
      rs = rmab(rb.rd, levi, rb.action ? &*rb.action : nullptr);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(std::string("levi-orbits: ") + e.what());
    }
    RMabMaps maps = rmab_maps(rb.rd, levi, rs);
    Json orbits = Json::array();
    for (size_t e = 0; e < rs.members.size(); ++e) {
      Json oj;
      Json mem = Json::array();
      for (int i : rs.members[e]) mem.push_back(i);
      oj["roots"] = std::move(mem);
      oj["sum"] = ivec_json(maps.mab[e]);
      oj["quotient_weight"] = ivec_json(maps.zweight[e]);
      orbits.push_back(std::move(oj));
    }
    data["orbits"] = std::move(orbits);
    data["sum_map_injective"] = maps.mab_injective;
    data["quotient_map_injective"] = maps.z_injective;
    data["invariant_rank"] = (int)levi.invariant_basis.size();
    data["quotient_rank"] = levi.z_rank();
    pass = expect_matches(s, "sum_map_injective", Json(maps.mab_injective), data) &&
           expect_matches(s, "quotient_map_injective", Json(maps.z_injective), data);
  } else if (check == "levi-factorization") {
    need(s.rootdat.has_value(), check, "root_datum");
    const RootDatumBlock& rb = *s.rootdat;
    if (rb.delta.empty())
      throw ScenarioError("levi-factorization: root_datum.delta is required");
    GaloisLattice gal =
        rb.action ? *rb.action : GaloisLattice::trivial(rb.rd.lat.gamma, rb.rd.lat.rank);
    LeviTitsReport rep;
    try {
      rep = levi_tits_factorization(rb.rd, make_levi(rb.rd, rb.levi), gal, rb.delta);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(std::string("levi-factorization: ") + e.what());
    }
    pass = rep.lambda_match && rep.lambda_invariant && rep.factorization;
    data["lambda_match"] = rep.lambda_match;
    data["lambda_invariant"] = rep.lambda_invariant;
    data["factorization"] = rep.factorization;
    data["full_table"] = cochain_json(rep.t_full);
    data["subsystem_table"] = cochain_json(rep.t_sub);
    data["orbit_table"] = cochain_json(rep.t_orbit);
  }

  out["status"] = pass ? "pass" : "fail";
  out["data"] = std::move(data);
  return out;
}

}  // namespace sdetail

inline Json run_scenario(const Scenario& s, unsigned long long seed) {
  Json report;
  report["schema"] = schema_version();
  report["scenario"] = s.name;
  report["seed"] = seed;
  std::ostringstream digest;
  digest << std::hex << sdetail::fnv1a(s.raw.dump());
  report["digest"] = digest.str();
  Json checks = Json::array();
  for (const std::string& c : s.checks) checks.push_back(sdetail::run_check(s, c));
  report["checks"] = std::move(checks);
  return report;
}

inline bool report_ok(const Json& report) {
  for (const auto& c : report["checks"])
    if (c["status"] != "pass") return false;
  return true;
}

inline Json suite_report(const suites::SuiteResult& r) {
  Json report;
  report["schema"] = schema_version();
  report["suite"] = r.suite;
  report["seed"] = r.seed;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  report["checks"] = std::move(checks);
  return report;
}

}  // namespace covertorus::scenario

#endif
