#include "ehrlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ehrlab/counting.hpp"
#include "ehrlab/diagnostics.hpp"
#include "ehrlab/error.hpp"
#include "ehrlab/real_roots.hpp"
#include "ehrlab/zoo.hpp"

namespace ehrlab {

using json = nlohmann::ordered_json;

namespace {

json rat_json(const Rat& r) { return to_string(r); }
json int_json(const Integer& z) { return z.get_str(); }

Rat rat_from(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a rational, got " + j.dump());
}

Integer int_from(const json& j) {
  Rat r = rat_from(j);
  if (!is_integer(r)) throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
  return r.get_num();
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat_json(c));
  return a;
}

Poly poly_from(const json& j) {
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(rat_from(x));
  return Poly(std::move(c));
}

json verdict_json(const VerdictRecord& v) {
  json values = json::array();
  for (const auto& x : v.values) values.push_back(rat_json(x));
  return {{"name", v.name}, {"holds", v.holds}, {"witness", v.witness}, {"values", values}, {"detail", v.detail}};
}

VerdictRecord verdict_from(const json& j) {
  VerdictRecord v;
  v.name = j.at("name").get<std::string>();
  v.holds = j.at("holds").get<bool>();
  v.witness = j.at("witness").get<std::vector<long>>();
  for (const auto& x : j.at("values")) v.values.push_back(rat_from(x));
  v.detail = j.at("detail").get<std::string>();
  return v;
}

VerdictRecord record(std::string name, const Verdict& v) {
  return {std::move(name), v.holds, v.witness, v.values, v.detail};
}

VerdictRecord flag(std::string name, bool holds, std::string detail = {}) {
  return {std::move(name), holds, {}, {}, std::move(detail)};
}

struct Resolved {
  std::optional<LatticePolytope> polytope;
  Poly ehrhart;
  std::vector<Integer> hstar;
  int dim = 0;
};

LatticePolytope polytope_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON in '") + path + "': " + e.what());
  }
  try {
    const int n = j.at("ambient_dim").get<int>();
    std::vector<IntVec> verts;
    for (const auto& v : j.at("vertices")) {
      IntVec p;
      for (const auto& x : v) p.push_back(int_from(x));
      if (static_cast<int>(p.size()) != n) throw Error(ErrorCode::ParseError, "vertex of wrong length in '" + path + "'");
      verts.push_back(std::move(p));
    }
    if (verts.empty()) throw Error(ErrorCode::ParseError, "no vertices in '" + path + "'");
    return LatticePolytope::from_points(std::move(verts));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad polytope file '") + path + "': " + e.what());
  }
}

bool looks_like_descriptor(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return false;
  for (std::size_t i = 0; i < colon; ++i)
    if (!std::isalnum(static_cast<unsigned char>(s[i])) && s[i] != '_') return false;
  return colon > 0;
}

Resolved resolve(const std::string& input) {
  Resolved r;
  if (auto lit = resolve_literal_hstar(input)) {
    r.dim = lit->degree();
    r.ehrhart = hstar_to_ehrhart(*lit, r.dim);
    for (const auto& c : lit->coeffs()) r.hstar.push_back(c.get_num());
    return r;
  }
  r.polytope = looks_like_descriptor(input) ? resolve_polytope(input) : polytope_from_file(input);
  return r;
}

void fill_from_profile(RunReport& rep, const LatticePolytope& p, const EhrhartProfile& prof) {
  rep.dim = prof.d;
  rep.ambient_dim = p.ambient_dim();
  rep.vertices = p.vertices();
  rep.ehrhart = prof.ehrhart;
  rep.hstar = prof.hstar.h();
  rep.degree = prof.s;
  rep.codegree = prof.codegree;
  rep.lambda = prof.lambda;
  rep.counts = prof.counts;
}

void fill_literal(RunReport& rep, const Resolved& r) {
  rep.dim = r.dim;
  rep.ehrhart = r.ehrhart;
  rep.hstar = r.hstar;
  rep.hstar.resize(static_cast<std::size_t>(r.dim) + 1, Integer(0));
  HStarVector h(rep.hstar, r.dim);
  rep.degree = h.degree();
  rep.codegree = r.dim + 1 - rep.degree;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ScaleLimit:
    case ErrorCode::DimensionTooLarge:
    case ErrorCode::TooManyLinearExtensions:
      return 3;
    default:
      return 2;
  }
}

std::string vec_text(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string table_view(const RunReport& r) {
  std::ostringstream os;
  os << "input      " << r.input << "\n";
  os << "dimension  " << r.dim << " (ambient " << r.ambient_dim << ")\n";
  os << "E(x)       " << r.ehrhart.to_string() << "\n";
  os << "h*         " << vec_text(r.hstar) << "\n";
  os << "degree     " << r.degree << ", codegree " << r.codegree;
  if (r.lambda) os << ", first interior point at m = " << *r.lambda;
  os << "\n";
  if (!r.counts.empty()) os << "counts     " << vec_text(r.counts) << "\n";
  for (const auto& v : r.verdicts) {
    os << std::left << std::setw(34) << v.name << (v.holds ? "yes" : "NO");
    if (!v.witness.empty()) {
      os << "  witness";
      for (long w : v.witness) os << " " << w;
    }
    if (!v.values.empty() && v.holds) {
      os << "  values";
      for (const auto& x : v.values) os << " " << to_string(x);
    }
    if (!v.detail.empty()) os << "  " << v.detail;
    os << "\n";
  }
  for (const auto& s : r.implication_violations) os << "IMPLICATION VIOLATED: " << s << "\n";
  return os.str();
}

}  // namespace

std::size_t enumeration_budget() {
  if (const char* env = std::getenv("EHRHART_LAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

std::string serialize(const RunReport& r) {
  json verts = json::array();
  for (const auto& v : r.vertices) {
    json row = json::array();
    for (const auto& x : v) row.push_back(int_json(x));
    verts.push_back(row);
  }
  json hstar = json::array(), counts = json::array(), verdicts = json::array();
  for (const auto& x : r.hstar) hstar.push_back(int_json(x));
  for (const auto& x : r.counts) counts.push_back(int_json(x));
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
  json j{{"input", r.input},
         {"tool_version", r.tool_version},
         {"seconds", r.seconds},
         {"dim", r.dim},
         {"ambient_dim", r.ambient_dim},
         {"vertices", verts},
         {"ehrhart", poly_json(r.ehrhart)},
         {"hstar", hstar},
         {"degree", r.degree},
         {"codegree", r.codegree},
         {"lambda", r.lambda ? json(*r.lambda) : json(nullptr)},
         {"counts", counts},
         {"verdicts", verdicts},
         {"implication_violations", r.implication_violations}};
  return j.dump(2);
}

RunReport parse_report(const std::string& text) {
  try {
    json j = json::parse(text);
    RunReport r;
    r.input = j.at("input").get<std::string>();
    r.tool_version = j.at("tool_version").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    r.dim = j.at("dim").get<int>();
    r.ambient_dim = j.at("ambient_dim").get<int>();
    for (const auto& v : j.at("vertices")) {
      IntVec p;
      for (const auto& x : v) p.push_back(int_from(x));
      r.vertices.push_back(std::move(p));
    }
    r.ehrhart = poly_from(j.at("ehrhart"));
    for (const auto& x : j.at("hstar")) r.hstar.push_back(int_from(x));
    r.degree = j.at("degree").get<int>();
    r.codegree = j.at("codegree").get<int>();
    if (!j.at("lambda").is_null()) r.lambda = j.at("lambda").get<int>();
    for (const auto& x : j.at("counts")) r.counts.push_back(int_from(x));
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from(v));
    r.implication_violations = j.at("implication_violations").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad report: ") + e.what());
  }
}

RunReport cmd_ehrhart(const std::string& input) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.input = input;
  Resolved r = resolve(input);
  if (r.polytope) {
    fill_from_profile(rep, *r.polytope, ehrhart(*r.polytope));
  } else {
    fill_literal(rep, r);
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

RunReport cmd_diagnose(const std::string& input, DiagnoseFlags f) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!f.any()) f = {true, true, true, true, true, true, true, true, true};
  RunReport rep;
  rep.input = input;
  Resolved r = resolve(input);
  if (r.polytope) {
    fill_from_profile(rep, *r.polytope, ehrhart(*r.polytope));
  } else {
    fill_literal(rep, r);
  }
  auto& out = rep.verdicts;

  DiagnosticsOptions opts;
  opts.run_series = f.series;
  opts.run_negative = f.negative;
  opts.run_toeplitz = f.toeplitz;
  DiagnosticsReport d = full_diagnostics(rep.ehrhart, rep.dim, opts);
  if (f.hstar) {
    out.push_back(record("hstar_nonnegative", d.nonnegativity));
    out.push_back(record("hstar_unimodal", d.unimodality));
    out.push_back(record("hstar_log_concave", d.log_concavity));
    out.push_back(flag("hstar_real_rooted", d.real_rooted));
    out.push_back(flag("hstar_palindromic", d.palindromic));
    if (d.gamma) {
      VerdictRecord g = flag("hstar_gamma_positive", *d.gamma_positive);
      g.values = d.gamma->gamma;
      out.push_back(g);
    }
    if (d.battery) {
      out.push_back(record("hibi_partial_sums", d.battery->hibi_partial_sums));
      out.push_back(record("stanley_partial_sums", d.battery->stanley_partial_sums));
      if (d.battery->hibi_lower_bound_applies) out.push_back(record("hibi_lower_bound", d.battery->hibi_lower_bound));
      if (d.battery->stapledon_applies) out.push_back(record("stapledon", d.battery->stapledon));
      out.push_back(record("h1_ge_hd", d.battery->h1_ge_hd));
    }
  }
  if (f.magic) {
    VerdictRecord m = flag("magic_positive", d.magic_positive);
    m.values = d.magic.a;
    out.push_back(m);
    if (!f.hstar) out.push_back(flag("hstar_real_rooted", d.real_rooted));
  }
  if (f.cl) {
    out.push_back(flag("critical_line", d.cl));
    out.push_back(record("ehrhart_positive", d.ehrhart_positivity));
    out.push_back(flag("ehrhart_real_rooted", is_real_rooted(rep.ehrhart)));
    if (!f.hstar) out.push_back(record("hstar_log_concave", d.log_concavity));
  }
  if (f.series && d.series) out.push_back(record("series_log_concave", *d.series));
  if (f.negative && d.negative) out.push_back(record("negative_evaluation_log_concave", *d.negative));
  if (f.toeplitz && d.toeplitz) out.push_back(record("toeplitz_minors", *d.toeplitz));
  rep.implication_violations = d.implication_violations;

  if (r.polytope) {
    const auto& p = *r.polytope;
    if (f.idp) out.push_back(record("idp", is_idp(p, enumeration_budget())));
    if (f.spanning) out.push_back(flag("spanning", is_spanning(p)));
    if (f.reflexive) {
      try {
        out.push_back(flag("reflexive", is_reflexive(p)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoUniqueInteriorPoint) throw;
        out.push_back(flag("reflexive", false, e.what()));
      }
    }
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

std::string default_manifest() {
  json entries = json::array();
  for (const auto& f : fixture_registry()) {
    json e{{"name", f.name}, {"family", f.family}, {"input", f.input}};
    e["kind"] = f.kind == Fixture::Kind::Polytope ? "polytope" : f.kind == Fixture::Kind::OrderHStar ? "order_hstar" : "literal";
    e["dim"] = f.dim;
    e["ehrhart"] = f.ehrhart ? poly_json(*f.ehrhart) : json(nullptr);
    json h = json::array();
    for (long x : f.hstar) h.push_back(std::to_string(x));
    e["hstar"] = h;
    auto opt = [&](const char* key, const std::optional<bool>& v) {
      if (v) e[key] = *v;
    };
    opt("idp", f.idp);
    opt("spanning", f.spanning);
    opt("reflexive", f.reflexive);
    opt("cl", f.cl);
    opt("unimodal", f.unimodal);
    opt("log_concave", f.log_concave);
    entries.push_back(e);
  }
  return json{{"fixtures", entries}}.dump(2);
}

PaperbookResult cmd_paperbook(const std::string& filter, const std::optional<std::string>& manifest_text) {
  json manifest;
  try {
    manifest = json::parse(manifest_text ? *manifest_text : default_manifest());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad manifest: ") + e.what());
  }
  PaperbookResult res;
  std::ostringstream os;
  os << std::left << std::setw(34) << "fixture" << std::setw(8) << "result"
     << "mismatches\n";
  int passed = 0, total = 0;
  try {
    for (const auto& e : manifest.at("fixtures")) {
      const std::string name = e.at("name").get<std::string>();
      const std::string family = e.at("family").get<std::string>();
      if (!filter.empty() && family != filter && name.find(filter) == std::string::npos) continue;
      ++total;
      std::vector<std::string> bad;
      auto expect = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
      };
      try {
        const std::string input = e.at("input").get<std::string>();
        const std::string kind = e.at("kind").get<std::string>();
        const int dim = e.at("dim").get<int>();
        std::vector<Integer> want_h;
        for (const auto& x : e.at("hstar")) want_h.push_back(int_from(x));
        want_h.resize(static_cast<std::size_t>(dim) + 1, Integer(0));

        std::vector<Integer> got_h;
        Poly got_e;
        std::optional<LatticePolytope> poly;
        if (kind == "order_hstar") {
          got_h = order_polytope_hstar(resolve_poset(input), enumeration_budget()).h();
          got_e = hstar_to_ehrhart(HStarVector(got_h, dim));
        } else {
          RunReport rep = cmd_ehrhart(input);
          expect(rep.dim == dim, "dim " + std::to_string(rep.dim));
          got_h = rep.hstar;
          got_e = rep.ehrhart;
          if (kind == "polytope") poly = resolve_polytope(input);
        }
        expect(got_h == want_h, "h* " + vec_text(got_h));
        if (e.contains("ehrhart") && !e.at("ehrhart").is_null()) {
          expect(got_e == poly_from(e.at("ehrhart")), "E " + got_e.to_string());
        }
        std::vector<Rat> block;
        for (const auto& x : got_h) block.emplace_back(x);
        while (block.size() > 1 && block.back() == 0) block.pop_back();
        auto check_flag = [&](const char* key, auto&& compute) {
          if (!e.contains(key)) return;
          const bool want = e.at(key).get<bool>();
          const bool got = compute();
          expect(got == want, std::string(key) + " " + (got ? "true" : "false"));
        };
        check_flag("unimodal", [&] { return is_unimodal(block).holds; });
        check_flag("log_concave", [&] { return is_log_concave(block).holds; });
        check_flag("cl", [&] { return cl_check(got_e); });
        if (poly) {
          check_flag("idp", [&] { return is_idp(*poly, enumeration_budget()).holds; });
          check_flag("spanning", [&] { return is_spanning(*poly); });
          check_flag("reflexive", [&] {
            try {
              return is_reflexive(*poly);
            } catch (const Error& err) {
              if (err.code() != ErrorCode::NoUniqueInteriorPoint) throw;
              return false;
            }
          });
        }
      } catch (const Error& err) {
        bad.push_back(err.what());
      } catch (const json::exception& err) {
        bad.push_back(std::string("manifest entry: ") + err.what());
      }
      os << std::left << std::setw(34) << name;
      if (bad.empty()) {
        os << "pass";
      } else {
        os << std::setw(8) << "FAIL";
      }
      for (std::size_t i = 0; i < bad.size(); ++i) os << (i ? "; " : "") << bad[i];
      os << "\n";
      if (bad.empty()) {
        ++passed;
      } else {
        res.failed.push_back(name);
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad manifest: ") + e.what());
  }
  os << passed << "/" << total << " fixtures pass\n";
  res.table = os.str();
  res.exit_code = res.failed.empty() ? 0 : 1;
  return res;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart polynomials, h*-vectors and their inequalities", "ehrhart_lab"};
  app.require_subcommand(1);

  std::string input;
  bool table = false;
  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial and h*-vector");
  ehr->add_option("input", input, "registry:name, family:args, payne:d7 or a JSON polytope file")->required();
  ehr->add_flag("--table", table, "human-readable output");

  DiagnoseFlags f;
  auto* diag = app.add_subcommand("diagnose", "run inequality and root checks");
  diag->add_option("input", input, "as for ehrhart")->required();
  diag->add_flag("--table", table, "human-readable output");
  diag->add_flag("--hstar", f.hstar, "h* shape checks and the general inequality battery");
  diag->add_flag("--series", f.series, "log-concavity of E(0), E(1), ...");
  diag->add_flag("--cl", f.cl, "roots on the critical line");
  diag->add_flag("--magic", f.magic, "magic-basis expansion");
  diag->add_flag("--toeplitz", f.toeplitz, "Toeplitz minors");
  diag->add_flag("--negative", f.negative, "log-concavity of |E(-m)|");
  diag->add_flag("--idp", f.idp, "integer decomposition property");
  diag->add_flag("--spanning", f.spanning, "lattice points span the lattice");
  diag->add_flag("--reflexive", f.reflexive, "reflexivity");

  std::string filter, manifest_path;
  bool emit = false;
  auto* book = app.add_subcommand("paperbook", "check every registry fixture against its expected values");
  book->add_option("--filter", filter, "family name or name substring");
  book->add_option("--manifest", manifest_path, "manifest file replacing the built-in one");
  book->add_flag("--emit-manifest", emit, "print the built-in manifest and exit");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (ehr->parsed() || diag->parsed()) {
      RunReport rep = ehr->parsed() ? cmd_ehrhart(input) : cmd_diagnose(input, f);
      out << (table ? table_view(rep) : serialize(rep) + "\n");
      return 0;
    }
    if (emit) {
      out << default_manifest() << "\n";
      return 0;
    }
    std::optional<std::string> text;
    if (!manifest_path.empty()) {
      std::ifstream in(manifest_path);
      if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + manifest_path + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    PaperbookResult res = cmd_paperbook(filter, text);
    out << res.table;
    for (const auto& name : res.failed) err << "mismatch: " << name << "\n";
    return res.exit_code;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace ehrlab
