#include "ewin/cover/cover.hpp"
#include "ewin/cover/verify.hpp"
#include "ewin/cubic/fixture.hpp"
#include "ewin/error.hpp"
#include "ewin/ideals/prime.hpp"
#include "ewin/minima/families.hpp"
#include "ewin/minima/minimum.hpp"
#include "ewin/padic/padic.hpp"
#include "ewin/suite/suite.hpp"
#include "ewin/zline/zline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ewin;
using json = nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

std::string out_path;

// the document goes to --out when given, else to stdout
void emit(const std::string& doc) {
  if (out_path.empty()) {
    std::cout << doc;
    if (doc.empty() || doc.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error(Err::usage, "cannot write " + out_path);
  f << doc;
  if (doc.empty() || doc.back() != '\n') f << "\n";
}

// "x_num,x_den,y_num,y_den"
QuadElem parse_xi(long m, const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) parts.push_back(t);
  if (parts.size() != 4) throw Error(Err::usage, "--xi needs NUM,DEN,NUM,DEN");
  Rat x = make_rat(Int(parts[0]), Int(parts[1])), y = make_rat(Int(parts[2]), Int(parts[3]));
  return QuadElem(m, x, y);
}

PrimeIdealQ pick_prime(long m, long p, const std::string& root) {
  if (!root.empty()) return prime_ideal(m, Int(p), Int(root));
  auto Ps = primes_above(m, Int(p));
  return Ps.front();
}

json minimum_json(const MinimumResult& r) {
  json j{{"status", status_name(r.status)}};
  if (r.attained()) {
    j["value"] = r.value.str();
    j["witness"] = r.witness.str();
    j["orbit_index"] = r.orbit_index;
  }
  if (r.weighted) j["weighted"] = {{"coeff", rat_str(r.weighted->coeff)}, {"exponent", r.weighted->exponent}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

// {"command": "cover", "k": "7/8", ...} becomes "cover --k 7/8 ..." ahead of the real arguments
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> rest;
  std::string cfg;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) {
      cfg = argv[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      cfg = a.substr(9);
    } else {
      rest.push_back(a);
    }
  }
  if (cfg.empty()) return rest;
  std::ifstream in(cfg);
  if (!in) throw Error(Err::usage, "cannot read config " + cfg);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Err::usage, std::string("config is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Err::usage, "config must be a JSON object");
  std::vector<std::string> head;
  std::string cmd = j.value("command", "");
  bool cli_has_cmd = !rest.empty() && rest[0].rfind("-", 0) != 0;
  if (cli_has_cmd) {
    if (!cmd.empty() && cmd != rest[0]) throw Error(Err::usage, "config command " + cmd + " differs from " + rest[0]);
    head.push_back(rest[0]);
    rest.erase(rest.begin());
  } else if (!cmd.empty()) {
    head.push_back(cmd);
  }
  std::vector<std::string> positional;
  for (auto& [k, v] : j.items()) {
    if (k == "command") continue;
    if (k == "args") {
      for (auto& a : v) positional.push_back(a.is_string() ? a.get<std::string>() : a.dump());
      continue;
    }
    if (v.is_boolean()) {
      if (v.get<bool>()) head.push_back("--" + k);
      continue;
    }
    head.push_back("--" + k);
    head.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  head.insert(head.end(), positional.begin(), positional.end());
  head.insert(head.end(), rest.begin(), rest.end());
  return head;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Err::usage:
    case Err::precondition:
      return kUsage;
    case Err::budget:
      return kBudget;
    default:
      return kFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean minima, weighted norms and covering certificates"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_all_flag("--help-all");
  int code = kPass;

  // zwindow
  auto* zw = app.add_subcommand("zwindow", "trichotomy for f_{p,c} on Z");
  long zp = 5, zn = 3;
  std::string zc = "5";
  zw->add_option("--p", zp, "prime")->required();
  zw->add_option("--c", zc, "weight NUM/DEN")->required();
  zw->add_option("--witness-n", zn, "exponent of the witness");
  zw->add_option("--out", out_path);
  zw->callback([&] {
    ZWeightedNorm f{Int(zp), parse_rat(zc)};
    ZMinimum m = minimum_z(f);
    json j{{"p", zp}, {"c", rat_str(f.c)}, {"minimum", m.str()}};
    if (zn < 1) throw Error(Err::usage, "--witness-n must be positive");
    auto n = static_cast<unsigned long>(zn);
    if (m.kind == ZMinKind::infinite) {
      ZDivergence d = divergence_witness(f, n);
      j["divergence"] = {{"n", zn}, {"a", int_str(d.a)}, {"b", int_str(d.b)}, {"lower_bound", rat_str(d.bound)}};
    } else if (m.approach) {
      ZApproachTerm t = approach_witness(f, *m.approach, n);
      j["approach"] = {{"alpha", int_str(m.approach->alpha)}, {"beta", int_str(m.approach->beta)}, {"n", zn},
                       {"a", int_str(t.a)}, {"b", int_str(t.b)}, {"f_point", rat_str(t.f_point)},
                       {"f_shift", rat_str(t.f_shift)}, {"lower", rat_str(t.lower)}};
    } else {
      // c = p: a/b = 1/2 attains the value
      j["attained_at"] = {{"a", 1}, {"b", 2}, {"value", rat_str(empirical_min_z(1, 2, f))}};
    }
    emit(j.dump(2));
  });

  // minimum
  auto* mn = app.add_subcommand("minimum", "Euclidean minimum of a point of Q(sqrt m)");
  long mm = 69, mprime = 0;
  std::string mxi, mweight, mk = "2", mroot;
  mn->add_option("--m", mm)->required();
  mn->add_option("--xi", mxi, "x and y as NUM,DEN,NUM,DEN for x + y sqrt m")->required();
  mn->add_option("--prime", mprime, "weighted prime above P");
  mn->add_option("--root", mroot, "sqrt m residue selecting a split prime");
  mn->add_option("--weight", mweight, "weight c");
  mn->add_option("--k", mk, "search bound");
  mn->add_option("--out", out_path);
  mn->callback([&] {
    QuadElem xi = parse_xi(mm, mxi);
    Rat k = parse_rat(mk);
    MinimumResult r;
    json j{{"m", mm}, {"xi", xi.str()}, {"k", rat_str(k)}};
    if (mprime) {
      if (mweight.empty()) throw Error(Err::usage, "--prime needs --weight");
      WeightedNorm f{pick_prime(mm, mprime, mroot), parse_rat(mweight)};
      j["prime"] = f.ideal.str();
      j["weight"] = rat_str(f.c);
      r = euclidean_min_weighted(make_class(xi), f, k);
    } else {
      r = euclidean_min(make_class(xi), k);
    }
    j["result"] = minimum_json(r);
    emit(j.dump(2));
  });

  // family
  auto* fam = app.add_subcommand("family", "golden table rows");
  std::string fwhich = "q", frange = "-1..4", ffmt = "csv", ffix = EWIN_FIXTURE_DIR;
  fam->add_option("--which", fwhich, "q, r or tr")->required();
  fam->add_option("--range", frange, "A..B (discriminants for tr)");
  fam->add_option("--format", ffmt, "csv or json");
  fam->add_option("--fixtures", ffix);
  fam->add_option("--out", out_path);
  fam->callback([&] {
    auto dots = frange.find("..");
    if (dots == std::string::npos) throw Error(Err::usage, "--range needs A..B");
    long a = 0, b = 0;
    try {
      a = std::stol(frange.substr(0, dots));
      b = std::stol(frange.substr(dots + 2));
    } catch (const std::exception&) {
      throw Error(Err::usage, "bad --range " + frange);
    }
    std::string w = fwhich == "q" ? "Q" : fwhich == "r" ? "R" : fwhich == "tr" ? "TR" : fwhich;
    if (ffmt != "csv" && ffmt != "json") throw Error(Err::usage, "--format is csv or json");
    emit(emit_table(w, a, b, ffmt == "csv" ? TableFormat::csv : TableFormat::json, ffix));
  });

  // cover
  auto* cv = app.add_subcommand("cover", "covering certificate of the fundamental region");
  CoverOptions co;
  std::string ck = "7/8", croot;
  long cprime = 0;
  cv->add_option("--m", co.m);
  cv->add_option("--k", ck, "bound NUM/DEN");
  cv->add_option("--weighted", cprime, "two-translate mode at a prime above P");
  cv->add_option("--root", croot, "sqrt m residue selecting a split prime");
  cv->add_option("--depth", co.max_depth);
  cv->add_option("--tiers", co.max_tier, "unit powers |j| <= tiers");
  cv->add_option("--max-boxes", co.max_boxes);
  cv->add_option("--workers", co.workers);
  cv->add_option("--out", out_path, "certificate file");
  cv->callback([&] {
    co.k = parse_rat(ck);
    if (cprime) co.mode = CoverMode::weighted_at(pick_prime(co.m, cprime, croot));
    CoverCertificate c = cover(co);
    std::string doc = c.to_json();
    json s{{"m", c.m}, {"k", rat_str(c.k)}, {"mode", c.mode.str()}, {"complete", c.complete},
           {"depth", c.depth}, {"covered", c.covered.size()}, {"exceptional", c.exceptional.size()},
           {"exceptional_area", rat_str(c.exceptional_area())}, {"boxes_processed", c.boxes_processed}};
    if (out_path.empty()) {
      std::cout << doc << "\n";
    } else {
      emit(doc);
      std::cerr << s.dump() << "\n";
    }
    if (!c.complete) code = kBudget;
  });

  // cover-verify
  auto* vf = app.add_subcommand("cover-verify", "independent check of a certificate");
  std::string vpath;
  vf->add_option("certificate", vpath)->required();
  vf->callback([&] {
    CertificateCheck r = verify_certificate_file(vpath);
    std::cout << r.str() << "\n";
    code = r.sound ? kPass : kFail;
  });

  // padic-exponent
  auto* pe = app.add_subcommand("padic-exponent", "digits of s = log target / log eps in Z_p");
  long pp = 23, pm = 69, pd = 5;
  std::string ptarget;
  pe->add_option("--p", pp);
  pe->add_option("--m", pm);
  pe->add_option("--digits", pd);
  pe->add_option("--target", ptarget, "NUM,DEN,NUM,DEN; default -(47 + 5 sqrt 69)/22 for m = 69");
  pe->add_option("--out", out_path);
  pe->callback([&] {
    QuadElem target;
    if (!ptarget.empty()) {
      target = parse_xi(pm, ptarget);
    } else if (pm == 69) {
      target = q69::alpha_e23();
    } else {
      throw Error(Err::usage, "--target is required unless m = 69");
    }
    PadicExponent s = solve_exponent(field(pm).unit(), target, Int(pp), pd);
    json j{{"p", pp}, {"m", pm}, {"N", pd}, {"target", target.str()}, {"digits", s.digits}, {"s_mod_p_N", int_str(s.value)}};
    emit(j.dump(2));
  });

  // cubic-verify
  auto* cu = app.add_subcommand("cubic-verify", "re-verify a cubic field fixture");
  std::string cpath;
  cu->add_option("fixture", cpath)->required();
  cu->add_option("--out", out_path);
  cu->callback([&] {
    CubicReport r = verify_cubic_fixture(load_cubic_fixture(cpath));
    json checks = json::array();
    for (auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    json j{{"discriminant", r.discriminant}, {"ok", r.ok()}, {"window", r.window.str()}, {"checks", checks}, {"assumed", r.assumed}};
    emit(j.dump(2));
    code = r.ok() ? kPass : kFail;
  });

  // suite
  auto* su = app.add_subcommand("suite", "run an acceptance suite");
  std::string sname;
  SuiteConfig scfg;
  scfg.fixture_dir = EWIN_FIXTURE_DIR;
  su->add_option("name", sname, "z, sqrt14, sqrt69-plain, sqrt69-weighted, padic, cubic or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  su->add_option("--fixtures", scfg.fixture_dir);
  su->add_option("--depth", scfg.cover_depth);
  su->add_option("--workers", scfg.workers);
  su->add_option("--max-boxes", scfg.max_boxes);
  su->add_option("--cases", scfg.property_cases, "randomized cases per property family");
  su->add_option("--seed", scfg.seed);
  su->add_option("--out", out_path, "JSON report");
  su->callback([&] {
    SuiteReport r = run_suite(sname, scfg);
    for (auto& c : r.results) {
      std::cerr << (c.pass ? "PASS" : "FAIL") << " " << c.criterion << " " << c.name;
      if (!c.error.empty()) std::cerr << " [" << c.error << "]";
      std::cerr << "\n";
      for (auto& f : c.failures) std::cerr << "  " << f << "\n";
    }
    emit(r.to_json());
    code = r.exit_code();
  });

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 takes the vector in reverse order
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << err_name(e.code()) << "): " << e.what() << "\n";
    return exit_for(e);
  }
  return code;
}
