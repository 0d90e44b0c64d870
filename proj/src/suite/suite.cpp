#include "ewin/suite/suite.hpp"

#include "ewin/cover/cover.hpp"
#include "ewin/cover/dynamics.hpp"
#include "ewin/cover/sets.hpp"
#include "ewin/cover/verify.hpp"
#include "ewin/cubic/fixture.hpp"
#include "ewin/error.hpp"
#include "ewin/exact/field.hpp"
#include "ewin/exact/interval.hpp"
#include "ewin/ideals/obstruction.hpp"
#include "ewin/minima/families.hpp"
#include "ewin/minima/minimum.hpp"
#include "ewin/padic/padic.hpp"
#include "ewin/zline/zline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace ewin {

using json = nlohmann::json;

namespace {

json load_fixture(const SuiteConfig& cfg, const std::string& file) {
  std::string path = cfg.fixture_dir + "/" + file;
  std::ifstream in(path);
  if (!in) throw Error(Err::fixture_missing, "missing fixture " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Err::fixture_incomplete, path + ": " + e.what());
  }
}

Rat rat_of(const json& j) { return parse_rat(j.is_string() ? j.get<std::string>() : j.dump()); }

QuadElem q69e(const Rat& x, const Rat& y = 0) { return QuadElem(69, x, y); }

struct Probe {
  CriterionResult& r;
  void check(bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
  }
  json& operator[](const char* k) { return r.values[k]; }
};

using ProbeFn = std::function<void(Probe&)>;

CriterionResult run_probe(int criterion, const std::string& name, double limit, const ProbeFn& fn) {
  CriterionResult r;
  r.criterion = criterion;
  r.name = name;
  r.limit = limit;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Probe c{r};
    fn(c);
  } catch (const Error& e) {
    r.error = err_name(e.code());
    r.failures.push_back(e.what());
  } catch (const json::exception& e) {
    r.error = err_name(Err::fixture_incomplete);
    r.failures.push_back(e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = r.error.empty() && r.failures.empty() && (limit <= 0 || r.seconds <= limit);
  return r;
}

// ---- 1: Z trichotomy ----

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// f(r) = u c^v for r = u p^v, c integral
struct ZOracle {
  long p, c;
  __int128 f(long r) const {
    r = r < 0 ? -r : r;
    if (r == 0) return 0;
    __int128 s = 1;
    while (r % p == 0) {
      r /= p;
      s *= c;
    }
    return s * r;
  }
};

// exact min over q of f(a - bq) / f(b) when c >= p, where f(r) >= |r| bounds the search
std::pair<__int128, __int128> oracle_min(long a, long b, const ZOracle& o) {
  long q0 = floor_div(a, b);
  __int128 best = o.f(a - b * q0);
  for (long dir : {-1L, 1L})
    for (long q = q0 + dir;; q += dir) {
      long r = a - b * q;
      if (static_cast<__int128>(r < 0 ? -r : r) >= best) break;
      best = std::min(best, o.f(r));
    }
  return {best, o.f(b)};
}

std::string i128_str(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

Rat rat128(__int128 n, __int128 d) { return make_rat(Int(i128_str(n)), Int(i128_str(d))); }

void check_z(Probe& c, const SuiteConfig& cfg) {
  json fx = load_fixture(cfg, "z_trichotomy.json");
  const long N = fx.at("grid").get<long>();
  json rows = json::array();
  long pairs_total = 0;
  for (auto& row : fx.at("rows")) {
    long p = row.at("p").get<long>();
    Rat cw = rat_of(row.at("c"));
    std::string want = row.at("min").get<std::string>();
    ZWeightedNorm f{Int(p), cw};
    ZMinimum zm = minimum_z(f);
    json out{{"p", p}, {"c", rat_str(cw)}, {"minimum", zm.str()}};
    std::string tag = "p=" + std::to_string(p) + " c=" + rat_str(cw);
    bool match = want == "inf" ? zm.kind == ZMinKind::infinite : zm.kind == ZMinKind::finite && zm.value == parse_rat(want);
    c.check(match, tag + ": minimum " + zm.str() + ", fixture " + want);
    if (cw.get_den() != 1 || !cw.get_num().fits_slong_p()) throw Error(Err::fixture_incomplete, "grid weights must be integers");
    ZOracle o{p, cw.get_num().get_si()};
    if (cw >= Rat(p)) {
      __int128 wn = 0, wd = 1;
      long pairs = 0;
      for (long b = -N; b <= N; ++b) {
        if (b == 0) continue;
        for (long a = -N; a <= N; ++a) {
          if (std::gcd(a, b) != 1) continue;
          auto [n, d] = oracle_min(a, b, o);
          if (n * wd > wn * d) wn = n, wd = d;
          ++pairs;
        }
      }
      pairs_total += pairs;
      Rat worst = rat128(wn, wd);
      out["grid_sup"] = rat_str(worst);
      out["pairs"] = pairs;
      c.check(worst <= zm.value, tag + ": grid value " + rat_str(worst) + " above the minimum");
      if (cw == Rat(p)) c.check(worst == zm.value, tag + ": 1/2 not attained on the grid");
      if (cw > Rat(p)) c.check(worst < 1, tag + ": grid pair with ratio >= 1");
    } else {
      // p | b forces p not dividing a - bq, so f(a - bq) = |a - bq| and the minimum is a distance
      __int128 wn = 0, wd = 1;
      for (long b = -N; b <= N; ++b) {
        if (b == 0 || b % p != 0) continue;
        for (long a = -N; a <= N; ++a) {
          if (std::gcd(a, b) != 1) continue;
          long r = a - b * floor_div(a, b);
          long br = b < 0 ? -b : b;
          long d = std::min(r < 0 ? -r : r, br - (r < 0 ? -r : r));
          __int128 fb = o.f(b);
          if (static_cast<__int128>(d) * wd > wn * fb) wn = d, wd = fb;
        }
      }
      out["grid_sup_p_divides_b"] = rat_str(rat128(wn, wd));
      // the library witness pairs inside the grid agree with the oracle
      unsigned long n = 1;
      for (Int pn = p; pn <= N; pn *= p, ++n) {
        ZDivergence w = divergence_witness(f, n);
        long a = w.a.get_si(), b = w.b.get_si();
        long r = a - b * floor_div(a, b);
        Rat exact = make_rat(std::min(r, b - r), 1) / rat128(o.f(b), 1);
        c.check(exact == w.bound, tag + ": divergence bound at n=" + std::to_string(n) + " disagrees with the oracle");
      }
      unsigned long grow = 1;
      while (grow < 400 && divergence_witness(f, grow).bound <= 1000) ++grow;
      out["divergence_past_1000_at_n"] = grow;
      c.check(divergence_witness(f, grow).bound > 1000, tag + ": divergence bound stays below 1000");
    }
    rows.push_back(out);
  }
  c["rows"] = rows;
  c["grid"] = N;
  c["pairs_checked"] = pairs_total;
}

// ---- 2, 3: Q(sqrt 14) ----

QuadElem elem_of(long m, const json& j) { return QuadElem(m, rat_of(j.at(0)), rat_of(j.at(1))); }

void check_sqrt14_bounds(Probe& c, const SuiteConfig& cfg) {
  json fx = load_fixture(cfg, "sqrt14.json");
  const long m = fx.at("m").get<long>();
  PrimeIdealQ P = prime_ideal(m, Int(fx.at("prime").get<long>()));
  // |N(1 + sqrt 14 - 2 gamma)| >= 5 means |N(xi - gamma)| >= 5/4 at xi = (1 + sqrt 14)/2
  QuadElem xi = elem_of(m, fx.at("point"));
  MinimumResult pm = euclidean_min(make_class(xi), 2);
  Rat want = rat_of(fx.at("point_min"));
  c.check(pm.attained() && pm.value == QuadElem(m, want), "min |N(xi - gamma)| is " + pm.value.str());
  c["point_minimum"] = pm.value.str();
  c["point_witness"] = pm.witness.str();
  for (const QuadElem& g : field(m).pbd_translates(xi, want))
    c.check(abs_q((xi - g).norm()) >= want, "Pbd candidate " + g.str() + " falls below the bound");

  auto side = [&](const char* key, bool lower) {
    const json& s = fx.at(key);
    ObstructionReport r = residue_obstruction(elem_of(m, s.at("modulus")), P, rat_of(s.at("search")));
    Threshold t{rat_of(s.at("base")), s.at("index").get<long>()};
    c.check(r.exact, std::string(key) + ": search relied on a budget floor");
    c.check(r.window_bound.spans.size() == 1, std::string(key) + ": window bound " + r.window_bound.str());
    if (r.window_bound.spans.size() == 1) {
      auto& sp = r.window_bound.spans[0];
      if (lower) {
        c.check(sp.lo && *sp.lo == t && !sp.hi, "lower: " + r.window_bound.str());
      } else {
        c.check(sp.hi && *sp.hi == t && !sp.lo, "upper: " + r.window_bound.str());
      }
    }
    c[key] = {{"modulus", r.modulus.str()}, {"window_bound", r.window_bound.str()}, {"classes", r.classes.size()}};
    return r.window_bound;
  };
  WeightSet lo = side("lower", true), hi = side("upper", false);
  WeightSet both = intersect(lo, hi);
  c["window_inside"] = both.str();
  // sqrt 5 = 2.2360.., sqrt 7 = 2.6457..
  c.check(both.contains(make_rat(2237, 1000)) && both.contains(make_rat(2645, 1000)), "window bound misses interior weights");
  c.check(!both.contains(make_rat(2236, 1000)) && !both.contains(make_rat(2646, 1000)), "window bound too wide");
}

void check_sqrt14_empty(Probe& c, const SuiteConfig& cfg) {
  json fx = load_fixture(cfg, "sqrt14.json");
  const long m = fx.at("m").get<long>();
  const json& e = fx.at("empty");
  auto Ps = primes_norm_pm1_mod8(m, e.at("count").get<size_t>());
  std::vector<long> norms = e.at("norms").get<std::vector<long>>();
  c.check(Ps.size() == norms.size(), "found " + std::to_string(Ps.size()) + " primes");
  json rows = json::array();
  for (size_t i = 0; i < Ps.size(); ++i) {
    ObstructionReport r = residue_obstruction(elem_of(m, e.at("modulus")), Ps[i], rat_of(e.at("search")));
    c.check(i < norms.size() && Ps[i].norm() == norms[i], "prime " + Ps[i].str() + " out of order");
    c.check(r.exact && r.window_bound.empty(), Ps[i].str() + ": window bound " + r.window_bound.str());
    rows.push_back({{"prime", Ps[i].str()}, {"norm", int_str(Ps[i].norm())}, {"window_bound", r.window_bound.str()}});
  }
  c["primes"] = rows;
}

// ---- 4, 5, 7, 9, 10: Q(sqrt 69) minima ----

void check_m1(Probe& c) {
  MinimumResult r = euclidean_min(make_class(q69::c0()), 2);
  c.check(r.attained() && r.value == q69::m1(), "M(c0) = " + r.value.str());
  c.check(Point::of(q69::c0()).minus(r.witness).abs_norm() == q69::m1(), "witness does not attain 25/23");
  c["point"] = q69::c0().str();
  c["value"] = r.value.str();
  c["witness"] = r.witness.str();
  c["orbit_index"] = r.orbit_index;
}

void check_m2(Probe& c) {
  MinimumResult r = euclidean_min(make_class(q69::p_point(0)), 1, OrbitRange{-1, 0});
  c.check(r.attained() && r.value == q69::m2(), "M(P0) = " + r.value.str());
  c.check(r.witness == q69::eta_half(), "witness " + r.witness.str());
  c["value"] = r.value.str();
  c["witness"] = r.witness.str();

  const Rat d0 = make_rat(81, 100000), d1 = make_rat(1, 10000);
  const QuadElem D0 = q69e(d0), D1 = q69e(d1);
  const Rat y4 = make_rat(4, 23);
  // P_{r+1} - (0, 4/23) = (P_r - (0, 4/23)) / eps: checking r = 2..40 and the ratio covers all r >= 2
  for (long r = 2; r <= 40; ++r) {
    Point p = q69::p_point(r);
    QuadElem x = p.x(), dy = p.y() - q69e(y4);
    c.check(abs(x) <= D0, "|x_" + std::to_string(r) + "| > 0.00081");
    c.check(abs(dy) < D1, "|y_" + std::to_string(r) + " - 4/23| >= 0.0001");
    if (r == 2) {
      c["x_2"] = x.str();
      c["y_2_minus_4_23"] = dy.str();
    }
  }
  c.check(q69::eps() > q69e(1), "unit not expanding");
  Rat quoted = (1 + d0) * (1 + d0) - 69 * (y4 - d1) * (y4 - d1);
  c.check(abs_q(quoted) >= make_rat(107, 100), "|(1+d0)^2 - 69(4/23-d1)^2| = " + rat_str(quoted));
  c["quoted_norm_bound"] = rat_str(abs_q(quoted));
  // the tail box around (0, 4/23) and its nearest translates +-1
  Box tail = make_box(-d0, d0, y4 - d1, y4 + d1);
  for (long g : {1L, -1L}) {
    RatInterval n = box_norm_bound(69, tail, q69e(g));
    c.check(n.hi <= make_rat(-107, 100), "N over the tail box at gamma = " + std::to_string(g) + " reaches " + rat_str(n.hi));
    c[g > 0 ? "tail_norm_at_plus1" : "tail_norm_at_minus1"] = {rat_str(n.lo), rat_str(n.hi)};
  }
}

void check_q_table(Probe& c, const SuiteConfig& cfg) {
  json fx = load_fixture(cfg, "q_table.json");
  Rat x = rat_of(fx.at("x"));
  json rows = json::array();
  for (auto& row : fx.at("rows")) {
    long r = row.at("r").get<long>();
    Rat y = rat_of(row.at("y")), M = rat_of(row.at("M"));
    PointClass q = q69::q_family(r);
    Rat got = q69::q_family_norm(r);
    std::string tag = "Q_" + std::to_string(r);
    c.check(q.reduced.a == q69e(x, y), tag + " at " + q.reduced.a.str());
    c.check(got == M, tag + ": M = " + rat_str(got));
    c.check(decimal(got, 9, true) == row.at("M_decimal").get<std::string>(), tag + ": decimal " + decimal(got, 9, true));
    MinimumResult m = euclidean_min(q, 1);
    c.check(m.attained() && m.value == q69e(M), tag + ": minimum " + m.value.str());
    rows.push_back({{"r", r}, {"point", q.reduced.a.str()}, {"M", rat_str(got)}, {"decimal", decimal(got, 9, true)}});
  }
  c["rows"] = rows;
  long by = fx.at("gap_by").get<long>();
  QuadElem gap_bound = q69e(rat_of(fx.at("gap")));
  Rat prev = q69::q_family_norm(-1);
  for (long r = 0; r <= by; ++r) {
    Rat cur = q69::q_family_norm(r);
    c.check(cur > prev, "M(Q_r) not increasing at r = " + std::to_string(r));
    c.check(q69e(cur) < q69::m2(), "M(Q_r) reaches M2 at r = " + std::to_string(r));
    prev = cur;
  }
  QuadElem gap = q69::m2() - q69e(q69::q_family_norm(by));
  c.check(gap < gap_bound, "gap at r = " + std::to_string(by) + " is " + gap.str());
  c["gap_at"] = by;
  c["gap"] = gap.str();
}

void check_r_table(Probe& c, const SuiteConfig& cfg) {
  json fx = load_fixture(cfg, "r_table.json");
  json rows = json::array(), notes = json::array();
  for (auto& row : fx.at("rows")) {
    long r = row.at("r").get<long>();
    std::string tag = "R_" + std::to_string(r);
    PointClass R = q69::r_family(r);
    auto [n1, n2] = q69::r_family_norms(r);
    c.check(R.reduced.a == q69e(rat_of(row.at("x")), rat_of(row.at("y"))), tag + " at " + R.reduced.a.str());
    c.check(n1 == rat_of(row.at("N_eta")), tag + ": |N(R - eta)| = " + rat_str(n1));
    c.check(n2 == rat_of(row.at("N_2")), tag + ": |N(R - 2)| = " + rat_str(n2));
    c.check(decimal(n1, 9, true) == row.at("N_eta_decimal").get<std::string>(), tag + ": decimal " + decimal(n1, 9, true));
    c.check(decimal(n2, 9, true) == row.at("N_2_decimal").get<std::string>(), tag + ": decimal " + decimal(n2, 9, true));
    if (row.contains("printed")) {
      Rat printed = rat_of(row.at("printed").at("N_2"));
      notes.push_back({{"row", r},
                       {"printed", rat_str(printed)},
                       {"printed_decimal", decimal(printed, 9, true)},
                       {"computed", rat_str(n2)},
                       {"note", "printed numerator disagrees with its own decimal; the computed value matches the decimal"}});
    }
    rows.push_back({{"r", r}, {"point", R.reduced.a.str()}, {"N_eta", rat_str(n1)}, {"N_2", rat_str(n2)}});
  }
  c["rows"] = rows;
  c["discrepancies"] = notes;
}

void check_window(Probe& c) {
  QuadElem k0 = q69::kappa0();
  // 25/c = kappa0
  QuadElem cross = q69e(25) / k0;
  QuadElem stated = q69e(make_rat(23 * 8, 15), make_rat(23, 15));
  c.check(cross == stated, "crossover " + cross.str());
  RatInterval enc = cross.enclosure(Int("10000000000"));
  Rat target = parse_rat("25.0034899"), tol = make_rat(1, 10000000);
  c.check(enc.lo >= target - tol && enc.hi <= target + tol, "enclosure " + enc.str() + " misses 25.0034899");
  c["crossover"] = cross.str();
  c["crossover_enclosure"] = {rat_str(enc.lo), rat_str(enc.hi)};
  c["crossover_decimal"] = decimal(enc.lo, 7);
  // lower endpoint: the M1 branch value 25/c drops below 1 exactly for c > 25
  WeightedNorm f{q69::p23(), 25};
  MinimumResult at25 = euclidean_min_weighted(make_class(q69::c0()), f, 1);
  c.check(at25.status == MinStatus::none_below_k, "a value below 1 at c = 25");
  for (Rat w : {Rat(26), make_rat(251, 10), make_rat(2501, 100)}) {
    f.c = w;
    MinimumResult r = euclidean_min_weighted(make_class(q69::c0()), f, 1);
    c.check(r.attained() && r.value.x() == Rat(25) / w, "M1 branch at c = " + rat_str(w) + ": " + r.value.str());
  }
  f.c = make_rat(2501, 100);
  MinimumResult r = euclidean_min_weighted(make_class(q69::c0()), f, 1);
  c.check(r.weighted && r.weighted->coeff == 25 && r.weighted->exponent == -1, "M1 branch is not 25 c^-1");
  c.check(k0 < q69e(1) && k0 > q69e(0), "kappa0 outside (0, 1)");
  // 25/c > kappa0 strictly below the crossover and < above
  c.check(q69e(Rat(25) / Rat(25)) > k0 && q69e(make_rat(25, 26)) < k0, "branch order around the crossover");
  c["lower_endpoint"] = "25";
  c["branch"] = "25/c";
  c["kappa0"] = k0.str();
  c["discrepancy"] =
      "one statement reads M(P, f) = 25/(23c); evaluating f with weight c in place of the norm 23 gives 25/c, "
      "which is the branch used here; the factor 23 is reported, not resolved";
}

// ---- 6, 8: coverings ----

std::vector<Box> boxes_of(const std::vector<q69::NamedBox>& v) {
  std::vector<Box> out;
  for (auto& n : v) out.push_back(n.box);
  return out;
}

CoverCertificate run_cover(const SuiteConfig& cfg, const Rat& k, const CoverMode& mode) {
  CoverOptions o;
  o.m = 69;
  o.k = k;
  o.mode = mode;
  o.max_depth = cfg.cover_depth;
  o.max_boxes = cfg.max_boxes;
  o.workers = cfg.workers;
  CoverCertificate cert = cover(o);
  if (!cert.complete) throw Error(Err::budget, "covering stopped after " + std::to_string(cert.boxes_processed) + " boxes");
  return cert;
}

void report_rows(Probe& c, const std::vector<RowVerdict>& v, size_t want) {
  c.check(v.size() == want, "table has " + std::to_string(v.size()) + " rows");
  json rows = json::array();
  for (auto& r : v) {
    c.check(r.ok, r.str());
    rows.push_back(r.str());
  }
  c["inclusion_rows"] = rows;
}

void report_cert(Probe& c, const CoverCertificate& cert, const std::vector<Box>& allowed) {
  auto U = lattice_copies(69, allowed, fundamental_region(69), false);
  long outside = 0;
  for (auto& e : cert.exceptional_boxes())
    if (!covered_by_union(e, U)) {
      if (outside++ < 5) c.check(false, "exceptional box " + e.str() + " outside the sets");
    }
  c.check(outside == 0, std::to_string(outside) + " exceptional boxes outside the sets");
  std::string js = cert.to_json();
  CertificateCheck v = verify_certificate(js);
  c.check(v.sound && v.complete, "independent check: " + v.str());
  c["depth"] = cert.depth;
  c["covered_boxes"] = cert.covered.size();
  c["exceptional_boxes"] = cert.exceptional.size();
  c["exceptional_area"] = rat_str(cert.exceptional_area());
  c["certificate_checksum"] = json::parse(js).at("checksum");
  c["verifier"] = v.str();
}

void check_plain_cover(Probe& c, const SuiteConfig& cfg) {
  CoverCertificate cert = run_cover(cfg, make_rat(7, 8), CoverMode::plain());
  report_cert(c, cert, boxes_of(q69::plain_sets()));
  Rat listed = q69::S0().area() + q69::S1().area() + q69::S2().area() + q69::T().area();
  c["area_ratio_to_listed_boxes"] = decimal(cert.exceptional_area() / listed, 6);
  report_rows(c, verify_inclusion_table(q69::plain_inclusion_table(), 69, make_rat(7, 8), CoverMode::plain()), 8);
}

void check_weighted_cover(Probe& c, const SuiteConfig& cfg) {
  CoverMode mode = CoverMode::weighted_at(q69::p23());
  CoverCertificate cert = run_cover(cfg, make_rat(99, 100), mode);
  auto allowed = boxes_of(q69::weighted_sets());
  allowed.push_back(q69::origin_neighbourhood());
  report_cert(c, cert, allowed);
  c["origin_neighbourhood"] = q69::origin_neighbourhood().str();
  report_rows(c, verify_inclusion_table(q69::weighted_inclusion_table(), 69, make_rat(99, 100), mode), 6);
  PlanePoint p = q69::weighted_trapped_point();
  QuadElem s = sqrt_m(69);
  Point P0{p.x + p.y * s, p.x - p.y * s};
  c.check(P0 == q69::p0_weighted(), "trapped point " + p.str());
  QuadElem n2 = P0.minus(q69e(2)).abs_norm(), ne = P0.minus(q69::eta_half()).abs_norm();
  c.check(n2 == q69e(make_rat(94, 23), make_rat(-10, 23)), "|N(P0 - 2)| = " + n2.str());
  c.check(ne == q69e(make_rat(-600, 23), make_rat(75, 23)), "|N(P0 - eta)| = " + ne.str());
  c["P0"] = p.str();
  c["N_P0_minus_2"] = n2.str();
  c["N_P0_minus_eta"] = ne.str();
}

// ---- 11: p-adic ----

void check_padic(Probe& c, const SuiteConfig& cfg) {
  json fx = load_fixture(cfg, "padic.json");
  const Int p(fx.at("p").get<long>());
  const long m = fx.at("m").get<long>();
  std::vector<long> want = fx.at("digits").get<std::vector<long>>();
  const long N = static_cast<long>(want.size());
  if (m != 69 || p != 23) throw Error(Err::fixture_incomplete, "the p-adic criterion is stated for p = 23, m = 69");
  PadicExponent s = solve_exponent(q69::eps(), q69::alpha_e23(), p, N);
  c.check(s.digits == want, "digits differ");
  c["digits"] = s.digits;
  c["s_mod_p_N"] = int_str(s.value);
  PadicQuadElem base = PadicQuadElem::of(q69::eps(), p, N), target = PadicQuadElem::of(q69::alpha_e23(), p, N);
  c.check(pow(base, s.value) == target, "base^s != target mod p^N");
  long range = fx.at("range").get<long>(), res = fx.at("residue").get<long>();
  long hits = 0;
  for (long r = 1; r <= range; ++r) {
    auto d = q69::divisibility_pattern(r);
    c.check(d.by_p == (r % p.get_si() == res), "divisibility at r = " + std::to_string(r));
    hits += d.by_p;
  }
  c["divisible_count"] = hits;
  long k = fx.at("deep_k").get<long>();
  auto w = q69::deep_divisibility_witness(k);
  // independent check through the ideal valuation
  long v = valuation(q69::r_family(w.r).representative.a - q69e(2), q69::p23());
  c.check(v >= k && v == w.valuation, "v_P(R_r - 2) = " + std::to_string(v) + " at r = " + std::to_string(w.r));
  c["deep_witness"] = {{"k", k}, {"r", w.r}, {"valuation", v}};
}

// ---- 12: cubic ----

void check_cubic(Probe& c, const SuiteConfig& cfg) {
  json rows = json::array();
  for (long disc : {985L, 1937L, 3305L, 3889L}) {
    std::string path = cfg.fixture_dir + "/disc" + std::to_string(disc) + ".json";
    CubicFixture fx = load_cubic_fixture(path);
    CubicReport rep = verify_cubic_fixture(fx);
    std::string tag = "disc " + std::to_string(disc);
    c.check(rep.ok(), tag + ": " + rep.str());
    bool window_ok = rep.window.spans.size() == 1 && fx.expected_lo && rep.window.spans[0].lo &&
                     *rep.window.spans[0].lo == *fx.expected_lo &&
                     rep.window.spans[0].hi.has_value() == fx.expected_hi.has_value() &&
                     (!fx.expected_hi || *rep.window.spans[0].hi == *fx.expected_hi);
    c.check(window_ok, tag + ": window " + rep.window.str());
    json checks = json::array();
    for (auto& ch : rep.checks) checks.push_back(std::string(ch.ok ? "ok " : "FAIL ") + ch.name);
    rows.push_back({{"disc", disc}, {"window", rep.window.str()}, {"checks", checks}, {"assumed", rep.assumed}});
  }
  c["fields"] = rows;
}

// ---- 13: properties ----

Rat rnd_rat(std::mt19937_64& g, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return make_rat(n(g), d(g));
}

void check_properties(Probe& c, const SuiteConfig& cfg) {
  std::mt19937_64 g(cfg.seed);
  const long n = cfg.property_cases;
  json counts;
  const long ms[] = {2, 3, 5, 6, 7, 13, 14, 69};

  // norm multiplicativity
  {
    long done = 0;
    for (long i = 0; i < n; ++i, ++done) {
      long m = ms[i % 8];
      QuadElem a(m, rnd_rat(g, 300, 40), rnd_rat(g, 300, 40)), b(m, rnd_rat(g, 300, 40), rnd_rat(g, 300, 40));
      if ((a * b).norm() != a.norm() * b.norm()) c.check(false, "N(ab) != N(a)N(b) for " + a.str() + ", " + b.str());
    }
    counts["norm_multiplicativity"] = done;
  }
  // weighted-norm multiplicativity at primes of several kinds
  {
    long done = 0;
    const std::pair<long, long> fp[] = {{14, 2}, {14, 7}, {14, 5}, {69, 23}, {69, 2}, {5, 11}, {13, 3}, {7, 3}};
    for (long i = 0; done < n && i < 2 * n; ++i) {
      auto [m, p] = fp[i % 8];
      auto Ps = primes_above(m, Int(p));
      PrimeIdealQ P = Ps[static_cast<size_t>(g() % Ps.size())];
      WeightedNorm f{P, make_rat(static_cast<long>(g() % 90) + 2, static_cast<long>(g() % 3) + 1)};
      QuadElem a(m, rnd_rat(g, 60, 12), rnd_rat(g, 60, 12)), b(m, rnd_rat(g, 60, 12), rnd_rat(g, 60, 12));
      if (a.is_zero() || b.is_zero()) continue;
      if (weighted_norm(a * b, f) != weighted_norm(a, f) * weighted_norm(b, f))
        c.check(false, "f(ab) != f(a)f(b) at " + P.str());
      ++done;
    }
    counts["weighted_norm_multiplicativity"] = done;
  }
  // interval soundness: operations and the box norm range against sampled points
  {
    long done = 0;
    std::uniform_int_distribution<long> t(0, 1000);
    for (long i = 0; i < n; ++i, ++done) {
      Rat a0 = rnd_rat(g, 200, 50), a1 = rnd_rat(g, 200, 50), b0 = rnd_rat(g, 200, 50), b1 = rnd_rat(g, 200, 50);
      RatInterval A(std::min(a0, a1), std::max(a0, a1)), B(std::min(b0, b1), std::max(b0, b1));
      Rat pa = A.lo + make_rat(t(g), 1000) * A.width(), pb = B.lo + make_rat(t(g), 1000) * B.width();
      bool ok = (A + B).contains(pa + pb) && (A - B).contains(pa - pb) && (A * B).contains(pa * pb) &&
                square(A).contains(pa * pa) && abs(A).contains(abs_q(pa));
      if (!B.contains(Rat(0))) ok = ok && (A / B).contains(pa / pb);
      RatInterval sq = sqrt_enclosure(abs(A), Int(997 + i));
      ok = ok && sq.lo * sq.lo <= abs_q(pa) && sq.hi * sq.hi >= abs_q(pa);
      long m = ms[i % 8];
      Box bx = make_box(A.lo, A.hi, B.lo, B.hi);
      QuadElem gm(m, Rat(static_cast<long>(g() % 21) - 10), Rat(static_cast<long>(g() % 21) - 10));
      Rat nv = (pa - gm.x()) * (pa - gm.x()) - m * (pb - gm.y()) * (pb - gm.y());
      ok = ok && box_norm_bound(m, bx, gm).contains(nv);
      QuadElem e(m, pa, pb);
      RatInterval E = e.enclosure(Int(1000 + i));
      ok = ok && QuadElem(m, E.lo) <= e && e <= QuadElem(m, E.hi);
      if (!ok) c.check(false, "interval enclosure misses a point in case " + std::to_string(i));
    }
    counts["interval_soundness"] = done;
  }
  // orbit invariance of minima
  {
    long done = 0;
    const long om[] = {69, 14, 2, 6, 13};
    for (long i = 0; i < n; ++i, ++done) {
      long m = om[i % 5];
      QuadElem xi(m, rnd_rat(g, 20, 8), rnd_rat(g, 20, 8));
      PointClass pc = make_class(xi);
      MinimumResult base = euclidean_min(pc, 2);
      for (long j : {-2L, -1L, 1L, 2L}) {
        MinimumResult r = euclidean_min(orbit(pc, {j, j}).front(), 2);
        if (r.status != base.status || r.value != base.value)
          c.check(false, "minimum changes along the orbit of " + xi.str());
      }
    }
    counts["orbit_invariance"] = done;
  }
  // window combination: certificates at r < t give one at every s in [r, t]
  {
    long done = 0, tries = 0;
    const PrimeIdealQ P = q69::p23();
    const Rat r(26), t(40);
    while (done < n && tries < 4 * n) {
      ++tries;
      QuadElem xi(69, rnd_rat(g, 30, 9), rnd_rat(g, 30, 9));
      PointClass pc = make_class(xi);
      MinimumResult mr = euclidean_min_weighted(pc, {P, r}, 1), mt = euclidean_min_weighted(pc, {P, t}, 1);
      if (!mr.attained() || !mt.attained()) continue;
      QuadElem gamma = combine_certificates(xi, mr.witness, mt.witness, P);
      Rat s = r + (t - r) * make_rat(static_cast<long>(g() % 1001), 1000);
      for (Rat w : {r, s, t})
        if (!(weighted_translate(xi, gamma, {P, w}) < 1)) c.check(false, "combined translate fails at " + xi.str());
      ++done;
    }
    c.check(done >= n, "only " + std::to_string(done) + " combinable points");
    counts["window_combination"] = done;
  }
  // certificates re-verified by the independent checker, plus witness sampling and a removed leaf
  {
    long done = 0;
    const long cm[] = {2, 3, 5, 6, 7, 13, 14, 69};
    std::uniform_int_distribution<long> t(0, 1000);
    for (long i = 0; i < n; ++i, ++done) {
      CoverOptions o;
      o.m = cm[i % 8];
      o.k = make_rat(static_cast<long>(g() % 12) + 9, 12);
      o.max_depth = static_cast<int>(g() % 9) + 4;
      if (i % 4 == 3) {
        auto Ps = primes_above(o.m, Int(o.m % 3 == 0 ? 3 : 7));
        PrimeIdealQ P = Ps.front();
        if (P.kind != PrimeKind::inert) o.mode = CoverMode::weighted_at(P);
      }
      CoverCertificate cert = cover(o);
      std::string tag = "m=" + std::to_string(o.m) + " k=" + rat_str(o.k) + " " + o.mode.str();
      CertificateCheck v = verify_certificate(cert.to_json());
      if (!v.sound || v.covered != static_cast<long>(cert.covered.size())) c.check(false, tag + ": " + v.str());
      if (!cert.covered.empty()) {
        const CoveredBox& cb = cert.covered[static_cast<size_t>(g() % cert.covered.size())];
        Box B = cb.box.box();
        QuadElem pt(o.m, B.x.lo + B.x.width() * make_rat(t(g), 1000), B.y.lo + B.y.width() * make_rat(t(g), 1000));
        for (int j = 0; j < cb.nw; ++j)
          if (!(abs_q((pt - cert.witness(cb.w[j])).norm()) < o.k)) c.check(false, tag + ": witness fails at " + pt.str());
        CoverCertificate cut = cert;
        cut.covered.erase(cut.covered.begin() + static_cast<long>(g() % cut.covered.size()));
        if (verify_certificate(cut.to_json()).sound) c.check(false, tag + ": removed leaf not detected");
      }
    }
    counts["certificate_reverification"] = done;
  }
  for (auto& [k, v] : counts.items()) c.check(v.get<long>() >= n, k + ": only " + v.dump() + " cases");
  c["cases"] = counts;
  c["seed"] = cfg.seed;
}

struct Entry {
  int criterion;
  const char* name;
  double limit;
  std::function<void(Probe&, const SuiteConfig&)> fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {1, "Z trichotomy against the brute-force oracle", 10, check_z},
      {2, "Q(sqrt 14) window bounds sqrt 5 < c < sqrt 7", 5, check_sqrt14_bounds},
      {3, "Q(sqrt 14) empty windows for norms +-1 mod 8", 10, check_sqrt14_empty},
      {4, "Q(sqrt 69) M1 = 25/23", 1, [](Probe& c, const SuiteConfig&) { check_m1(c); }},
      {5, "Q(sqrt 69) M2 at P0 and the P_r tail", 5, [](Probe& c, const SuiteConfig&) { check_m2(c); }},
      {6, "covering m = 69, k = 7/8 and its inclusion table", 600, check_plain_cover},
      {7, "Q_r table and convergence to M2", 30, check_q_table},
      {8, "weighted covering m = 69, k = 99/100 at (23, sqrt 69)", 600, check_weighted_cover},
      {9, "R_r table", 30, check_r_table},
      {10, "weighted window endpoints 25 and the M1 crossover", 1, [](Probe& c, const SuiteConfig&) { check_window(c); }},
      {11, "p-adic digits and divisibility of R_r - 2", 60, check_padic},
      {12, "cubic fixtures", 10, check_cubic},
      {13, "randomized property families", 0, check_properties},
  };
  return e;
}

std::vector<int> criteria_of(const std::string& name) {
  if (name == "z") return {1};
  if (name == "sqrt14") return {2, 3};
  if (name == "sqrt69-plain") return {4, 5, 6, 7};
  if (name == "sqrt69-weighted") return {8, 9, 10};
  if (name == "padic") return {11};
  if (name == "cubic") return {12};
  if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
  throw Error(Err::usage, "unknown suite " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"z", "sqrt14", "sqrt69-plain", "sqrt69-weighted", "padic", "cubic", "all"};
  return n;
}

bool SuiteReport::pass() const {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const CriterionResult& c) { return c.pass; });
}

bool SuiteReport::any_error(const std::string& err) const {
  return std::any_of(results.begin(), results.end(), [&](const CriterionResult& c) { return c.error == err; });
}

int SuiteReport::exit_code() const {
  if (pass()) return 0;
  return any_error(err_name(Err::budget)) ? 3 : 1;
}

json SuiteReport::body() const {
  json cl = json::array();
  for (auto& c : results) {
    json j{{"criterion", c.criterion}, {"name", c.name}, {"pass", c.pass}, {"values", c.values}, {"failures", c.failures}};
    if (!c.error.empty()) j["error"] = c.error;
    cl.push_back(j);
  }
  return {{"suite", suite}, {"pass", pass()}, {"results", cl}};
}

std::string SuiteReport::to_json() const {
  json b = body();
  json t = json::array();
  for (auto& c : results) t.push_back({{"criterion", c.criterion}, {"seconds", c.seconds}, {"limit", c.limit}});
  json doc{{"body", b}, {"checksum", fnv1a64(b.dump())}, {"timings", t}};
  return doc.dump(2);
}

SuiteReport run_criteria(const std::vector<int>& ids, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "criteria";
  for (int id : ids) {
    if (id < 1 || id > static_cast<int>(entries().size())) throw Error(Err::usage, "no criterion " + std::to_string(id));
    const Entry& e = entries()[static_cast<size_t>(id - 1)];
    rep.results.push_back(run_probe(e.criterion, e.name, e.limit, [&](Probe& c) { e.fn(c, cfg); }));
  }
  return rep;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteReport rep = run_criteria(criteria_of(name), cfg);
  rep.suite = name;
  return rep;
}

}  // namespace ewin
