#include "ewin/cubic/fixture.hpp"

#include "ewin/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ewin {

namespace {

using json = nlohmann::json;

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw Error(Err::fixture_incomplete, path + ": missing \"" + key + "\"");
  return j.at(key);
}

Rat jrat(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.get<long>()));
  throw Error(Err::fixture_incomplete, "expected a rational, got " + j.dump());
}

Int jint(const json& j) {
  Rat q = jrat(j);
  if (q.get_den() != 1) throw Error(Err::fixture_incomplete, "expected an integer, got " + j.dump());
  return q.get_num();
}

std::array<Rat, 3> jcoords(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(Err::fixture_incomplete, "coordinates need 3 entries: " + j.dump());
  return {jrat(j[0]), jrat(j[1]), jrat(j[2])};
}

CubicPrimeIdeal jprime(const json& j) {
  CubicPrimeIdeal P;
  P.p = jint(j.at("p"));
  P.degree = j.value("degree", 1);
  if (j.contains("a")) P.a = jint(j.at("a"));
  if (j.contains("b")) P.b = jint(j.at("b"));
  return P;
}

std::optional<Threshold> jthreshold(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Threshold{jrat(j.at("base")), j.value("index", 1L)};
}

PointRole jrole(const std::string& s) {
  if (s == "C1") return PointRole::c1;
  if (s == "upper") return PointRole::upper;
  if (s == "satellite") return PointRole::satellite;
  throw Error(Err::fixture_incomplete, "unknown point role " + s);
}

std::string th_str(const std::optional<Threshold>& t, const char* none) { return t ? t->str() : none; }

}  // namespace

CubicFixture load_cubic_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::fixture_missing, "cannot open fixture " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Err::fixture_incomplete, path + ": " + e.what());
  }
  try {
    CubicFixture fx;
    fx.source = path;
    fx.discriminant = need(j, "discriminant", path).get<long>();
    fx.m1 = jrat(need(j, "M1", path));
    if (j.contains("assumed"))
      for (auto& s : j.at("assumed")) fx.assumed.push_back(s.get<std::string>());
    const json& w = need(j, "expected_window", path);
    fx.expected_lo = jthreshold(need(w, "lo", path));
    fx.expected_hi = jthreshold(need(w, "hi", path));
    if (j.contains("table_row")) {
      const json& t = j.at("table_row");
      fx.table_np = need(t, "Np", path).get<long>();
      fx.table_m = need(t, "m", path).get<long>();
      return fx;
    }
    const json& poly = need(j, "polynomial", path);
    if (!poly.is_array() || poly.size() != 4 || jint(poly[0]) != 1)
      throw Error(Err::fixture_incomplete, path + ": polynomial must be [1, a, b, c]");
    fx.poly = {jint(poly[1]), jint(poly[2]), jint(poly[3])};
    if (j.contains("basis")) {
      const json& b = j.at("basis");
      auto bn = need(b, "beta", path);
      fx.beta_num = {jint(bn[0]), jint(bn[1]), jint(bn[2])};
      fx.beta_den = jint(need(b, "den", path));
    }
    fx.prime = jprime(need(j, "weighted_prime", path));
    for (auto& pj : need(j, "points", path)) {
      CubicPoint pt;
      pt.name = need(pj, "name", path).get<std::string>();
      pt.role = jrole(need(pj, "role", path).get<std::string>());
      pt.coords = jcoords(need(pj, "coords", path));
      pt.abs_norm = jrat(need(pj, "abs_norm", path));
      for (auto& fj : need(pj, "factorization", path)) pt.factorization.push_back({jprime(fj), fj.at("exp").get<long>()});
      if (pj.contains("congruent")) pt.congruent = jcoords(pj.at("congruent"));
      if (pj.contains("quotient")) pt.quotient = {{jcoords(pj.at("quotient").at("num")), jcoords(pj.at("quotient").at("den"))}};
      fx.points.push_back(pt);
    }
    return fx;
  } catch (const json::exception& e) {
    throw Error(Err::fixture_incomplete, path + ": " + e.what());
  }
}

bool CubicReport::ok() const {
  for (auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

std::string CubicReport::str() const {
  std::ostringstream os;
  os << "disc " << discriminant << ": window " << window.str() << "\n";
  for (auto& c : checks) os << "  " << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  for (auto& a : assumed) os << "  assumed: " << a << "\n";
  return os.str();
}

CubicReport verify_cubic_fixture(const CubicFixture& fx) {
  CubicReport rep;
  rep.discriminant = fx.discriminant;
  rep.assumed = fx.assumed;
  auto add = [&](std::string name, bool ok, std::string detail) { rep.checks.push_back({std::move(name), ok, std::move(detail)}); };

  std::optional<Threshold> lo, hi;
  if (fx.table_np > 0) {
    // table-only row: c > NP * M1^(1/m)
    lo = Threshold{fx.m1 * pow_q(Rat(fx.table_np), fx.table_m), fx.table_m};
    add("lower endpoint from M1", true, "NP = " + std::to_string(fx.table_np) + ", m = " + std::to_string(fx.table_m) +
                                            ", M1 = " + rat_str(fx.m1) + " -> " + lo->str());
  } else {
    CubicField K(fx.poly[0], fx.poly[1], fx.poly[2], fx.beta_num, fx.beta_den);
    add("discriminant", K.basis_disc() == Rat(fx.discriminant),
        "basis " + rat_str(K.basis_disc()) + ", stated " + std::to_string(fx.discriminant));
    if (fx.beta_num == std::array<Int, 3>{Int(0), Int(0), Int(1)} && fx.beta_den == 1)
      add("power basis maximal", K.power_basis_maximal(), "Dedekind criterion at p^2 | disc f");
    const CubicPrimeIdeal& P = *fx.prime;
    add("weighted prime", is_prime_ideal(K, P), P.str() + " of norm " + int_str(P.norm()));
    Rat NP(P.norm());
    long m = 0;
    Rat m1_seen = 0;
    for (auto& pt : fx.points) {
      CubicElem xi = CubicElem::of(K, pt.coords[0], pt.coords[1], pt.coords[2]);
      Rat N = abs_q(norm_cubic(xi));
      add(pt.name + " norm", N == pt.abs_norm, "|N| = " + rat_str(N));
      bool fac_ok = true;
      Rat prod = 1;
      std::string fd;
      for (auto& f : pt.factorization) {
        if (!is_prime_ideal(K, f.prime)) fac_ok = false;
        long v = valuation(K, f.prime, xi);
        if (v != f.exponent) fac_ok = false;
        prod *= pow_q(Rat(f.prime.norm()), f.exponent);
        fd += f.prime.str() + "^" + std::to_string(v) + " ";
      }
      if (prod != N) fac_ok = false;
      add(pt.name + " factorization", fac_ok, fd + "(norm product " + rat_str(prod) + ")");
      // the quoted representative of the class; the minimum sits at xi
      CubicElem rep_xi = xi;
      if (pt.congruent) {
        rep_xi = CubicElem::of(K, (*pt.congruent)[0], (*pt.congruent)[1], (*pt.congruent)[2]);
        add(pt.name + " class", (xi - rep_xi).is_integral(), "differs from " + rep_xi.str() + " by an integer of O_K");
      }
      if (pt.quotient) {
        auto& [n, d] = *pt.quotient;
        CubicElem num = CubicElem::of(K, n[0], n[1], n[2]), den = CubicElem::of(K, d[0], d[1], d[2]);
        add(pt.name + " quotient form", rep_xi * den == num, rep_xi.str() + " * (" + den.str() + ") = " + num.str());
      }
      WeightedValue wv = weighted_value_cubic(xi, P);
      std::string wd = "f = " + wv.str();
      switch (pt.role) {
        case PointRole::c1: {
          bool ok = wv.exponent < 0;
          if (ok) {
            Threshold t{wv.coeff, -wv.exponent};  // coeff c^v < 1 iff c^{-v} > coeff
            if (!lo || *lo < t) lo = t;
            if (m == 0 || -wv.exponent < m) m = -wv.exponent;
            if (N > m1_seen) m1_seen = N;
            wd += ", < 1 iff c > " + t.str();
          }
          add(pt.name + " weighted lower bound", ok, wd);
          break;
        }
        case PointRole::upper: {
          bool ok = wv.exponent > 0;
          if (ok) {
            Threshold t{1 / wv.coeff, wv.exponent};
            if (!hi || t < *hi) hi = t;
            wd += ", < 1 iff c < " + t.str();
          }
          add(pt.name + " weighted upper bound", ok, wd);
          break;
        }
        case PointRole::satellite:
          // checked against the final window below
          break;
      }
    }
    if (m > 0) {
      Threshold stated{fx.m1 * pow_q(NP, m), m};
      add("lower endpoint formula", lo && *lo == stated && m1_seen == fx.m1,
          "NP (M1)^(1/m) with m = " + std::to_string(m) + " gives " + stated.str());
    }
    for (auto& pt : fx.points) {
      if (pt.role != PointRole::satellite) continue;
      CubicElem xi = CubicElem::of(K, pt.coords[0], pt.coords[1], pt.coords[2]);
      WeightedValue wv = weighted_value_cubic(xi, P);
      // no increase on the window: v <= 0 and the value stays < 1 for c > lo
      bool ok = wv.exponent <= 0;
      if (ok && wv.exponent == 0) ok = wv.coeff < 1;
      if (ok && wv.exponent < 0) ok = lo && !(*lo < Threshold{wv.coeff, -wv.exponent});
      add(pt.name + " weighted satellite", ok,
          "f = " + wv.str() + " <= |N| = " + rat_str(wv.coeff * pow_q(NP, wv.exponent)) + " on the window");
    }
  }
  WeightSet::Span sp{lo, hi};
  rep.window = intersect(WeightSet{{sp}}, WeightSet::all());
  bool lo_ok = (lo.has_value() == fx.expected_lo.has_value()) && (!lo || *lo == *fx.expected_lo);
  bool hi_ok = (hi.has_value() == fx.expected_hi.has_value()) && (!hi || *hi == *fx.expected_hi);
  add("window", lo_ok && hi_ok && !rep.window.empty(),
      "(" + th_str(lo, "1") + ", " + th_str(hi, "inf") + ") expected (" + th_str(fx.expected_lo, "1") + ", " +
          th_str(fx.expected_hi, "inf") + ")");
  return rep;
}

}  // namespace ewin
