#include "ewin/ideals/obstruction.hpp"

#include "ewin/error.hpp"
#include "ewin/ideals/factor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace ewin {

double Threshold::approx() const { return std::pow(base.get_d(), 1.0 / static_cast<double>(index)); }

std::string Threshold::str() const {
  std::string b = base.get_den() == 1 ? base.get_num().get_str() : base.get_str();
  if (index == 1) return b;
  if (index == 2) return "sqrt(" + b + ")";
  return "(" + b + ")^(1/" + std::to_string(index) + ")";
}

bool Threshold::above(const Rat& c) const { return pow_q(c, index) < base; }

bool operator<(const Threshold& a, const Threshold& b) { return pow_q(a.base, b.index) < pow_q(b.base, a.index); }
bool operator==(const Threshold& a, const Threshold& b) { return pow_q(a.base, b.index) == pow_q(b.base, a.index); }
int cmp_one(const Threshold& t) { return cmp(t.base, 1) < 0 ? -1 : (t.base == 1 ? 0 : 1); }

namespace {

using OT = std::optional<Threshold>;

// lower endpoints: absent = 1
bool lo_less(const OT& a, const OT& b) {
  if (!a) return b && cmp_one(*b) > 0;
  if (!b) return cmp_one(*a) < 0;
  return *a < *b;
}
// upper endpoints: absent = inf
bool hi_less(const OT& a, const OT& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}
// lo < hi
bool span_ok(const OT& lo, const OT& hi) {
  if (!hi) return true;
  if (!lo) return cmp_one(*hi) > 0;
  return *lo < *hi && cmp_one(*hi) > 0;
}

void normalise(WeightSet& s) {
  for (auto& sp : s.spans)
    if (sp.lo && cmp_one(*sp.lo) <= 0) sp.lo.reset();
  std::vector<WeightSet::Span> v;
  for (auto& sp : s.spans)
    if (span_ok(sp.lo, sp.hi)) v.push_back(sp);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return lo_less(a.lo, b.lo); });
  std::vector<WeightSet::Span> out;
  for (auto& sp : v) {
    // merge when the next span starts strictly before the current one ends
    if (!out.empty() && lo_less(sp.lo, out.back().hi)) {
      if (hi_less(out.back().hi, sp.hi)) out.back().hi = sp.hi;
      continue;
    }
    out.push_back(sp);
  }
  s.spans = out;
}

}  // namespace

bool WeightSet::contains(const Rat& c) const {
  if (c <= 1) return false;
  for (auto& sp : spans) {
    bool above_lo = !sp.lo || pow_q(c, sp.lo->index) > sp.lo->base;
    bool below_hi = !sp.hi || sp.hi->above(c);
    if (above_lo && below_hi) return true;
  }
  return false;
}

std::string WeightSet::str() const {
  if (spans.empty()) return "empty";
  std::string out;
  for (auto& sp : spans) {
    if (!out.empty()) out += " u ";
    out += "(" + (sp.lo ? sp.lo->str() : std::string("1")) + ", " + (sp.hi ? sp.hi->str() : std::string("inf")) + ")";
  }
  return out;
}

WeightSet intersect(const WeightSet& a, const WeightSet& b) {
  WeightSet r;
  for (auto& x : a.spans)
    for (auto& y : b.spans) {
      WeightSet::Span s;
      s.lo = lo_less(x.lo, y.lo) ? y.lo : x.lo;
      s.hi = hi_less(x.hi, y.hi) ? x.hi : y.hi;
      r.spans.push_back(s);
    }
  normalise(r);
  return r;
}

WeightSet unite(const WeightSet& a, const WeightSet& b) {
  WeightSet r = a;
  r.spans.insert(r.spans.end(), b.spans.begin(), b.spans.end());
  normalise(r);
  return r;
}

ResidueRing::ResidueRing(const QuadElem& mu) : mu_(mu), m_(mu.m()) {
  const QuadField& K = field(m_);
  if (mu.is_zero()) throw Error(Err::precondition, "zero modulus");
  auto [x1, y1] = K.omega_coords(mu);
  auto [x2, y2] = K.omega_coords(mu * K.omega());
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), y1.get_mpz_t(), y2.get_mpz_t());
  Int det = x1 * y2 - x2 * y1;
  if (g == 0) throw Error(Err::precondition, "degenerate modulus");
  d_ = abs(g);
  Int sign = g < 0 ? Int(-1) : Int(1);
  b_ = sign * (s * x1 + t * x2);
  a_ = abs(Int(det / g));
  mpz_mod(b_.get_mpz_t(), b_.get_mpz_t(), a_.get_mpz_t());
}

std::pair<Int, Int> ResidueRing::key(const QuadElem& z) const {
  auto [u, v] = field(m_).omega_coords(z);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_mpz_t(), d_.get_mpz_t());
  v -= q * d_;
  u -= q * b_;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), a_.get_mpz_t());
  return {u, v};
}

QuadElem ResidueRing::element(const std::pair<Int, Int>& k) const { return field(m_).from_omega(k.first, k.second); }

std::vector<std::pair<Int, Int>> ResidueRing::all_keys() const {
  std::vector<std::pair<Int, Int>> out;
  for (Int v = 0; v < d_; ++v)
    for (Int u = 0; u < a_; ++u) out.emplace_back(u, v);
  return out;
}

WeightSet ClassReport::reachable() const {
  if (always) return WeightSet::all();
  WeightSet s;
  if (upper) s.spans.push_back({std::nullopt, upper->threshold});
  if (lower) s.spans.push_back({lower->threshold, std::nullopt});
  normalise(s);
  return s;
}

std::string ObstructionReport::summary() const {
  std::ostringstream o;
  o << "modulus " << modulus.str() << ", P = " << P.str() << ", f(mu) = " << f_modulus.str() << "\n";
  for (auto& c : classes) {
    o << "  class " << c.residue.str() << ": ";
    if (c.always) {
      o << "always, via " << c.witness_always->element.str();
    } else {
      if (c.upper) o << "c < " << c.upper->threshold->str() << " via " << c.upper->element.str() << "; ";
      if (c.lower) o << "c > " << c.lower->threshold->str() << (c.lower_exact ? " via " + c.lower->element.str() : " (search floor)");
      if (!c.upper && !c.lower) o << "unreachable";
    }
    o << "\n";
  }
  o << "  window inside " << window_bound.str() << (exact ? "" : " (budget floor used)");
  return o.str();
}

ObstructionReport residue_obstruction(const QuadElem& mu, const PrimeIdealQ& P, const Rat& bound) {
  const long m = mu.m();
  if (!class_number_one(m)) throw Error(Err::precondition, "class number is not one for m = " + std::to_string(m));
  const QuadField& K = field(m);
  if (!K.is_integral(mu)) throw Error(Err::not_integral, "modulus must be integral");
  ObstructionReport rep;
  rep.modulus = mu;
  rep.P = P;
  rep.bound = bound;
  const long w = valuation(mu, P);
  const Rat NP(P.norm());
  const Rat A = abs_q(mu.norm()) / pow_q(NP, w);
  rep.f_modulus = WeightedValue{A, w};
  ResidueRing R(mu);

  // residues of the unit group, generated by -1 and eps
  std::map<std::pair<Int, Int>, QuadElem> units;
  {
    std::vector<QuadElem> todo{K.elem(1)};
    units[R.key(K.elem(1))] = K.elem(1);
    for (size_t i = 0; i < todo.size(); ++i)
      for (const QuadElem& g : {K.elem(-1), K.unit()}) {
        QuadElem u = todo[i] * g;
        auto k = R.key(u);
        if (units.count(k)) continue;
        units[k] = u;
        todo.push_back(u);
      }
  }

  std::map<std::pair<Int, Int>, ClassReport> cls;
  for (auto& k : R.all_keys())
    if (!(k.first == 0 && k.second == 0)) cls[k].residue = R.element(k);

  // beta prime to P with |N beta| < bound, smallest norms first
  std::vector<QuadElem> betas;
  for (auto& b : K.small_norm_elements(bound))
    if (valuation(b, P) == 0) betas.push_back(b);
  std::stable_sort(betas.begin(), betas.end(),
                   [](const QuadElem& x, const QuadElem& y) { return abs_q(x.norm()) < abs_q(y.norm()); });

  const QuadElem pi = generator(P);
  const long vmax = w + static_cast<long>(R.size().get_si()) + 1;
  for (const QuadElem& beta : betas) {
    const Rat n = abs_q(beta.norm());
    QuadElem pv = beta;
    for (long v = 0; v <= vmax; pv = pv * pi, ++v) {
      if (v >= w && n >= A) break;
      Route rt;
      rt.v = v;
      rt.beta_norm = n;
      if (v < w) {
        Threshold t{n / A, w - v};
        if (cmp_one(t) <= 0) rt.kind = "always";
        else rt.kind = "lower", rt.threshold = t;
      } else if (v == w) {
        rt.kind = "always";
      } else {
        rt.kind = "upper";
        rt.threshold = Threshold{A / n, v - w};
      }
      for (auto& [uk, u] : units) {
        QuadElem alpha = u * pv;
        auto k = R.key(alpha);
        auto it = cls.find(k);
        if (it == cls.end()) continue;
        ClassReport& c = it->second;
        rt.element = alpha;
        c.routes.push_back(rt);
        if (rt.kind == "always") {
          if (!c.always) c.always = true, c.witness_always = rt;
        } else if (rt.kind == "upper") {
          if (!c.upper || *c.upper->threshold < *rt.threshold) c.upper = rt;
        } else if (!c.lower || *rt.threshold < *c.lower->threshold) {
          c.lower = rt;
        }
      }
    }
  }

  // unseen beta have |N beta| >= bound: their lower thresholds are at least the floor
  std::optional<Threshold> floor;
  for (long v = 0; v < w; ++v) {
    Threshold t{bound / A, w - v};
    if (!floor || t < *floor) floor = t;
  }
  rep.window_bound = WeightSet::all();
  for (auto& [k, c] : cls) {
    if (!c.always && floor && (!c.lower || *floor < *c.lower->threshold)) {
      Route fr;
      fr.kind = "lower";
      fr.threshold = *floor;
      c.lower = fr;
      c.lower_exact = false;
      rep.exact = false;
    }
    rep.window_bound = intersect(rep.window_bound, c.reachable());
    rep.classes.push_back(c);
  }
  return rep;
}

std::vector<PrimeIdealQ> primes_norm_pm1_mod8(long m, size_t count, const Int& search) {
  std::vector<PrimeIdealQ> out;
  for (auto& P : primes_up_to(m, search)) {
    Int r = P.norm() % 8;
    if (r == 1 || r == 7) out.push_back(P);
    if (out.size() == count) break;
  }
  return out;
}

}  // namespace ewin
