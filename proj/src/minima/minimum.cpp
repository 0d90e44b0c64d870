#include "ewin/minima/minimum.hpp"

#include "ewin/error.hpp"
#include "ewin/ideals/factor.hpp"

#include <algorithm>

namespace ewin {

Point Point::from_xy(const QuadElem& x, const QuadElem& y) {
  QuadElem ys = y * sqrt_m(x.m());
  return {x + ys, x - ys};
}

QuadElem Point::x() const { return Rat(1, 2) * (a + b); }

QuadElem Point::y() const {
  return Rat(1, 2 * m()) * ((a - b) * sqrt_m(m()));
}

std::string Point::str() const {
  if (in_field()) return a.str();
  return "(" + a.str() + ", " + b.str() + ")";
}

namespace {

Int round_real(const QuadElem& t) {
  if (t.is_rational()) return round_q(t.x());
  return (t + Rat(1, 2)).floor();
}

}  // namespace

QuadElem nearest_integral(const Point& p) {
  const QuadField& K = field(p.m());
  QuadElem x = p.x(), y = p.y();
  if (!K.half()) return K.elem(Rat(round_real(x)), Rat(round_real(y)));
  Int v = round_real(Rat(2) * y);
  Int u = round_real(x - Rat(v, 2));
  return K.elem(Rat(u) + Rat(v, 2), Rat(v, 2));
}

PointClass make_class(const Point& p) {
  QuadElem d = nearest_integral(p);
  return {p, p.minus(d), d};
}

std::vector<PointClass> orbit(const PointClass& xi, OrbitRange range) {
  const QuadElem& e = field(xi.representative.m()).unit_plus();
  std::vector<PointClass> out;
  for (long j = range.lo; j <= range.hi; ++j) out.push_back(make_class(xi.representative.times(pow(e, j))));
  return out;
}

long orbit_period(const PointClass& xi, long max_period) {
  if (!xi.reduced.in_field()) throw Error(Err::precondition, "orbit period needs a point of K");
  const QuadElem& e = field(xi.reduced.m()).unit_plus();
  const QuadField& K = field(xi.reduced.m());
  const QuadElem start = xi.reduced.a;
  QuadElem cur = start;
  for (long j = 1; j <= max_period; ++j) {
    cur = K.reduce(cur * e);
    // compare mod O_K: boundary points have two centred representatives
    if (K.is_integral(cur - start) || K.is_integral(cur + start)) return j;
  }
  throw Error(Err::budget, "orbit period exceeds " + std::to_string(max_period));
}

std::vector<Candidate> enumerate_candidates(const PointClass& xi, const Rat& k, std::optional<OrbitRange> range) {
  if (sgn(k) <= 0) throw Error(Err::precondition, "k must be positive");
  const long m = xi.representative.m();
  const QuadField& K = field(m);
  OrbitRange R = range ? *range : OrbitRange{0, xi.representative.in_field() ? orbit_period(xi) - 1 : 0};
  std::vector<Candidate> out;
  const QuadElem& e = K.unit_plus();
  for (long j = R.lo; j <= R.hi; ++j) {
    QuadElem ej = pow(e, j);
    PointClass cj = make_class(xi.representative.times(ej));
    for (const QuadElem& g : K.pbd_translates(cj.reduced.x(), cj.reduced.y(), k)) {
      Candidate c;
      c.j = j;
      c.eta = cj.reduced.minus(g);
      c.value = c.eta.abs_norm();
      c.witness = ej.inverse() * (cj.delta + g);
      out.push_back(std::move(c));
    }
  }
  return out;
}

const char* status_name(MinStatus s) {
  return s == MinStatus::attained ? "attained-below-k" : "no-candidate-below-k";
}

namespace {

// smaller |j| first, then j >= 0, then enumeration order
bool earlier(long j1, long j2) {
  if (std::labs(j1) != std::labs(j2)) return std::labs(j1) < std::labs(j2);
  return j1 > j2;
}

}  // namespace

MinimumResult euclidean_min(const PointClass& xi, const Rat& k, std::optional<OrbitRange> range) {
  MinimumResult res;
  res.value = QuadElem(xi.representative.m());
  res.witness = res.value;
  const Candidate* best = nullptr;
  auto cands = enumerate_candidates(xi, k, range);
  for (const auto& c : cands) {
    if (!best || c.value < best->value || (c.value == best->value && earlier(c.j, best->j))) best = &c;
  }
  if (!best) return res;
  res.status = MinStatus::attained;
  res.value = best->value;
  res.witness = best->witness;
  res.orbit_index = best->j;
  return res;
}

MinimumResult euclidean_min_weighted(const PointClass& xi, const WeightedNorm& f, const Rat& k) {
  const Point& rep = xi.representative;
  if (!rep.in_field()) throw Error(Err::precondition, "weighted minimum needs a point of K");
  if (sgn(f.c - 1) <= 0) throw Error(Err::precondition, "weight must exceed 1");
  const long m = rep.m();
  const QuadField& K = field(m);
  const Rat NP(f.ideal.norm());
  MinimumResult res;
  res.value = QuadElem(m);
  res.witness = QuadElem(m);
  if (K.is_integral(rep.a)) {
    res.status = MinStatus::attained;
    res.witness = rep.a;
    res.weighted = WeightedValue{0, 0};
    return res;
  }
  IdealFactorization F = factor_principal(rep.a);
  long v0 = F.exponent(f.ideal);
  Rat Nd = 1;
  for (auto& [P, e] : F.factors)
    if (e < 0) Nd *= pow_q(Rat(P.norm()), -e);

  // every f < k needs |N| < kk
  Rat kk = k;
  if (v0 < 0) {
    kk = k * pow_q(NP / f.c, v0);
    res.note = "constant valuation " + std::to_string(v0);
  } else if (f.c < NP) {
    long vmax = 0;
    while (pow_q(f.c, vmax + 1) < k * Nd) ++vmax;
    kk = k * pow_q(NP / f.c, vmax);
    res.note = "valuation at most " + std::to_string(vmax);
  }
  const Candidate* best = nullptr;
  Rat best_f;
  long best_v = 0;
  auto cands = enumerate_candidates(xi, kk);
  for (const auto& c : cands) {
    QuadElem eta = c.eta.a;
    long v = eta.is_zero() ? 0 : valuation(eta, f.ideal);
    Rat fv = c.value.x() * pow_q(f.c / NP, v);
    if (fv >= k) continue;
    if (!best || fv < best_f || (fv == best_f && earlier(c.j, best->j))) {
      best = &c;
      best_f = fv;
      best_v = v;
    }
  }
  if (!best) return res;
  res.status = MinStatus::attained;
  res.value = QuadElem(m, best_f);
  res.witness = best->witness;
  res.orbit_index = best->j;
  res.weighted = WeightedValue{best->value.x() / pow_q(NP, best_v), best_v};
  return res;
}

std::optional<QuadElem> two_translate_bound(const Point& p, const QuadElem& g1, const QuadElem& g2,
                                            const PrimeIdealQ& P) {
  QuadElem d = g1 - g2;
  if (!field(p.m()).is_integral(d)) throw Error(Err::not_integral, "translates must be integral");
  if (d.is_zero() || P.contains(d)) return std::nullopt;
  QuadElem n1 = p.minus(g1).abs_norm(), n2 = p.minus(g2).abs_norm();
  return n1 < n2 ? n2 : n1;
}

}  // namespace ewin
