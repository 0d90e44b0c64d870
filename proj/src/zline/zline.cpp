#include "ewin/zline/zline.hpp"

#include "ewin/error.hpp"

namespace ewin {

namespace {

void check(const ZWeightedNorm& f) {
  if (f.p < 2 || sgn(f.c) <= 0) throw Error(Err::precondition, "weighted norm on Z needs p >= 2, c > 0");
}

}  // namespace

Rat weighted_norm_z(const Int& a, const ZWeightedNorm& f) {
  check(f);
  if (a == 0) return 0;
  long v = vp(a, f.p);
  return abs_q(Rat(a)) * pow_q(f.c / Rat(f.p), v);
}

Rat weighted_norm_z(const Rat& a, const ZWeightedNorm& f) {
  check(f);
  if (sgn(a) == 0) return 0;
  long v = vp(a, f.p);
  return abs_q(a) * pow_q(f.c / Rat(f.p), v);
}

std::string ZMinimum::str() const { return kind == ZMinKind::infinite ? "infinite" : rat_str(value); }

ZMinimum minimum_z(const ZWeightedNorm& f) {
  check(f);
  ZMinimum r;
  Rat p(f.p);
  if (f.c < p) {
    r.kind = ZMinKind::infinite;
  } else if (f.c == p) {
    r.value = Rat(1, 2);
  } else {
    r.value = 1;
    r.approach = approach_fraction(f);
  }
  return r;
}

ZDivergence divergence_witness(const ZWeightedNorm& f, unsigned long n) {
  check(f);
  if (f.c >= Rat(f.p)) throw Error(Err::precondition, "divergence witness needs c < p");
  if (n == 0) throw Error(Err::precondition, "n must be positive");
  ZDivergence d;
  d.b = pow_z(f.p, n);
  d.a = f.p == 2 ? Int(pow_z(2, n - 1) - 1) : Int((d.b - 1) / 2);
  d.bound = Rat(d.a) / pow_q(f.c, static_cast<long>(n));
  return d;
}

ZApproach approach_fraction(const ZWeightedNorm& f) {
  check(f);
  Rat p(f.p);
  if (f.c <= p) throw Error(Err::precondition, "approach witness needs c > p");
  for (Int beta = 1;; ++beta) {
    if (beta % f.p == 0) continue;
    Int lo = floor_q(p * beta) + 1, hi = ceil_q(f.c * beta) - 1;
    for (Int alpha = lo; alpha <= hi; ++alpha)
      if (alpha % f.p != 0) return {alpha, beta};
  }
}

ZApproachTerm approach_witness(const ZWeightedNorm& f, const ZApproach& w, unsigned long n) {
  ZApproachTerm t;
  Int pn = pow_z(f.p, n), an = pow_z(w.alpha, n), bn = pow_z(w.beta, n);
  t.a = pn * bn;
  t.b = an + pn * bn;
  Rat q = make_rat(t.a, t.b);
  t.f_point = weighted_norm_z(q, f);
  t.f_shift = weighted_norm_z(Rat(q - 1), f);
  Rat cn = pow_q(f.c, static_cast<long>(n));
  t.lower = cn / (cn + Rat(pn));
  return t;
}

Int euclidean_step_z(const Int& a, const Int& b, const ZWeightedNorm& f) {
  check(f);
  if (b == 0) throw Error(Err::precondition, "b must be nonzero");
  if (f.c < Rat(f.p)) throw Error(Err::precondition, "Euclidean step needs c >= p");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw Error(Err::precondition, "a and b must be coprime");
  Rat fb = weighted_norm_z(b, f);
  Rat t = make_rat(a, b);
  Int q0 = round_q(t);
  // p | b: any q with |a - bq| < |b| works, the remainder is prime to p.
  // p does not divide b: of two consecutive remainders one is prime to p.
  Int q1 = Rat(q0) < t ? Int(q0 + 1) : Int(q0 - 1);
  for (const Int& q : {q0, q1})
    if (weighted_norm_z(Int(a - b * q), f) < fb) return q;
  throw Error(Err::no_solution, "no Euclidean quotient found");
}

Rat empirical_min_z(const Int& a, const Int& b, const ZWeightedNorm& f) {
  check(f);
  if (b == 0) throw Error(Err::precondition, "b must be nonzero");
  if (f.c < Rat(f.p)) throw Error(Err::precondition, "empirical minimum needs c >= p");
  // f(r) >= |r| when c >= p, so the search stops once |a - bq| reaches the best value
  Rat fb = weighted_norm_z(b, f);
  Int q0 = floor_q(make_rat(a, b));
  Rat best = weighted_norm_z(Int(a - b * q0), f);
  for (int dir : {-1, 1}) {
    for (Int q = q0 + dir;; q += dir) {
      Int r = a - b * q;
      if (Rat(abs(r)) >= best) break;
      Rat fr = weighted_norm_z(r, f);
      if (fr < best) best = fr;
    }
  }
  return best / fb;
}

}  // namespace ewin
