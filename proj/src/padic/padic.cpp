#include "ewin/padic/padic.hpp"

#include "ewin/error.hpp"
#include "ewin/ideals/prime.hpp"
#include "ewin/minima/families.hpp"

#include <algorithm>
#include <limits>

namespace ewin {

namespace {

Int modp(const Int& x, const Int& mod) {
  Int r = x % mod;
  if (r < 0) r += mod;
  return r;
}

Int inv_mod(const Int& x, const Int& mod) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw Error(Err::precondition, "not a unit mod p^N: " + int_str(x));
  return r;
}

Int rat_mod(const Rat& q, const Int& p, const Int& mod) {
  if (q.get_den() % p == 0) throw Error(Err::precondition, "coefficient not p-integral: " + rat_str(q));
  return modp(Int(q.get_num() * inv_mod(q.get_den(), mod)), mod);
}

void same(const PadicQuadElem& x, const PadicQuadElem& y) {
  if (x.p != y.p || x.m != y.m || x.N != y.N) throw Error(Err::precondition, "p-adic operands differ in p, m or N");
}

long ilog(const Int& p, long n) {
  long e = 0;
  Int q = p;
  while (q <= n) {
    q *= p;
    ++e;
  }
  return e;
}

long vp_capped(const Int& z, const Int& p, long cap) {
  if (z == 0) return cap;
  return std::min(vp(z, p), cap);
}

}  // namespace

PadicQuadElem PadicQuadElem::make(const Int& p, long m, long N, const Int& a, const Int& b) {
  if (p < 3 || m % p.get_si() != 0) throw Error(Err::precondition, "p-adic module needs odd p dividing m");
  if (N < 1) throw Error(Err::precondition, "precision must be positive");
  PadicQuadElem r;
  r.p = p;
  r.m = m;
  r.N = N;
  Int mod = r.modulus();
  r.a = modp(a, mod);
  r.b = modp(b, mod);
  return r;
}

PadicQuadElem PadicQuadElem::of(const QuadElem& q, const Int& p, long N) {
  Int mod = pow_z(p, static_cast<unsigned long>(N));
  return make(p, q.m(), N, rat_mod(q.x(), p, mod), rat_mod(q.y(), p, mod));
}

long PadicQuadElem::val_pi() const {
  long cap = 2 * N;
  long va = a == 0 ? cap : 2 * vp(a, p);
  long vb = b == 0 ? cap : 2 * vp(b, p) + 1;
  return std::min({va, vb, cap});
}

PadicQuadElem PadicQuadElem::at_precision(long n) const {
  if (n > N) throw Error(Err::precision, "cannot raise p-adic precision");
  return make(p, m, n, a, b);
}

std::string PadicQuadElem::str() const {
  return int_str(a) + " + " + int_str(b) + "*sqrt(" + std::to_string(m) + ") mod " + int_str(p) + "^" +
         std::to_string(N);
}

PadicQuadElem operator+(const PadicQuadElem& x, const PadicQuadElem& y) {
  same(x, y);
  return PadicQuadElem::make(x.p, x.m, x.N, x.a + y.a, x.b + y.b);
}

PadicQuadElem operator-(const PadicQuadElem& x, const PadicQuadElem& y) {
  same(x, y);
  return PadicQuadElem::make(x.p, x.m, x.N, x.a - y.a, x.b - y.b);
}

PadicQuadElem operator-(const PadicQuadElem& x) { return PadicQuadElem::make(x.p, x.m, x.N, -x.a, -x.b); }

PadicQuadElem operator*(const PadicQuadElem& x, const PadicQuadElem& y) {
  same(x, y);
  return PadicQuadElem::make(x.p, x.m, x.N, x.a * y.a + x.m * x.b * y.b, x.a * y.b + x.b * y.a);
}

bool operator==(const PadicQuadElem& x, const PadicQuadElem& y) {
  return x.p == y.p && x.m == y.m && x.N == y.N && x.a == y.a && x.b == y.b;
}

PadicQuadElem pow(const PadicQuadElem& x, const Int& e) {
  if (e < 0) throw Error(Err::precondition, "negative p-adic power");
  PadicQuadElem r = PadicQuadElem::make(x.p, x.m, x.N, 1, 0), b = x;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

PadicQuadElem padic_log(const PadicQuadElem& u) {
  const Int& p = u.p;
  if (modp(u.a - 1, p) != 0) throw Error(Err::precondition, "log needs u = 1 mod pi");
  const long N = u.N;
  // for k > K every term has v_pi >= 2N + 1 (k - 2 v_p(k) grows past it)
  const long K = 2 * N + 3 + 2 * ilog(p, 8 * N + 8);
  long E = 0;
  for (long k = 1; k <= K; ++k) E = std::max(E, vp(Int(k), p));
  const long M = N + E;
  const Int mod = pow_z(p, static_cast<unsigned long>(M));
  PadicQuadElem x = PadicQuadElem::make(p, u.m, M, u.a - 1, u.b);
  PadicQuadElem pw = x, sum = PadicQuadElem::make(p, u.m, M, 0, 0);
  for (long k = 1; k <= K; ++k) {
    long e = vp(Int(k), p);
    Int pe = pow_z(p, static_cast<unsigned long>(e));
    if (pw.a % pe != 0 || pw.b % pe != 0) throw Error(Err::precision, "log term not divisible by p^v(k)");
    Int inv = inv_mod(Int(k) / pe, mod);
    Int ta = pw.a / pe * inv, tb = pw.b / pe * inv;
    if (k % 2 == 0) {
      ta = -ta;
      tb = -tb;
    }
    sum = sum + PadicQuadElem::make(p, u.m, M, ta, tb);
    pw = pw * x;
  }
  return sum.at_precision(N);
}

PadicExponent solve_exponent(const PadicQuadElem& base, const PadicQuadElem& target, long N) {
  if (base.p != target.p || base.m != target.m) throw Error(Err::precondition, "base and target in different fields");
  const long M0 = std::min(base.N, target.N);
  PadicQuadElem lb = padic_log(base.at_precision(M0)), lt = padic_log(target.at_precision(M0));
  if (lb.is_zero()) throw Error(Err::no_solution, "log of the base vanishes at this precision");
  const Int& p = base.p;
  Int mod = lb.modulus();
  Int nb = modp(Int(lb.a * lb.a - lb.m * lb.b * lb.b), mod);
  long vb = vp_capped(nb, p, M0);
  if (vb >= M0 || M0 - vb < N) throw Error(Err::precision, "precision too small for the quotient of logs");
  PadicQuadElem num = lt * lb.conj();
  Int pv = pow_z(p, static_cast<unsigned long>(vb));
  if (num.a % pv != 0 || num.b % pv != 0) throw Error(Err::no_solution, "exponent is not p-integral");
  Int red = pow_z(p, static_cast<unsigned long>(M0 - vb));
  Int unit_inv = inv_mod(Int(nb / pv), red);
  Int sa = modp(Int(num.a / pv * unit_inv), red), sb = modp(Int(num.b / pv * unit_inv), red);
  Int outmod = pow_z(p, static_cast<unsigned long>(N));
  if (sb % outmod != 0) throw Error(Err::no_solution, "exponent has a sqrt(m) component, not Galois-fixed");
  PadicExponent s;
  s.p = p;
  s.N = N;
  s.value = sa % outmod;
  Int v = s.value;
  for (long i = 0; i < N; ++i) {
    s.digits.push_back(Int(v % p).get_si());
    v /= p;
  }
  return s;
}

PadicExponent solve_exponent(const QuadElem& base, const QuadElem& target, const Int& p, long N) {
  return solve_exponent(PadicQuadElem::of(base, p, N + 3), PadicQuadElem::of(target, p, N + 3), N);
}

namespace q69 {

QuadElem alpha_e23() { return QuadElem(kM, Rat(-47, 22), Rat(-5, 22)); }

Divisibility divisibility_pattern(long r) {
  if (r < 1) throw Error(Err::precondition, "r must be >= 1");
  QuadElem d = r_family(r).representative.a - Rat(2);
  Divisibility out;
  out.valuation = d.is_zero() ? std::numeric_limits<long>::max() : valuation(d, p23());
  out.by_p = out.valuation >= 1;
  out.by_p_squared = out.valuation >= 2;
  return out;
}

bool r_family_congruence(long r) {
  QuadElem d = Rat(2) * r_family(r).representative.a - Rat(5 * r);
  return d.is_zero() || valuation(d, p23()) >= 1;
}

DeepWitness deep_divisibility_witness(long k, long N) {
  if (k < 0) throw Error(Err::precondition, "k must be >= 0");
  DeepWitness w;
  w.k = k;
  if (k == 0) {
    w.r = 1;
    w.valuation = divisibility_pattern(1).valuation;
    return w;
  }
  // eps^{s'} = eps^s mod pi^{2j+1} when s' = s mod 23^j; the congruence needs pi^{k+2}
  long j = (k + 2) / 2;
  if (N == 0) N = j;
  if (N < j) throw Error(Err::precision, "need at least " + std::to_string(j) + " digits of s");
  w.s = solve_exponent(eps(), alpha_e23(), Int(23), N);
  Int mod = pow_z(Int(23), static_cast<unsigned long>(j));
  Int r = w.s.value % mod - 1;
  if (r < 1) r += mod;
  if (!r.fits_slong_p()) throw Error(Err::budget, "witness index too large");
  w.r = r.get_si();
  w.valuation = divisibility_pattern(w.r).valuation;
  if (w.valuation < k) throw Error(Err::precision, "truncated exponent does not reach P^k");
  return w;
}

}  // namespace q69

}  // namespace ewin
