#include "ewin/ideals/prime.hpp"

#include "ewin/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ewin {

const char* kind_name(PrimeKind k) {
  switch (k) {
    case PrimeKind::split: return "split";
    case PrimeKind::ramified: return "ramified";
    case PrimeKind::inert: return "inert";
  }
  return "?";
}

namespace {

Int mod(const Int& a, const Int& p) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

Int powmod(const Int& b, const Int& e, const Int& p) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r;
}

Int inv(const Int& a, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) throw Error(Err::precondition, "not invertible");
  return r;
}

// Tonelli-Shanks, p odd prime, a a nonzero square mod p
Int sqrt_mod(const Int& a0, const Int& p) {
  Int a = mod(a0, p);
  if (a == 0) return 0;
  Int q = p - 1;
  long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Int c = powmod(z, q, p), x = powmod(a, (q + 1) / 2, p), t = powmod(a, q, p);
  long mm = s;
  while (t != 1) {
    long i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = mod(tt * tt, p);
      ++i;
    }
    Int b = c;
    for (long j = 0; j < mm - i - 1; ++j) b = mod(b * b, p);
    x = mod(x * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    mm = i;
  }
  return std::min(x, Int(p - x));
}

bool half(long m) { return m % 4 == 1; }

PrimeIdealQ make(long m, const Int& p, PrimeKind k, const Int& r, const Int& w) {
  PrimeIdealQ P;
  P.m = m;
  P.p = p;
  P.kind = k;
  P.root = r;
  P.omega_res = w;
  return P;
}

}  // namespace

PrimeKind prime_kind(long m, const Int& p) {
  if (p == 2) {
    long r4 = m % 4, r8 = m % 8;
    if (r4 == 2 || r4 == 3) return PrimeKind::ramified;
    return r8 == 1 ? PrimeKind::split : PrimeKind::inert;
  }
  Int mm(m);
  if (mod(mm, p) == 0) return PrimeKind::ramified;
  return mpz_legendre(mm.get_mpz_t(), p.get_mpz_t()) == 1 ? PrimeKind::split : PrimeKind::inert;
}

std::vector<PrimeIdealQ> primes_above(long m, const Int& p) {
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw Error(Err::precondition, "primes_above: p not prime");
  PrimeKind k = prime_kind(m, p);
  if (k == PrimeKind::inert) return {make(m, p, k, 0, 0)};
  if (p == 2) {
    if (k == PrimeKind::ramified) {
      Int r = m % 2;
      return {make(m, p, k, r, r)};
    }
    return {make(m, p, k, 1, 0), make(m, p, k, 1, 1)};
  }
  Int r = sqrt_mod(Int(m), p);
  auto w = [&](const Int& root) { return half(m) ? mod((1 + root) * inv(2, p), p) : root; };
  if (k == PrimeKind::ramified) return {make(m, p, k, 0, w(0))};
  std::vector<PrimeIdealQ> v = {make(m, p, k, r, w(r)), make(m, p, k, p - r, w(Int(p - r)))};
  std::sort(v.begin(), v.end());
  return v;
}

PrimeIdealQ prime_ideal(long m, const Int& p, const Int& root) {
  auto v = primes_above(m, p);
  if (v.size() == 1) return v[0];
  // two split ideals: match the sqrt(m) root, or the omega residue when p = 2
  for (auto& P : v) {
    const Int& key = p == 2 ? P.omega_res : P.root;
    if (mod(key, p) == mod(root, p)) return P;
  }
  throw Error(Err::precondition, "no prime ideal above " + p.get_str() + " with root " + root.get_str());
}

bool PrimeIdealQ::operator<(const PrimeIdealQ& o) const {
  if (norm() != o.norm()) return norm() < o.norm();
  if (p != o.p) return p < o.p;
  return omega_res < o.omega_res;
}

bool PrimeIdealQ::contains(const QuadElem& b) const {
  auto [u, v] = field(m).omega_coords(b);
  if (kind == PrimeKind::inert) return mod(u, p) == 0 && mod(v, p) == 0;
  return mod(u + v * omega_res, p) == 0;
}

std::string PrimeIdealQ::str() const {
  std::string ps = p.get_str(), ms = std::to_string(m);
  if (kind == PrimeKind::inert) return "(" + ps + ")";
  if (p == 2 && half(m)) return "(2, omega-" + omega_res.get_str() + ")";
  if (root == 0) return "(" + ps + ", sqrt(" + ms + "))";
  return "(" + ps + ", sqrt(" + ms + ")-" + root.get_str() + ")";
}

long valuation(const QuadElem& xi, const PrimeIdealQ& P) {
  if (xi.is_zero()) throw Error(Err::precondition, "valuation of 0");
  Int d;
  mpz_lcm(d.get_mpz_t(), xi.x().get_den_mpz_t(), xi.y().get_den_mpz_t());
  QuadElem beta = Rat(d) * xi;
  long off = mpz_divisible_p(d.get_mpz_t(), P.p.get_mpz_t()) ? P.e() * vp(d, P.p) : 0;
  auto [u, v] = field(xi.m()).omega_coords(beta);
  auto vz = [&](const Int& z) { return z == 0 ? 1L << 40 : vp(z, P.p); };
  long k = std::min(vz(u), vz(v));
  Int pk = pow_z(P.p, k);
  QuadElem b0 = Rat(1, 1) / Rat(pk) * beta;
  long vb;
  if (P.kind == PrimeKind::inert) {
    vb = k;
  } else if (P.kind == PrimeKind::ramified) {
    vb = 2 * k + (P.contains(b0) ? 1 : 0);
  } else {
    vb = k + (P.contains(b0) ? vp(b0.norm(), P.p) : 0);
  }
  return vb - off;
}

QuadElem generator(const PrimeIdealQ& P) {
  const QuadField& K = field(P.m);
  if (P.kind == PrimeKind::inert) return K.elem(Rat(P.p));
  for (auto& b : K.small_norm_elements(Rat(P.norm() + 1)))
    if (abs_q(b.norm()) == Rat(P.norm()) && P.contains(b)) return b;
  throw Error(Err::no_solution, "prime " + P.str() + " is not principal");
}

std::vector<PrimeIdealQ> primes_up_to(long m, const Int& bound) {
  std::vector<PrimeIdealQ> out;
  for (Int p = 2; p <= bound; ++p) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) continue;
    for (auto& P : primes_above(m, p))
      if (P.norm() <= bound) out.push_back(P);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool class_number_one(long m) {
  static std::mutex mu;
  static std::map<long, bool> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  const QuadField& K = field(m);
  // Minkowski bound sqrt(D)/2
  Int bound = isqrt(Int(K.disc())) / 2 + 1;
  bool ok = true;
  for (auto& P : primes_up_to(m, bound)) {
    if (P.kind == PrimeKind::inert) continue;
    try {
      generator(P);
    } catch (const Error&) {
      ok = false;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[m] = ok;
  return ok;
}

}  // namespace ewin
