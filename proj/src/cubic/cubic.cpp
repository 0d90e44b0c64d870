#include "ewin/cubic/cubic.hpp"

#include "ewin/error.hpp"

#include <algorithm>
#include <sstream>

namespace ewin {

namespace {

// polynomials over F_p, coefficients low to high, trimmed
using Poly = std::vector<long>;

long md(long x, long p) {
  x %= p;
  return x < 0 ? x + p : x;
}

long md(const Int& x, long p) { return md(Int(x % p).get_si(), p); }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long inv_p(long x, long p) {
  long r = 1, b = md(x, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly pmul(const Poly& f, const Poly& g, long p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) r[i + j] = md(r[i + j] + f[i] * g[j], p);
  trim(r);
  return r;
}

// quotient and remainder, g nonzero
std::pair<Poly, Poly> pdivmod(Poly f, const Poly& g, long p) {
  trim(f);
  Poly q;
  if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, 0);
  long li = inv_p(g.back(), p);
  while (!f.empty() && f.size() >= g.size()) {
    size_t s = f.size() - g.size();
    long k = f.back() * li % p;
    q[s] = k;
    for (size_t i = 0; i < g.size(); ++i) f[s + i] = md(f[s + i] - k * g[i], p);
    trim(f);
  }
  trim(q);
  return {q, f};
}

Poly pgcd(Poly f, Poly g, long p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = pdivmod(f, g, p).second;
    f = g;
    g = r;
  }
  if (!f.empty()) {
    long li = inv_p(f.back(), p);
    for (auto& c : f) c = c * li % p;
  }
  return f;
}

std::vector<long> roots_mod(const Poly& f, long p) {
  std::vector<long> r;
  for (long x = 0; x < p; ++x) {
    long v = 0;
    for (size_t i = f.size(); i-- > 0;) v = md(v * x + f[i], p);
    if (v == 0) r.push_back(x);
  }
  return r;
}

Poly f_mod(const CubicField& K, long p) {
  auto& f = K.poly();
  Poly r{md(f[2], p), md(f[1], p), md(f[0], p), 1};
  trim(r);
  return r;
}

// distinct monic irreducible factors with multiplicity; degree <= 3 so root finding suffices
std::vector<std::pair<Poly, int>> factor_mod(Poly f, long p) {
  std::vector<std::pair<Poly, int>> out;
  for (long r : roots_mod(f, p)) {
    Poly lin{md(-r, p), 1};
    int e = 0;
    for (;;) {
      auto [q, rem] = pdivmod(f, lin, p);
      if (!rem.empty()) break;
      f = q;
      ++e;
    }
    out.push_back({lin, e});
  }
  if (f.size() > 1) out.push_back({f, 1});
  return out;
}

long small_prime(const Int& p) {
  if (!p.fits_slong_p() || p > 3037000499L) throw Error(Err::precondition, "prime too large: " + int_str(p));
  return p.get_si();
}

}  // namespace

CubicField::CubicField(const Int& a, const Int& b, const Int& c) : CubicField(a, b, c, {Int(0), Int(0), Int(1)}, 1) {}

CubicField::CubicField(const Int& a, const Int& b, const Int& c, const std::array<Int, 3>& beta_num,
                       const Int& beta_den)
    : f_{a, b, c}, bn_(beta_num), bd_(beta_den) {
  if (bn_[2] == 0 || bd_ == 0) throw Error(Err::precondition, "beta must involve alpha^2");
  if (!irreducible()) throw Error(Err::precondition, "defining polynomial is reducible: " + str());
}

Int CubicField::poly_disc() const {
  const Int &a = f_[0], &b = f_[1], &c = f_[2];
  return a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
}

Rat CubicField::basis_disc() const {
  Rat s = make_rat(bn_[2], bd_);
  return Rat(poly_disc()) * s * s;
}

bool CubicField::irreducible() const {
  // monic cubic: reducible iff an integer root divides c
  const Int& c = f_[2];
  auto is_root = [&](const Int& x) { return x * x * x + f_[0] * x * x + f_[1] * x + c == 0; };
  if (c == 0) return false;
  Int n = abs(c);
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    for (const Int& t : {d, Int(n / d)})
      if (is_root(t) || is_root(Int(-t))) return false;
  }
  return true;
}

bool CubicField::power_basis_maximal() const {
  Int D = abs(poly_disc());
  for (Int q = 2; q * q <= D; ++q) {
    if (D % q != 0) continue;
    int e = 0;
    while (D % q == 0) {
      D /= q;
      ++e;
    }
    if (e < 2) continue;
    long p = small_prime(q);
    // Dedekind: f = g h + p F with g the radical of f mod p; maximal at p iff gcd(F, g, h) = 1 mod p
    auto fac = factor_mod(f_mod(*this, p), p);
    Poly g{1}, h{1};
    for (auto& [gi, ei] : fac) {
      g = pmul(g, gi, p);
      for (int k = 1; k < ei; ++k) h = pmul(h, gi, p);
    }
    // integer lifts: coefficients in [0, p)
    std::vector<Int> gh(4, 0);
    for (size_t i = 0; i < g.size(); ++i)
      for (size_t j = 0; j < h.size(); ++j) gh[i + j] += Int(g[i]) * Int(h[j]);
    std::array<Int, 4> fz{f_[2], f_[1], f_[0], Int(1)};
    Poly F;
    for (int i = 0; i < 4; ++i) {
      Int t = fz[i] - gh[i];
      if (t % p != 0) throw Error(Err::precondition, "Dedekind lift failed");
      F.push_back(md(Int(t / p), p));
    }
    trim(F);
    Poly t = pgcd(pgcd(F, g, p), h, p);
    if (t.size() > 1) return false;
  }
  return true;
}

std::string CubicField::str() const {
  std::ostringstream os;
  os << "x^3 + (" << f_[0].get_str() << ")x^2 + (" << f_[1].get_str() << ")x + (" << f_[2].get_str() << ")";
  return os.str();
}

CubicElem CubicElem::of(const CubicField& K, const Rat& x0, const Rat& x1, const Rat& x2) {
  CubicElem e;
  e.K = &K;
  e.x = {x0, x1, x2};
  return e;
}

std::array<Rat, 3> CubicElem::basis_coords() const {
  const auto& bn = K->beta_num();
  Rat b0(bn[0]), b1(bn[1]), b2(bn[2]), d(K->beta_den());
  Rat t = x[2] / b2;
  return {x[0] - t * b0, x[1] - t * b1, t * d};
}

bool CubicElem::is_integral() const {
  for (auto& q : basis_coords())
    if (q.get_den() != 1) return false;
  return true;
}

std::string CubicElem::str() const {
  return "(" + rat_str(x[0]) + ") + (" + rat_str(x[1]) + ")a + (" + rat_str(x[2]) + ")a^2";
}

namespace {

void same(const CubicElem& u, const CubicElem& v) {
  if (u.K != v.K) throw Error(Err::precondition, "cubic elements from different fields");
}

}  // namespace

CubicElem operator+(const CubicElem& u, const CubicElem& v) {
  same(u, v);
  return CubicElem::of(*u.K, u.x[0] + v.x[0], u.x[1] + v.x[1], u.x[2] + v.x[2]);
}

CubicElem operator-(const CubicElem& u, const CubicElem& v) {
  same(u, v);
  return CubicElem::of(*u.K, u.x[0] - v.x[0], u.x[1] - v.x[1], u.x[2] - v.x[2]);
}

CubicElem operator-(const CubicElem& u) { return CubicElem::of(*u.K, -u.x[0], -u.x[1], -u.x[2]); }

CubicElem operator*(const CubicElem& u, const CubicElem& v) {
  same(u, v);
  std::array<Rat, 5> t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i + j] += u.x[i] * v.x[j];
  Rat a(u.K->poly()[0]), b(u.K->poly()[1]), c(u.K->poly()[2]);
  // alpha^3 = -a alpha^2 - b alpha - c, alpha^4 = (a^2 - b) alpha^2 + (ab - c) alpha + ac
  return CubicElem::of(*u.K, t[0] - c * t[3] + a * c * t[4], t[1] - b * t[3] + (a * b - c) * t[4],
                       t[2] - a * t[3] + (a * a - b) * t[4]);
}

CubicElem operator*(const Rat& s, const CubicElem& u) { return CubicElem::of(*u.K, s * u.x[0], s * u.x[1], s * u.x[2]); }

bool operator==(const CubicElem& u, const CubicElem& v) { return u.K == v.K && u.x == v.x; }

Rat norm_cubic(const CubicElem& xi) {
  const CubicField& K = *xi.K;
  std::array<std::array<Rat, 3>, 3> M;
  CubicElem col = xi, al = CubicElem::of(K, 0, 1, 0);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) M[i][j] = col.x[i];
    col = col * al;
  }
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

std::string CubicPrimeIdeal::str() const {
  std::string ps = int_str(p);
  auto sg = [](const Int& z) { return z < 0 ? " - " + int_str(Int(-z)) : " + " + int_str(z); };
  if (degree == 1) return "(" + ps + ", a" + sg(a) + ")";
  if (degree == 2) return "(" + ps + ", b" + (a == 0 ? std::string() : sg(a) + "a") + sg(b) + ")";
  return "(" + ps + ")";
}

namespace {

// index [O_K : Z[alpha]] = d / b2 must be prime to p for Kummer-Dedekind to apply
void check_index(const CubicField& K, long p) {
  Rat idx = abs_q(make_rat(K.beta_den(), K.beta_num()[2]));
  if (idx.get_den() != 1) throw Error(Err::precondition, "basis does not contain Z[alpha]");
  if (idx.get_num() % p == 0) throw Error(Err::precondition, "p divides the index of Z[alpha]");
}

// the factor of f mod p belonging to P, monic
Poly ideal_poly(const CubicField& K, const CubicPrimeIdeal& P, long p) {
  if (P.degree == 1) return {md(P.a, p), 1};
  if (P.degree == 2) {
    const auto& bn = K.beta_num();
    long d = md(K.beta_den(), p);
    Poly G{md(md(bn[0], p) + md(P.b, p) * d, p), md(md(bn[1], p) + md(P.a, p) * d, p), md(bn[2], p)};
    trim(G);
    if (G.size() != 3) throw Error(Err::precondition, "degree-2 generator does not reduce to a quadratic");
    long li = inv_p(G.back(), p);
    for (auto& c : G) c = c * li % p;
    return G;
  }
  return f_mod(K, p);
}

Poly elem_poly(const CubicElem& xi, long p) {
  Poly r;
  for (auto& q : xi.x) {
    if (q.get_den() % p == 0) throw Error(Err::not_integral, "element not p-integral: " + xi.str());
    r.push_back(md(Int(q.get_num() * Int(inv_p(md(Int(q.get_den()), p), p))), p));
  }
  trim(r);
  return r;
}

}  // namespace

CubicElem ideal_generator(const CubicField& K, const CubicPrimeIdeal& P) {
  if (P.degree == 1) return CubicElem::of(K, Rat(P.a), 1, 0);
  if (P.degree == 2) {
    const auto& bn = K.beta_num();
    Rat d(K.beta_den());
    return CubicElem::of(K, Rat(bn[0]) / d + Rat(P.b), Rat(bn[1]) / d + Rat(P.a), Rat(bn[2]) / d);
  }
  return CubicElem::of(K, Rat(P.p));
}

bool is_prime_ideal(const CubicField& K, const CubicPrimeIdeal& P) {
  if (P.degree < 1 || P.degree > 3) return false;
  long p = small_prime(P.p);
  if (mpz_probab_prime_p(P.p.get_mpz_t(), 30) == 0) return false;
  check_index(K, p);
  Poly f = f_mod(K, p), g = ideal_poly(K, P, p);
  if (!pdivmod(f, g, p).second.empty()) return false;
  // g must be irreducible: degree <= 3 means no roots for degree 2, 3
  if (P.degree >= 2 && !roots_mod(g, p).empty()) return false;
  return true;
}

bool divides(const CubicField& K, const CubicPrimeIdeal& P, const CubicElem& xi) {
  if (!xi.is_integral()) throw Error(Err::not_integral, "divides needs an integral element: " + xi.str());
  long p = small_prime(P.p);
  check_index(K, p);
  if (P.degree == 3) {
    for (auto& q : xi.basis_coords())
      if (q.get_num() % p != 0) return false;
    return true;
  }
  return pdivmod(elem_poly(xi, p), ideal_poly(K, P, p), p).second.empty();
}

namespace {

// v_P of a nonzero integral element: tau with tau P in pO_K and tau not in pO_K lowers v_P by one
long valuation_integral(const CubicField& K, const CubicPrimeIdeal& P, CubicElem eta) {
  long p = small_prime(P.p);
  Poly h = pdivmod(f_mod(K, p), ideal_poly(K, P, p), p).first;
  CubicElem tau = CubicElem::of(K, 0);
  for (size_t i = 0; i < h.size(); ++i) tau.x[i] = h[i];
  Rat inv_p_q = make_rat(1, p);
  long v = 0;
  for (;;) {
    CubicElem nx = inv_p_q * (eta * tau);
    if (!nx.is_integral()) return v;
    eta = nx;
    ++v;
    if (v > 100000) throw Error(Err::budget, "valuation loop did not terminate");
  }
}

}  // namespace

long ramification(const CubicField& K, const CubicPrimeIdeal& P) {
  return valuation_integral(K, P, CubicElem::of(K, Rat(P.p)));
}

long valuation(const CubicField& K, const CubicPrimeIdeal& P, const CubicElem& xi) {
  if (xi.is_zero()) throw Error(Err::valuation, "valuation of zero");
  long p = small_prime(P.p);
  check_index(K, p);
  Int n = 1;
  for (auto& q : xi.basis_coords()) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), q.get_den().get_mpz_t());
  long vn = vp(n, P.p);
  long v = valuation_integral(K, P, Rat(n) * xi);
  return vn == 0 ? v : v - vn * ramification(K, P);
}

WeightedValue weighted_value_cubic(const CubicElem& xi, const CubicPrimeIdeal& P) {
  WeightedValue w;
  if (xi.is_zero()) return w;  // coeff 0
  long v = valuation(*xi.K, P, xi);
  w.exponent = v;
  w.coeff = abs_q(norm_cubic(xi)) / pow_q(Rat(P.norm()), v);
  return w;
}

Rat weighted_norm_cubic(const CubicElem& xi, const CubicPrimeIdeal& P, const Rat& c) {
  if (sgn(c) <= 0) throw Error(Err::precondition, "weight must be positive");
  return weighted_value_cubic(xi, P).at(c);
}

}  // namespace ewin
