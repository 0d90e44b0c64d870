#include "ewin/ideals/factor.hpp"

#include "ewin/error.hpp"

#include <algorithm>
#include <set>

namespace ewin {

Rat IdealFactorization::norm() const {
  Rat r = 1;
  for (auto& [P, e] : factors) r *= pow_q(Rat(P.norm()), e);
  return r;
}

long IdealFactorization::exponent(const PrimeIdealQ& P) const {
  for (auto& [Q, e] : factors)
    if (Q == P) return e;
  return 0;
}

std::string IdealFactorization::str() const {
  if (factors.empty()) return "(1)";
  std::string s;
  for (auto& [P, e] : factors) s += P.str() + (e == 1 ? "" : "^" + std::to_string(e));
  return s;
}

std::vector<Int> prime_divisors(const Int& n0, const FactorBudget& b) {
  if (n0 == 0) throw Error(Err::precondition, "prime_divisors of 0");
  Int n = abs(n0);
  std::vector<Int> out;
  auto strip = [&](const Int& d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    }
  };
  strip(2);
  for (unsigned long d = 3; d <= b.trial_limit; d += 2) {
    if (Int(d) * d > n) break;
    strip(Int(d));
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw Error(Err::budget, "factorization budget exceeded on cofactor " + n.get_str());
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdealFactorization factor_principal(const QuadElem& xi, const FactorBudget& b) {
  if (xi.is_zero()) throw Error(Err::precondition, "factor_principal of 0");
  Rat n = xi.norm();
  std::set<Int> ps;
  for (const Int& z : {Int(n.get_num()), Int(n.get_den()), Int(xi.x().get_den()), Int(xi.y().get_den())})
    if (abs(z) > 1)
      for (auto& p : prime_divisors(z, b)) ps.insert(p);
  IdealFactorization f;
  for (auto& p : ps)
    for (auto& P : primes_above(xi.m(), p))
      if (long e = valuation(xi, P); e != 0) f.factors.emplace_back(P, e);
  std::sort(f.factors.begin(), f.factors.end(), [](auto& a, auto& c) { return a.first < c.first; });
  if (f.norm() != abs_q(n)) throw Error(Err::precondition, "factorization norm mismatch for " + xi.str());
  return f;
}

}  // namespace ewin
