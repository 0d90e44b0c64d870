#pragma once

#include "ewin/exact/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ewin {

enum class PrimeKind { split, ramified, inert };
const char* kind_name(PrimeKind k);

// prime ideal of the maximal order of Q(sqrt m) above p.
// split/ramified: beta = u + v*omega lies in it iff u + v*omega_res = 0 mod p
struct PrimeIdealQ {
  long m = 2;
  Int p;
  PrimeKind kind = PrimeKind::inert;
  Int root;       // r^2 = m mod p (split/ramified)
  Int omega_res;  // omega mod the ideal (split/ramified)

  Int norm() const { return kind == PrimeKind::inert ? Int(p * p) : p; }
  int e() const { return kind == PrimeKind::ramified ? 2 : 1; }
  bool contains(const QuadElem& integral) const;
  std::string str() const;
  bool operator==(const PrimeIdealQ& o) const {
    return m == o.m && p == o.p && kind == o.kind && omega_res == o.omega_res;
  }
  bool operator<(const PrimeIdealQ& o) const;  // by norm, then p, then residue
};

PrimeKind prime_kind(long m, const Int& p);
std::vector<PrimeIdealQ> primes_above(long m, const Int& p);
// the ideal above p with the given sqrt(m) residue
PrimeIdealQ prime_ideal(long m, const Int& p, const Int& root = 0);

// p-adic valuation of xi != 0 at the prime ideal
long valuation(const QuadElem& xi, const PrimeIdealQ& P);

// an element generating P (class number one fields); searched in the Pbd box
QuadElem generator(const PrimeIdealQ& P);

// first primes of the field ordered by norm, up to norm_bound
std::vector<PrimeIdealQ> primes_up_to(long m, const Int& norm_bound);

// h(K) = 1 check: every prime below the Minkowski bound is principal
bool class_number_one(long m);

}  // namespace ewin
