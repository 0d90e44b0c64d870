#pragma once

#include "ewin/exact/quad.hpp"

#include <string>
#include <vector>

namespace ewin {

// a + b sqrt m in Z_p[sqrt m] with a, b mod p^N; p odd and p | m (ramified)
struct PadicQuadElem {
  Int p;
  long m = 0;
  long N = 0;
  Int a, b;

  static PadicQuadElem make(const Int& p, long m, long N, const Int& a, const Int& b);
  // coefficients must be p-integral
  static PadicQuadElem of(const QuadElem& q, const Int& p, long N);

  Int modulus() const { return pow_z(p, static_cast<unsigned long>(N)); }
  bool is_zero() const { return a == 0 && b == 0; }
  // pi-adic valuation, capped at 2N when zero at this precision
  long val_pi() const;
  PadicQuadElem conj() const { return make(p, m, N, a, -b); }
  PadicQuadElem at_precision(long n) const;  // n <= N
  std::string str() const;
};

PadicQuadElem operator+(const PadicQuadElem& x, const PadicQuadElem& y);
PadicQuadElem operator-(const PadicQuadElem& x, const PadicQuadElem& y);
PadicQuadElem operator-(const PadicQuadElem& x);
PadicQuadElem operator*(const PadicQuadElem& x, const PadicQuadElem& y);
bool operator==(const PadicQuadElem& x, const PadicQuadElem& y);
PadicQuadElem pow(const PadicQuadElem& x, const Int& e);

// log(1 + x) = sum (-1)^{k+1} x^k / k, for u = 1 mod pi; exact mod p^N.
// Terms are summed at N + max v_p(k) digits so the divisions by p lose nothing
PadicQuadElem padic_log(const PadicQuadElem& u);

struct PadicExponent {
  Int p;
  long N = 0;
  Int value;                // s mod p^N
  std::vector<long> digits;  // base-p digits of value, least significant first
};

// s in Z_p with base^s = target, from s = log target / log base.
// Throws no_solution if the quotient has a sqrt m component or is not p-integral
PadicExponent solve_exponent(const PadicQuadElem& base, const PadicQuadElem& target, long N);
PadicExponent solve_exponent(const QuadElem& base, const QuadElem& target, const Int& p, long N);

namespace q69 {

// -(47 + 5 sqrt 69) / 22
QuadElem alpha_e23();

struct Divisibility {
  bool by_p = false;         // P = (23, sqrt 69) divides the numerator of R_r - 2
  bool by_p_squared = false; // (23) = P^2 does
  long valuation = 0;
};

// exact rational computation on R_r - 2
Divisibility divisibility_pattern(long r);

// both congruences used in the mod-P argument hold for R_r: 2 R_r = 5r mod P
bool r_family_congruence(long r);

struct DeepWitness {
  long k = 0;
  long r = 0;
  long valuation = 0;  // exact v_P(R_r - 2), >= k
  PadicExponent s;
};

// r with P^k | numerator of R_r - 2, from digits of s = log alpha / log eps
DeepWitness deep_divisibility_witness(long k, long N = 0);

}  // namespace q69

}  // namespace ewin
