#pragma once

#include "ewin/ideals/prime.hpp"

#include <string>

namespace ewin {

struct WeightedNorm {
  PrimeIdealQ ideal;
  Rat c;
};

// coefficient * c^exponent, the value of f at an element before fixing c
struct WeightedValue {
  Rat coeff;
  long exponent = 0;

  Rat at(const Rat& c) const { return coeff * pow_q(c, exponent); }
  std::string str() const;
};

// f_{P,c}(xi) = |N xi| (c/NP)^{v_P(xi)}
Rat weighted_norm(const QuadElem& xi, const WeightedNorm& f);
WeightedValue weighted_value(const QuadElem& xi, const PrimeIdealQ& P);

// value f(xi - gamma) for the plain division step at a point xi of K
Rat weighted_translate(const QuadElem& xi, const QuadElem& gamma, const WeightedNorm& f);

// Lenstra-style combination: given gamma_r good at weight r and gamma_t good at t (r < t),
// return the translate the interval argument uses at any s in [r, t]:
// P | denominator of xi -> gamma_r, otherwise gamma_t
QuadElem combine_certificates(const QuadElem& xi, const QuadElem& gamma_r, const QuadElem& gamma_t,
                              const PrimeIdealQ& P);

}  // namespace ewin
