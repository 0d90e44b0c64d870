#include "ewin/ideals/weighted.hpp"

#include "ewin/error.hpp"

namespace ewin {

std::string WeightedValue::str() const {
  if (exponent == 0) return rat_str(coeff);
  return rat_str(coeff) + "*c^" + std::to_string(exponent);
}

WeightedValue weighted_value(const QuadElem& xi, const PrimeIdealQ& P) {
  if (xi.is_zero()) return {Rat(0), 0};
  long v = valuation(xi, P);
  return {abs_q(xi.norm()) / pow_q(Rat(P.norm()), v), v};
}

Rat weighted_norm(const QuadElem& xi, const WeightedNorm& f) {
  if (sgn(f.c) <= 0) throw Error(Err::precondition, "weight must be positive");
  return weighted_value(xi, f.ideal).at(f.c);
}

Rat weighted_translate(const QuadElem& xi, const QuadElem& gamma, const WeightedNorm& f) {
  return weighted_norm(xi - gamma, f);
}

QuadElem combine_certificates(const QuadElem& xi, const QuadElem& gamma_r, const QuadElem& gamma_t,
                              const PrimeIdealQ& P) {
  // xi = alpha/beta in lowest terms: P | beta iff v_P(xi) < 0
  if (!xi.is_zero() && valuation(xi, P) < 0) return gamma_r;
  return gamma_t;
}

}  // namespace ewin
