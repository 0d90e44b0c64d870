#pragma once

#include "ewin/ideals/prime.hpp"

#include <utility>
#include <vector>

namespace ewin {

struct IdealFactorization {
  std::vector<std::pair<PrimeIdealQ, long>> factors;

  // product of Np^e
  Rat norm() const;
  long exponent(const PrimeIdealQ& P) const;
  std::string str() const;
};

struct FactorBudget {
  unsigned long trial_limit = 1000000;
};

// rational primes dividing a nonzero integer; throws budget when a composite cofactor survives
std::vector<Int> prime_divisors(const Int& n, const FactorBudget& b = {});

IdealFactorization factor_principal(const QuadElem& xi, const FactorBudget& b = {});

}  // namespace ewin
