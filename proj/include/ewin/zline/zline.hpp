#pragma once

#include "ewin/exact/rational.hpp"

#include <optional>
#include <string>

namespace ewin {

// f_{p,c}(a) = |a| (c/p)^{v_p(a)} on Z (and on Q)
struct ZWeightedNorm {
  Int p;
  Rat c;
};

Rat weighted_norm_z(const Int& a, const ZWeightedNorm& f);
Rat weighted_norm_z(const Rat& a, const ZWeightedNorm& f);

enum class ZMinKind { infinite, finite };

struct ZDivergence {
  Int a, b;
  Rat bound;  // |a| c^{-n} <= min_q f(a - bq) / f(b)
};

// alpha/beta with p < alpha/beta < c, p coprime to both
struct ZApproach {
  Int alpha, beta;
};

struct ZApproachTerm {
  Int a, b;
  Rat f_point;   // f(a/b)
  Rat f_shift;   // f(a/b - 1)
  Rat lower;     // c^n / (c^n + p^n) < f_point
};

struct ZMinimum {
  ZMinKind kind = ZMinKind::finite;
  Rat value;  // meaningful when finite
  std::optional<ZApproach> approach;  // c > p
  std::string str() const;
};

ZMinimum minimum_z(const ZWeightedNorm& f);
ZDivergence divergence_witness(const ZWeightedNorm& f, unsigned long n);
// smallest denominator beta, then smallest alpha
ZApproach approach_fraction(const ZWeightedNorm& f);
ZApproachTerm approach_witness(const ZWeightedNorm& f, const ZApproach& w, unsigned long n);

// q with f(a - bq) < f(b); requires gcd(a, b) = 1 and c >= p
Int euclidean_step_z(const Int& a, const Int& b, const ZWeightedNorm& f);

// exact min over q of f(a - bq) / f(b)
Rat empirical_min_z(const Int& a, const Int& b, const ZWeightedNorm& f);

}  // namespace ewin
