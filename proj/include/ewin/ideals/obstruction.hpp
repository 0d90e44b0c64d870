#pragma once

#include "ewin/ideals/weighted.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ewin {

// base^(1/index), base > 0, index >= 1; compared exactly through powers
struct Threshold {
  Rat base;
  long index = 1;

  double approx() const;
  std::string str() const;
  // c < this, for rational c > 0
  bool above(const Rat& c) const;
};
bool operator<(const Threshold& a, const Threshold& b);
inline bool operator>(const Threshold& a, const Threshold& b) { return b < a; }
bool operator==(const Threshold& a, const Threshold& b);
// threshold versus 1
int cmp_one(const Threshold& t);

// finite union of open intervals (lo, hi) in (1, inf); lo absent = 1, hi absent = inf
struct WeightSet {
  struct Span {
    std::optional<Threshold> lo, hi;
  };
  std::vector<Span> spans;

  static WeightSet all() { return {{Span{}}}; }
  static WeightSet none() { return {}; }
  bool empty() const { return spans.empty(); }
  bool contains(const Rat& c) const;
  std::string str() const;
};
WeightSet intersect(const WeightSet& a, const WeightSet& b);
WeightSet unite(const WeightSet& a, const WeightSet& b);

// residues of O_K modulo a principal ideal (mu), via the Hermite form of the lattice
class ResidueRing {
 public:
  explicit ResidueRing(const QuadElem& mu);
  const QuadElem& modulus() const { return mu_; }
  Int size() const { return a_ * d_; }
  // canonical (u, v) with integral = u + v omega, 0 <= v < d, 0 <= u < a
  std::pair<Int, Int> key(const QuadElem& integral) const;
  QuadElem element(const std::pair<Int, Int>& key) const;
  std::vector<std::pair<Int, Int>> all_keys() const;

 private:
  QuadElem mu_;
  long m_;
  Int a_, b_, d_;  // lattice spanned by (a, 0) and (b, d)
};

struct Route {
  QuadElem element;   // the representative alpha = u pi^v beta
  long v = 0;         // valuation at P
  Rat beta_norm;      // |N beta|, beta prime to P
  std::string kind;   // "always", "upper", "lower"
  std::optional<Threshold> threshold;
};

struct ClassReport {
  QuadElem residue;
  bool always = false;
  std::optional<Route> upper;  // reachable for c < threshold
  std::optional<Route> lower;  // reachable for c > threshold
  std::optional<Route> witness_always;
  bool lower_exact = true;     // false: lower is the search-budget floor, not a found route
  std::vector<Route> routes;   // every route found for the class, in search order
  WeightSet reachable() const;
};

struct ObstructionReport {
  QuadElem modulus;
  PrimeIdealQ P;
  WeightedValue f_modulus;  // f(mu) = coeff * c^exponent
  Rat bound;
  std::vector<ClassReport> classes;  // nonzero classes
  WeightSet window_bound;            // the Euclidean window lies inside this set
  bool exact = true;                 // no class relied on a budget floor
  std::string summary() const;
};

// every nonzero class mod (mu) needs alpha with f(alpha) < f(mu); reports, per class, the weights
// for which such alpha exists among u pi^v beta with |N beta| < bound (beta prime to P)
ObstructionReport residue_obstruction(const QuadElem& mu, const PrimeIdealQ& P, const Rat& bound);

// prime ideals in (norm, residue) order with norm = +-1 mod 8
std::vector<PrimeIdealQ> primes_norm_pm1_mod8(long m, size_t count, const Int& search = 1000);

}  // namespace ewin
