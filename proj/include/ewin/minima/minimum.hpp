#pragma once

#include "ewin/exact/field.hpp"
#include "ewin/ideals/weighted.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ewin {

// point of the plane R^2 = K (x) R, stored by its two real embeddings (a, b).
// b = conj(a) exactly when the point lies in K; symbolic points such as P0 have b != conj(a)
struct Point {
  QuadElem a, b;

  static Point of(const QuadElem& xi) { return {xi, xi.conj()}; }
  static Point from_xy(const QuadElem& x, const QuadElem& y);

  long m() const { return a.m(); }
  bool in_field() const { return b == a.conj(); }
  QuadElem x() const;  // (a + b) / 2
  QuadElem y() const;  // (a - b) / (2 sqrt m)
  QuadElem norm() const { return a * b; }
  QuadElem abs_norm() const { return abs(a * b); }

  Point minus(const QuadElem& g) const { return {a - g, b - g.conj()}; }
  Point plus(const QuadElem& g) const { return {a + g, b + g.conj()}; }
  Point times(const QuadElem& u) const { return {u * a, u.conj() * b}; }
  Point neg() const { return {-a, -b}; }
  // (x, y) -> (x, -y)
  Point swap() const { return {b, a}; }

  std::string str() const;
  bool operator==(const Point& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

struct PointClass {
  Point representative;
  Point reduced;
  QuadElem delta;  // representative - reduced, in O_K
};

PointClass make_class(const Point& p);
inline PointClass make_class(const QuadElem& xi) { return make_class(Point::of(xi)); }

// nearest integral element under the centred convention (ties toward zero)
QuadElem nearest_integral(const Point& p);

struct OrbitRange {
  long lo = 0, hi = 0;
};

// eps_plus^j * xi reduced, j in [lo, hi]
std::vector<PointClass> orbit(const PointClass& xi, OrbitRange range);
// smallest j >= 1 with eps_plus^j xi = ±xi mod O_K; only for points of K
long orbit_period(const PointClass& xi, long max_period = 200000);

struct Candidate {
  long j = 0;         // orbit index: eta = eps_plus^j xi - (translate)
  Point eta;          // the shifted orbit element inside the Pbd box
  QuadElem value;     // |N(eta)|
  QuadElem witness;   // gamma with representative - gamma = eps_plus^{-j} eta
};

// all candidates with |N| < k over the orbit range; for points of K the default range is one
// full period (complete), for symbolic points {0}
std::vector<Candidate> enumerate_candidates(const PointClass& xi, const Rat& k,
                                            std::optional<OrbitRange> range = std::nullopt);

enum class MinStatus { attained, none_below_k };
const char* status_name(MinStatus s);

struct MinimumResult {
  MinStatus status = MinStatus::none_below_k;
  QuadElem value;     // exact |N| (or f-value), rational for points of K
  QuadElem witness;   // translate of the representative
  long orbit_index = 0;
  std::optional<WeightedValue> weighted;  // coeff * c^exponent form of the f-minimum
  std::string note;

  bool attained() const { return status == MinStatus::attained; }
};

MinimumResult euclidean_min(const PointClass& xi, const Rat& k, std::optional<OrbitRange> range = std::nullopt);

// weighted minimum at a point of K; c > 1 rational
MinimumResult euclidean_min_weighted(const PointClass& xi, const WeightedNorm& f, const Rat& k);

// two-translate bound: if P does not divide g1 - g2 then some f-value is at most
// max(|N(P - g1)|, |N(P - g2)|) whenever c >= NP
std::optional<QuadElem> two_translate_bound(const Point& p, const QuadElem& g1, const QuadElem& g2,
                                            const PrimeIdealQ& P);

}  // namespace ewin
