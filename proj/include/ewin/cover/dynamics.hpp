#pragma once

#include "ewin/cover/box.hpp"
#include "ewin/cover/cover.hpp"
#include "ewin/minima/families.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ewin {

// g after f
UnitAffineMap compose(const UnitAffineMap& g, const UnitAffineMap& f);
UnitAffineMap inverse(const UnitAffineMap& f);

// point of the plane with coordinates in Q(sqrt m), value x + y sqrt m
struct PlanePoint {
  QuadElem x, y;
  std::string str() const;
};

// theta / (unit - 1), the only point a contracting chain can trap
QuadElem fixed_element(const UnitAffineMap& f);
PlanePoint fixed_point(const UnitAffineMap& f);

// xi^(j) = value^(j), embedding j = 1 (sqrt m > 0) or 2 (conjugate)
struct LineConstraint {
  int embedding = 1;
  QuadElem value;

  LineConstraint shifted(const QuadElem& delta) const { return {embedding, value + delta}; }
  // the constraint on xi when f(xi) satisfies this one
  LineConstraint pulled_back(const UnitAffineMap& f) const;
  std::string str() const;
};

// throws Err::valuation unless |unit|_j > 1
LineConstraint trapped_point_line(const UnitAffineMap& f, int embedding);
// the point meeting one constraint of each embedding
PlanePoint intersect(const LineConstraint& a, const LineConstraint& b);

// image of source under the map lies in targets or in boxes covered at (k, mode)
struct InclusionRow {
  std::string label;
  std::vector<Box> source;
  UnitAffineMap map;
  std::vector<Box> targets;
};

struct RowVerdict {
  std::string label;
  bool ok = false;
  long in_targets = 0, covered = 0;  // source pieces settled each way
  std::optional<Box> offending;      // source piece left at the depth bound
  std::string str() const;
};

RowVerdict verify_inclusion_row(const InclusionRow& row, const WitnessSearch& ws, int max_depth = 40);
std::vector<RowVerdict> verify_inclusion_table(const std::vector<InclusionRow>& rows, long m, const Rat& k,
                                               const CoverMode& mode, int max_depth = 40);
// throws Err::row_failed on the first failing row
void require_rows(const std::vector<RowVerdict>& v);

namespace q69 {

// conjugate of eps, its inverse
QuadElem eps_bar();
// alpha: xi -> eps^-1 xi + 18 - 2 sqrt 69 and beta: xi -> eps xi - (18 + 2 sqrt 69)
UnitAffineMap alpha_map();
UnitAffineMap beta_map();

std::vector<InclusionRow> plain_inclusion_table();     // k = 7/8
std::vector<InclusionRow> weighted_inclusion_table();  // k = 99/100, two translates at (23, sqrt 69)

// exceptional point of S1 fixed by alpha and beta: (0, 4/23)
PlanePoint s0_fixed_point();
// from the forward S0 chain and the backward chain of P0 - 1: (1/2, 4/23 + 1/(2 sqrt 69))
PlanePoint plain_trapped_point();
// P0 of S2 for the weighted norm: -eps P0 + (23 + 3 sqrt 69) then beta lands in the S1 chain
PlanePoint weighted_trapped_point();

// declared neighbourhood of (0,0) for the weighted run, |x|, |y| <= 10^-6
Box origin_neighbourhood();

}  // namespace q69

}  // namespace ewin
