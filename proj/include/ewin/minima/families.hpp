#pragma once

#include "ewin/minima/minimum.hpp"

#include <utility>

namespace ewin::q69 {

// constants of Q(sqrt 69)
constexpr long kM = 69;
const QuadElem& eps();     // (25 + 3 sqrt 69) / 2
QuadElem c0();             // (4/23) sqrt 69, the M1 point
QuadElem eta_half();       // (5 + sqrt 69) / 2
QuadElem m1();             // 25/23
QuadElem m2();             // (165 - 15 sqrt 69) / 46
QuadElem kappa0();         // (-600 + 75 sqrt 69) / 23
QuadElem p0_weighted_norm_2();  // (94 - 10 sqrt 69) / 23
PrimeIdealQ p23();         // (23, sqrt 69)

// P_r = (eps^{-r} + c0, -c0) in embedding coordinates; P_0 is the M2 point
Point p_point(long r);
// the symbolic point of the weighted section, (-5 + (19/23) sqrt 69, -c0)
Point p0_weighted();

// Q_r = 1 + c0 + 1/(eps^n - 1) with n = r + 3 (the indexing of the published table)
long q_index(long r);
PointClass q_family(long r);
// |N(Q_r - eta_half)| at the representative
Rat q_family_norm(long r);
// M2 - |N(Q_r - eta_half)| = T (w - T), T = 1/(eps^n - 1), w = -1 + (15/23) sqrt 69
QuadElem q_family_error_term(long r);
// first-order term T w printed alongside the family
QuadElem q_family_error_first_order(long r);

// R_r = -5 + (19/23) sqrt 69 + (5 - (15/23) sqrt 69) / (eps^{r+1} + 1)
PointClass r_family(long r);
// (|N(R_r - eta_half)|, |N(R_r - 2)|)
std::pair<Rat, Rat> r_family_norms(long r);

}  // namespace ewin::q69
