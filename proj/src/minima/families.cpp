#include "ewin/minima/families.hpp"

#include "ewin/error.hpp"

namespace ewin::q69 {

namespace {
QuadElem e(const Rat& x, const Rat& y = 0) { return QuadElem(kM, x, y); }
}  // namespace

const QuadElem& eps() { return field(kM).unit(); }
QuadElem c0() { return e(0, Rat(4, 23)); }
QuadElem eta_half() { return e(Rat(5, 2), Rat(1, 2)); }
QuadElem m1() { return e(Rat(25, 23)); }
QuadElem m2() { return e(Rat(165, 46), Rat(-15, 46)); }
QuadElem kappa0() { return e(Rat(-600, 23), Rat(75, 23)); }
QuadElem p0_weighted_norm_2() { return e(Rat(94, 23), Rat(-10, 23)); }
PrimeIdealQ p23() { return prime_ideal(kM, 23); }

Point p_point(long r) { return {pow(eps(), -r) + c0(), -c0()}; }

Point p0_weighted() { return {e(-5, Rat(19, 23)), -c0()}; }

long q_index(long r) { return r + 3; }

namespace {

QuadElem q_T(long r) {
  if (r < -1) throw Error(Err::precondition, "Q_r needs r >= -1");
  return (pow(eps(), q_index(r)) - Rat(1)).inverse();
}

QuadElem q_rep(long r) { return e(1) + c0() + q_T(r); }

QuadElem q_w() { return e(-1, Rat(15, 23)); }

QuadElem r_rep(long r) {
  if (r < 1) throw Error(Err::precondition, "R_r needs r >= 1");
  return e(-5, Rat(19, 23)) + e(5, Rat(-15, 23)) * (pow(eps(), r + 1) + Rat(1)).inverse();
}

}  // namespace

PointClass q_family(long r) { return make_class(q_rep(r)); }

Rat q_family_norm(long r) { return abs_q((q_rep(r) - eta_half()).norm()); }

QuadElem q_family_error_term(long r) {
  QuadElem T = q_T(r);
  return T * (q_w() - T);
}

QuadElem q_family_error_first_order(long r) { return q_T(r) * q_w(); }

PointClass r_family(long r) { return make_class(r_rep(r)); }

std::pair<Rat, Rat> r_family_norms(long r) {
  QuadElem R = r_rep(r);
  return {abs_q((R - eta_half()).norm()), abs_q((R - e(2)).norm())};
}

}  // namespace ewin::q69
