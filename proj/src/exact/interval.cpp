#include "ewin/exact/interval.hpp"

#include "ewin/error.hpp"

#include <algorithm>

namespace ewin {

RatInterval::RatInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {
  if (hi < lo) throw Error(Err::precondition, "interval with lo > hi");
}

std::string RatInterval::str() const { return "[" + rat_str(lo) + ", " + rat_str(hi) + "]"; }

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RatInterval operator*(const Rat& s, const RatInterval& a) {
  if (sgn(s) >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains(Rat(0))) throw Error(Err::precondition, "interval division by an interval containing 0");
  return a * RatInterval(Rat(1) / b.hi, Rat(1) / b.lo);
}

RatInterval square(const RatInterval& a) {
  Rat l2 = a.lo * a.lo, h2 = a.hi * a.hi;
  if (sgn(a.lo) >= 0) return {l2, h2};
  if (sgn(a.hi) <= 0) return {h2, l2};
  return {Rat(0), std::max(l2, h2)};
}

RatInterval abs(const RatInterval& a) {
  if (sgn(a.lo) >= 0) return a;
  if (sgn(a.hi) <= 0) return -a;
  return {Rat(0), std::max(Rat(-a.lo), a.hi)};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RatInterval round_out(const RatInterval& a, const Int& den) {
  return {Rat(floor_q(a.lo * den), den), Rat(ceil_q(a.hi * den), den)};
}

RatInterval sqrt_enclosure(const Rat& q, const Int& den) {
  if (sgn(q) < 0) throw Error(Err::precondition, "sqrt of negative");
  Int d2 = den * den;
  Int lo = isqrt(floor_q(q * d2));
  Int n = ceil_q(q * d2);
  Int hi = isqrt(n);
  if (hi * hi < n) hi += 1;
  Rat l(lo, den), h(hi, den);
  l.canonicalize();
  h.canonicalize();
  return {l, h};
}

RatInterval sqrt_enclosure(const RatInterval& a, const Int& den) {
  Rat lo = sgn(a.lo) < 0 ? Rat(0) : a.lo;
  if (sgn(a.hi) < 0) throw Error(Err::precondition, "sqrt of negative interval");
  return {sqrt_enclosure(lo, den).lo, sqrt_enclosure(a.hi, den).hi};
}

}  // namespace ewin
