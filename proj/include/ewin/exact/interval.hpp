#pragma once

#include "ewin/exact/rational.hpp"

#include <string>

namespace ewin {

struct RatInterval {
  Rat lo, hi;

  RatInterval() = default;
  explicit RatInterval(const Rat& v) : lo(v), hi(v) {}
  RatInterval(const Rat& l, const Rat& h);

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const RatInterval& o) const { return !(o.hi < lo || hi < o.lo); }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }

  std::string str() const;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const Rat& s, const RatInterval& a);
RatInterval operator/(const RatInterval& a, const RatInterval& b);  // b must exclude 0
RatInterval square(const RatInterval& a);                            // tight, >= 0
RatInterval abs(const RatInterval& a);
RatInterval hull(const RatInterval& a, const RatInterval& b);

// outward rounding to multiples of 1/den
RatInterval round_out(const RatInterval& a, const Int& den);
// enclosure of sqrt(q) for q >= 0 with endpoints in (1/den)Z
RatInterval sqrt_enclosure(const Rat& q, const Int& den);
RatInterval sqrt_enclosure(const RatInterval& a, const Int& den);

}  // namespace ewin
