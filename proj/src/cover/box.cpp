#include "ewin/cover/box.hpp"

#include "ewin/error.hpp"
#include "ewin/exact/field.hpp"

namespace ewin {

Box Box::shifted(const Rat& dx, const Rat& dy) const {
  return {RatInterval(x.lo + dx, x.hi + dx), RatInterval(y.lo + dy, y.hi + dy)};
}

std::array<Box, 2> Box::split() const {
  if (x.width() >= y.width()) {
    Rat c = x.mid();
    return {Box{RatInterval(x.lo, c), y}, Box{RatInterval(c, x.hi), y}};
  }
  Rat c = y.mid();
  return {Box{x, RatInterval(y.lo, c)}, Box{x, RatInterval(c, y.hi)}};
}

std::string Box::str() const { return x.str() + " x " + y.str(); }

bool Box::operator<(const Box& o) const {
  if (x.lo != o.x.lo) return x.lo < o.x.lo;
  if (y.lo != o.y.lo) return y.lo < o.y.lo;
  if (x.hi != o.x.hi) return x.hi < o.x.hi;
  return y.hi < o.y.hi;
}

Box make_box(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
  return {RatInterval(x0, x1), RatInterval(y0, y1)};
}

Box box_dec(const char* x0, const char* x1, const char* y0, const char* y1) {
  return make_box(parse_rat(x0), parse_rat(x1), parse_rat(y0), parse_rat(y1));
}

RatInterval box_norm_bound(long m, const Box& B, const QuadElem& g) {
  RatInterval X(B.x.lo - g.x(), B.x.hi - g.x()), Y(B.y.lo - g.y(), B.y.hi - g.y());
  return square(X) - Rat(m) * square(Y);
}

std::string UnitAffineMap::str() const { return "xi -> (" + unit.str() + ")*xi - (" + theta.str() + ")"; }

Box transform_box(const Box& B, const UnitAffineMap& f) {
  const long m = f.unit.m();
  const Rat& s = f.unit.x();
  const Rat& t = f.unit.y();
  // linear in independent x, y: interval evaluation is exact
  RatInterval X = s * B.x + Rat(m * t) * B.y;
  RatInterval Y = t * B.x + s * B.y;
  return {RatInterval(X.lo - f.theta.x(), X.hi - f.theta.x()), RatInterval(Y.lo - f.theta.y(), Y.hi - f.theta.y())};
}

std::vector<QuadElem> box_translates(long m, const Box& B, const Rat& k) {
  const QuadField& K = field(m);
  const Int den = Int(1) << 30;
  Rat mu = sqrt_enclosure(K.mu_squared(k), den).hi;
  Rat nu = sqrt_enclosure(K.mu_squared(k) / m, den).hi;
  Int y0 = floor_q(2 * (B.y.lo - nu)), y1 = ceil_q(2 * (B.y.hi + nu));
  Int x0 = floor_q(2 * (B.x.lo - mu)), x1 = ceil_q(2 * (B.x.hi + mu));
  std::vector<QuadElem> out;
  for (Int gy = y0; gy <= y1; ++gy)
    for (Int gx = x0; gx <= x1; ++gx) {
      QuadElem g(m, Rat(gx, 2), Rat(gy, 2));
      if (K.is_integral(g)) out.push_back(g);
    }
  return out;
}

}  // namespace ewin
