#pragma once

#include "ewin/exact/quad.hpp"

#include <array>
#include <string>
#include <vector>

namespace ewin {

// rectangle of points x + y sqrt(m)
struct Box {
  RatInterval x, y;

  bool contains(const Box& o) const { return x.contains(o.x) && y.contains(o.y); }
  bool intersects(const Box& o) const { return x.intersects(o.x) && y.intersects(o.y); }
  bool contains(const Rat& px, const Rat& py) const { return x.contains(px) && y.contains(py); }
  Rat area() const { return x.width() * y.width(); }
  Box neg() const { return {-x, -y}; }
  Box shifted(const Rat& dx, const Rat& dy) const;
  // halves along the longer side (x on ties)
  std::array<Box, 2> split() const;
  std::string str() const;
  bool operator==(const Box& o) const { return x.lo == o.x.lo && x.hi == o.x.hi && y.lo == o.y.lo && y.hi == o.y.hi; }
  bool operator<(const Box& o) const;
};

Box make_box(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1);
// decimal endpoints read exactly, e.g. box_dec("-0.00085","0.00085","0.1739","0.1742")
Box box_dec(const char* x0, const char* x1, const char* y0, const char* y1);

// exact range of N(x + y sqrt m - gamma) over B
RatInterval box_norm_bound(long m, const Box& B, const QuadElem& gamma);

// xi -> unit * xi - theta
struct UnitAffineMap {
  QuadElem unit, theta;

  QuadElem apply(const QuadElem& xi) const { return unit * xi - theta; }
  std::string str() const;
};

// exact image rectangle of B
Box transform_box(const Box& B, const UnitAffineMap& f);

// integral gamma with B - gamma meeting the Pbd box for bound k (a superset)
std::vector<QuadElem> box_translates(long m, const Box& B, const Rat& k);

}  // namespace ewin
