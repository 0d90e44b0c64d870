#pragma once

#include "ewin/exact/quad.hpp"

#include <utility>
#include <vector>

namespace ewin {

// Q(sqrt m) with its maximal order; integral basis {1, omega}
class QuadField {
 public:
  explicit QuadField(long m, long cf_bound = 200000);

  long m() const { return m_; }
  bool half() const { return half_; }  // m = 1 mod 4, omega = (1+sqrt m)/2
  long disc() const { return half_ ? m_ : 4 * m_; }

  const QuadElem& unit() const { return eps_; }
  const QuadElem& unit_plus() const { return eps_plus_; }  // norm +1
  int unit_norm() const { return eps_.norm() > 0 ? 1 : -1; }

  QuadElem elem(const Rat& x, const Rat& y = 0) const { return QuadElem(m_, x, y); }
  QuadElem omega() const;
  QuadElem from_omega(const Int& u, const Int& v) const;

  bool is_integral(const QuadElem& a) const;
  std::pair<Int, Int> omega_coords(const QuadElem& a) const;  // throws not_integral

  // centred representative mod O_K (nearest, ties toward zero); xi - reduce(xi) is integral
  QuadElem reduce(const QuadElem& xi) const;

  // mu^2 = k(t+1)/2 for eps_plus = t + u sqrt m
  Rat mu_squared(const Rat& k) const;

  // every gamma in O_K with |N(P - gamma)| < k inside the box |r| < mu, |s| < mu/sqrt m,
  // where P has real coordinates (x, y) given as elements of Q(sqrt m)
  std::vector<QuadElem> pbd_translates(const QuadElem& x, const QuadElem& y, const Rat& k) const;
  std::vector<QuadElem> pbd_translates(const QuadElem& xi, const Rat& k) const;

  // nonzero integral beta with |N(beta)| < bound, one representative per unit class up to
  // the Pbd box (the box may hold several associates)
  std::vector<QuadElem> small_norm_elements(const Rat& bound) const;

 private:
  long m_;
  bool half_;
  QuadElem eps_, eps_plus_;
};

const QuadField& field(long m);

}  // namespace ewin
