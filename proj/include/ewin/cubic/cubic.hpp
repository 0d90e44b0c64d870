#pragma once

#include "ewin/exact/rational.hpp"
#include "ewin/ideals/weighted.hpp"

#include <array>
#include <string>
#include <vector>

namespace ewin {

// K = Q(alpha), alpha a root of x^3 + a x^2 + b x + c; integral basis (1, alpha, beta) with
// beta = (b0 + b1 alpha + b2 alpha^2) / d
class CubicField {
 public:
  CubicField(const Int& a, const Int& b, const Int& c);
  CubicField(const Int& a, const Int& b, const Int& c, const std::array<Int, 3>& beta_num, const Int& beta_den);

  const std::array<Int, 3>& poly() const { return f_; }  // a, b, c
  Int poly_disc() const;
  // discriminant of the basis (1, alpha, beta)
  Rat basis_disc() const;
  bool irreducible() const;
  // Dedekind criterion at every p with p^2 | disc(f): is Z[alpha] maximal
  bool power_basis_maximal() const;
  const std::array<Int, 3>& beta_num() const { return bn_; }
  const Int& beta_den() const { return bd_; }
  std::string str() const;

 private:
  std::array<Int, 3> f_, bn_;
  Int bd_;
};

struct CubicElem {
  const CubicField* K = nullptr;
  std::array<Rat, 3> x;  // coordinates over 1, alpha, alpha^2

  static CubicElem of(const CubicField& K, const Rat& x0, const Rat& x1 = 0, const Rat& x2 = 0);
  bool is_zero() const { return sgn(x[0]) == 0 && sgn(x[1]) == 0 && sgn(x[2]) == 0; }
  // coordinates over (1, alpha, beta)
  std::array<Rat, 3> basis_coords() const;
  bool is_integral() const;
  std::string str() const;
};

CubicElem operator+(const CubicElem& u, const CubicElem& v);
CubicElem operator-(const CubicElem& u, const CubicElem& v);
CubicElem operator-(const CubicElem& u);
CubicElem operator*(const CubicElem& u, const CubicElem& v);
CubicElem operator*(const Rat& s, const CubicElem& u);
bool operator==(const CubicElem& u, const CubicElem& v);

// determinant of multiplication by xi
Rat norm_cubic(const CubicElem& xi);

// (p, alpha + a), (p, beta + a alpha + b) or (p) for degree 1, 2, 3
struct CubicPrimeIdeal {
  Int p;
  int degree = 1;
  Int a, b;

  Int norm() const { return pow_z(p, static_cast<unsigned long>(degree)); }
  std::string str() const;
  bool operator==(const CubicPrimeIdeal& o) const {
    return p == o.p && degree == o.degree && a == o.a && b == o.b;
  }
};

// generator other than p: alpha + a, beta + a alpha + b, or p
CubicElem ideal_generator(const CubicField& K, const CubicPrimeIdeal& P);
// the generators give a prime of norm p^degree (reduction of f mod p)
bool is_prime_ideal(const CubicField& K, const CubicPrimeIdeal& P);

// rational-arithmetic divisibility test for integral xi
bool divides(const CubicField& K, const CubicPrimeIdeal& P, const CubicElem& xi);
long valuation(const CubicField& K, const CubicPrimeIdeal& P, const CubicElem& xi);
// ramification index e(P/p)
long ramification(const CubicField& K, const CubicPrimeIdeal& P);

WeightedValue weighted_value_cubic(const CubicElem& xi, const CubicPrimeIdeal& P);
Rat weighted_norm_cubic(const CubicElem& xi, const CubicPrimeIdeal& P, const Rat& c);

}  // namespace ewin
