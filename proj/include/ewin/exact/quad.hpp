#pragma once

#include "ewin/exact/interval.hpp"
#include "ewin/exact/rational.hpp"

#include <string>
#include <utility>

namespace ewin {

// x + y*sqrt(m), as a real number with sqrt(m) > 0
class QuadElem {
 public:
  QuadElem() = default;
  explicit QuadElem(long m, Rat x = 0, Rat y = 0);

  long m() const { return m_; }
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }

  QuadElem conj() const { return QuadElem(m_, x_, -y_); }
  Rat norm() const { return x_ * x_ - m_ * y_ * y_; }
  Rat trace() const { return 2 * x_; }
  QuadElem inverse() const;

  // exact sign of the real value
  int sign() const;
  Int floor() const;
  RatInterval enclosure(const Int& den) const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  std::string str() const;

 private:
  void same_field(const QuadElem& o) const;
  long m_ = 2;
  Rat x_, y_;
};

QuadElem operator+(QuadElem a, const QuadElem& b);
QuadElem operator-(QuadElem a, const QuadElem& b);
QuadElem operator*(QuadElem a, const QuadElem& b);
QuadElem operator/(QuadElem a, const QuadElem& b);
QuadElem operator-(const QuadElem& a);
QuadElem operator*(const Rat& s, const QuadElem& a);
QuadElem operator+(const QuadElem& a, const Rat& s);
QuadElem operator-(const QuadElem& a, const Rat& s);

bool operator==(const QuadElem& a, const QuadElem& b);
inline bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }
bool operator<(const QuadElem& a, const QuadElem& b);
inline bool operator>(const QuadElem& a, const QuadElem& b) { return b < a; }
inline bool operator<=(const QuadElem& a, const QuadElem& b) { return !(b < a); }
inline bool operator>=(const QuadElem& a, const QuadElem& b) { return !(a < b); }

inline Rat norm(const QuadElem& q) { return q.norm(); }
inline QuadElem conj(const QuadElem& q) { return q.conj(); }
QuadElem abs(const QuadElem& q);
QuadElem pow(const QuadElem& q, long e);
QuadElem sqrt_m(long m);  // 0 + 1*sqrt(m)

// enclosures of |x + y sqrt m| and |x - y sqrt m|
std::pair<RatInterval, RatInterval> arch_values(const QuadElem& q, const Int& den = Int(1) << 64);

inline double to_double(const Rat& q) { return q.get_d(); }
double to_double(const QuadElem& q);

// smallest unit > 1 of the maximal order; cf_bound caps the period search
QuadElem fundamental_unit(long m, long cf_bound = 200000);

}  // namespace ewin
