#include "ewin/exact/quad.hpp"

#include "ewin/error.hpp"

namespace ewin {

QuadElem::QuadElem(long m, Rat x, Rat y) : m_(m), x_(std::move(x)), y_(std::move(y)) {
  if (m < 2) throw Error(Err::precondition, "radicand must be >= 2");
  x_.canonicalize();
  y_.canonicalize();
}

void QuadElem::same_field(const QuadElem& o) const {
  if (o.m_ != m_) throw Error(Err::precondition, "mixed radicands");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  same_field(o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  same_field(o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  same_field(o);
  Rat nx = x_ * o.x_ + m_ * y_ * o.y_;
  Rat ny = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(nx);
  y_ = std::move(ny);
  return *this;
}

QuadElem QuadElem::inverse() const {
  Rat n = norm();
  if (sgn(n) == 0) throw Error(Err::precondition, "inverse of 0");
  return QuadElem(m_, x_ / n, -y_ / n);
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  same_field(o);
  return *this *= o.inverse();
}

int QuadElem::sign() const {
  int s = sgn(x_), t = sgn(y_);
  if (t == 0) return s;
  if (s == 0 || s == t) return t;
  // opposite signs: compare x^2 with m y^2
  Rat d = x_ * x_ - m_ * y_ * y_;
  return sgn(d) > 0 ? s : t;
}

RatInterval QuadElem::enclosure(const Int& den) const {
  if (sgn(y_) == 0) return RatInterval(x_);
  // scale so that |y| * error stays below 1/den
  Int ay = ceil_q(abs_q(y_)) + 1;
  RatInterval r = sqrt_enclosure(Rat(m_), den * ay * 2);
  RatInterval v = RatInterval(x_) + y_ * r;
  return round_out(v, den);
}

Int QuadElem::floor() const {
  if (sgn(y_) == 0) return floor_q(x_);
  for (Int den = Int(1) << 64;; den *= den) {
    RatInterval e = enclosure(den);
    Int a = floor_q(e.lo), b = floor_q(e.hi);
    if (a == b) return a;
    if (b == a + 1) return (*this - Rat(b)).sign() >= 0 ? b : a;
  }
}

std::string QuadElem::str() const {
  if (sgn(y_) == 0) return rat_str(x_);
  std::string s = sgn(x_) == 0 ? "" : rat_str(x_) + (sgn(y_) < 0 ? " - " : " + ");
  Rat ay = sgn(x_) == 0 ? y_ : abs_q(y_);
  return s + rat_str(ay) + "*sqrt(" + std::to_string(m_) + ")";
}

QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
QuadElem operator-(const QuadElem& a) { return QuadElem(a.m(), -a.x(), -a.y()); }
QuadElem operator*(const Rat& s, const QuadElem& a) { return QuadElem(a.m(), s * a.x(), s * a.y()); }
QuadElem operator+(const QuadElem& a, const Rat& s) { return QuadElem(a.m(), a.x() + s, a.y()); }
QuadElem operator-(const QuadElem& a, const Rat& s) { return QuadElem(a.m(), a.x() - s, a.y()); }

bool operator==(const QuadElem& a, const QuadElem& b) {
  return a.m() == b.m() && a.x() == b.x() && a.y() == b.y();
}

bool operator<(const QuadElem& a, const QuadElem& b) { return (a - b).sign() < 0; }

QuadElem abs(const QuadElem& q) { return q.sign() < 0 ? -q : q; }

QuadElem pow(const QuadElem& q, long e) {
  if (e < 0) return pow(q.inverse(), -e);
  QuadElem r(q.m(), 1), b = q;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

QuadElem sqrt_m(long m) { return QuadElem(m, 0, 1); }

std::pair<RatInterval, RatInterval> arch_values(const QuadElem& q, const Int& den) {
  return {abs(q.enclosure(den)), abs(q.conj().enclosure(den))};
}

double to_double(const QuadElem& q) {
  return q.enclosure(Int(1) << 64).mid().get_d();
}

QuadElem fundamental_unit(long m, long cf_bound) {
  if (!is_squarefree(m)) throw Error(Err::precondition, "fundamental_unit: m must be squarefree >= 2");
  const bool half = m % 4 == 1;
  // omega = (P + sqrt D) / Q
  const Int D(m), sD = isqrt(D);
  Int P = half ? 1 : 0, Q = half ? 2 : 1;
  // omega' = (1 - sqrt m)/2 or -sqrt m
  const QuadElem wc = half ? QuadElem(m, Rat(1, 2), Rat(-1, 2)) : QuadElem(m, 0, -1);
  Int h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (long i = 0; i < cf_bound; ++i) {
    Int a;
    if (Q > 0) {
      Int t = P + sD;
      mpz_fdiv_q(a.get_mpz_t(), t.get_mpz_t(), Q.get_mpz_t());
    } else {
      a = (QuadElem(m, Rat(P, Q), Rat(1, 1) / Rat(Q))).floor();
    }
    Int h = a * h1 + h2, k = a * k1 + k2;
    QuadElem cand = QuadElem(m, Rat(h)) - Rat(k) * wc;
    Rat n = cand.norm();
    if (n == 1 || n == -1) return cand;
    h2 = h1; h1 = h;
    k2 = k1; k1 = k;
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  throw Error(Err::budget, "fundamental_unit: continued fraction bound exceeded for m = " + std::to_string(m));
}

}  // namespace ewin
