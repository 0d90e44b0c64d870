#include "ewin/exact/field.hpp"

#include "ewin/error.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ewin {

QuadField::QuadField(long m, long cf_bound) : m_(m), half_(m % 4 == 1) {
  eps_ = fundamental_unit(m, cf_bound);
  eps_plus_ = eps_.norm() > 0 ? eps_ : eps_ * eps_;
}

QuadElem QuadField::omega() const {
  return half_ ? QuadElem(m_, Rat(1, 2), Rat(1, 2)) : QuadElem(m_, 0, 1);
}

QuadElem QuadField::from_omega(const Int& u, const Int& v) const {
  return QuadElem(m_, Rat(u), 0) + Rat(v) * omega();
}

bool QuadField::is_integral(const QuadElem& a) const {
  if (!half_) return a.x().get_den() == 1 && a.y().get_den() == 1;
  Rat x2 = 2 * a.x(), y2 = 2 * a.y();
  if (x2.get_den() != 1 || y2.get_den() != 1) return false;
  Int d = x2.get_num() - y2.get_num();
  return mpz_even_p(d.get_mpz_t());
}

std::pair<Int, Int> QuadField::omega_coords(const QuadElem& a) const {
  if (!is_integral(a)) throw Error(Err::not_integral, "not in O_K: " + a.str());
  if (!half_) return {a.x().get_num(), a.y().get_num()};
  Rat u = a.x() - a.y();
  return {u.get_num(), Rat(2 * a.y()).get_num()};
}

QuadElem QuadField::reduce(const QuadElem& xi) const {
  if (!half_) return QuadElem(m_, xi.x() - round_q(xi.x()), xi.y() - round_q(xi.y()));
  Int v = round_q(2 * xi.y());
  Rat y = xi.y() - Rat(v, 2);
  Rat x1 = xi.x() - Rat(v, 2);
  return QuadElem(m_, x1 - round_q(x1), y);
}

Rat QuadField::mu_squared(const Rat& k) const {
  return k * (eps_plus_.x() + 1) / 2;
}

namespace {

const Int kDen = Int(1) << 40;

RatInterval enc(const QuadElem& q) { return q.enclosure(kDen); }

}  // namespace

std::vector<QuadElem> QuadField::pbd_translates(const QuadElem& x, const QuadElem& y, const Rat& k) const {
  if (sgn(k) <= 0) throw Error(Err::precondition, "pbd bound must be positive");
  const Rat mu2 = mu_squared(k);
  const Rat q = mu2 / m_;  // bound on s^2
  const RatInterval X = enc(x), Y = enc(y);
  const RatInterval sq = sqrt_enclosure(q, kDen), mu = sqrt_enclosure(mu2, kDen);
  // rows: 2*gy in (2y - 2 sqrt q, 2y + 2 sqrt q)
  Int r0 = floor_q(2 * (Y.lo - sq.hi)) - 1, r1 = ceil_q(2 * (Y.hi + sq.hi)) + 1;
  std::vector<QuadElem> out;
  for (Int gy2 = r0; gy2 <= r1; ++gy2) {
    if (!half_ && mpz_odd_p(gy2.get_mpz_t())) continue;
    QuadElem s = y - Rat(gy2, 2);
    if ((s * s - QuadElem(m_, q)).sign() >= 0) continue;
    QuadElem ms2 = Rat(m_) * s * s;
    // |r^2 - m s^2| < k and r^2 < mu^2
    RatInterval A = enc(ms2);
    RatInterval band_hi = sqrt_enclosure(std::min(Rat(A.hi + k), Rat(mu.hi * mu.hi)), kDen);
    Rat lo2 = A.lo - k;
    Rat rmin = sgn(lo2) > 0 ? sqrt_enclosure(lo2, kDen).lo : Rat(0);
    Rat rmax = band_hi.hi;
    for (int side = -1; side <= 1; side += 2) {
      // gx = x - side * r with r in [rmin, rmax]
      RatInterval G = side < 0 ? RatInterval(X.lo + rmin, X.hi + rmax) : RatInterval(X.lo - rmax, X.hi - rmin);
      Int g0 = floor_q(2 * G.lo) - 1, g1 = ceil_q(2 * G.hi) + 1;
      for (Int gx2 = g0; gx2 <= g1; ++gx2) {
        // parity: gx2 = gy2 mod 2 for half bases, both even otherwise
        if (half_ ? mpz_odd_p(Int(gx2 - gy2).get_mpz_t()) : mpz_odd_p(gx2.get_mpz_t())) continue;
        QuadElem r = x - Rat(gx2, 2);
        if (side < 0 && r.sign() > 0) continue;  // r <= 0 belongs to this side
        if (side > 0 && r.sign() <= 0) continue;
        if ((r * r - QuadElem(m_, mu2)).sign() >= 0) continue;
        QuadElem n = r * r - ms2;
        if ((abs(n) - QuadElem(m_, k)).sign() >= 0) continue;
        out.emplace_back(m_, Rat(gx2, 2), Rat(gy2, 2));
      }
    }
  }
  return out;
}

std::vector<QuadElem> QuadField::pbd_translates(const QuadElem& xi, const Rat& k) const {
  return pbd_translates(QuadElem(m_, xi.x()), QuadElem(m_, xi.y()), k);
}

std::vector<QuadElem> QuadField::small_norm_elements(const Rat& bound) const {
  std::vector<QuadElem> out;
  for (auto& g : pbd_translates(QuadElem(m_), bound))
    if (!g.is_zero()) out.push_back(-g);
  return out;
}

const QuadField& field(long m) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<QuadField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<QuadField>(m);
  return *slot;
}

}  // namespace ewin
