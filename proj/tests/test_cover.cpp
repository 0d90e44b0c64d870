#include <doctest.h>

#include "ewin/cover/dynamics.hpp"
#include "ewin/cover/sets.hpp"
#include "ewin/cover/verify.hpp"
#include "ewin/error.hpp"

#include <random>

using namespace ewin;

namespace {

QuadElem q(const Rat& x, const Rat& y = 0) { return QuadElem(69, x, y); }

std::vector<Box> boxes_of(const std::vector<q69::NamedBox>& v) {
  std::vector<Box> out;
  for (auto& n : v) out.push_back(n.box);
  return out;
}

// corner oracle: N is monotone in |x - gx| and |y - gy| away from the axes
RatInterval corner_range(long m, const Box& B, const QuadElem& g) {
  Rat lo, hi;
  bool first = true;
  for (const Rat& x : {B.x.lo, B.x.hi})
    for (const Rat& y : {B.y.lo, B.y.hi}) {
      Rat n = (x - g.x()) * (x - g.x()) - m * (y - g.y()) * (y - g.y());
      if (first || n < lo) lo = n;
      if (first || n > hi) hi = n;
      first = false;
    }
  return {lo, hi};
}

const CoverCertificate& plain_cert() {
  static CoverCertificate c = [] {
    CoverOptions o;
    o.k = make_rat(7, 8);
    o.max_depth = 44;
    return cover(o);
  }();
  return c;
}

const CoverCertificate& weighted_cert() {
  static CoverCertificate c = [] {
    CoverOptions o;
    o.k = make_rat(99, 100);
    o.mode = CoverMode::weighted_at(prime_ideal(69, 23, 0));
    o.max_depth = 44;
    return cover(o);
  }();
  return c;
}

}  // namespace

TEST_CASE("box norm bound") {
  Box pt = make_box(Rat(1, 3), Rat(1, 3), Rat(1, 5), Rat(1, 5));
  QuadElem g = q(Rat(1, 2), Rat(1, 2));
  RatInterval r = box_norm_bound(69, pt, g);
  CHECK(r.is_point());
  CHECK(r.lo == (q(Rat(1, 3), Rat(1, 5)) - g).norm());
  // S0 against 0: N decreasing in y, |x| small
  RatInterval s0 = box_norm_bound(69, q69::S0(), q(0));
  CHECK(s0.lo > Rat(-21, 10));
  CHECK(s0.hi < -2);
  Box s0pos = make_box(0, q69::S0().x.hi, q69::S0().y.lo, q69::S0().y.hi);
  CHECK(corner_range(69, s0pos, q(0)).lo == s0.lo);
  RatInterval t = box_norm_bound(69, q69::T(), q(Rat(5, 2), Rat(1, 2)));
  CHECK(t.lo > -1);
  CHECK(t.hi < 0);
  CHECK(t.lo == corner_range(69, q69::T(), q(Rat(5, 2), Rat(1, 2))).lo);
}

TEST_CASE("box norm bound soundness on random points") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> d(-400, 400), den(1, 97);
  for (int i = 0; i < 1000; ++i) {
    Rat x0 = make_rat(d(gen), den(gen)), y0 = make_rat(d(gen), den(gen));
    Rat w = make_rat(std::abs(d(gen)) + 1, 100 * den(gen)), h = make_rat(std::abs(d(gen)) + 1, 300 * den(gen));
    Box B = make_box(x0, x0 + w, y0, y0 + h);
    QuadElem g = field(69).from_omega(d(gen) / 20, d(gen) / 40);
    RatInterval r = box_norm_bound(69, B, g);
    Rat px = x0 + w * make_rat(std::abs(d(gen)) % 101, 100), py = y0 + h * make_rat(std::abs(d(gen)) % 101, 100);
    CHECK(r.contains((q(px, py) - g).norm()));
    RatInterval c = corner_range(69, B, g);
    CHECK(r.contains(c));
  }
}

TEST_CASE("transform box") {
  UnitAffineMap id{q(1), q(0)};
  CHECK(transform_box(q69::S0(), id) == q69::S0());
  Box img = transform_box(q69::S0(), {q69::eps(), q(18, 2)});
  CHECK(box_dec("-0.012", "0.041", "0.172", "0.179").contains(img));
  // the enclosure of eps_bar S2 + (19 - 2 sqrt 69) is far wider than T
  Box img2 = transform_box(q69::S2(), {q69::eps_bar(), -q(19, -2)});
  CHECK(img2.intersects(q69::T()));
  CHECK_FALSE(q69::T().contains(img2));
  UnitAffineMap f = {q69::eps(), q(3, 1)};
  CHECK(compose(inverse(f), f).unit == q(1));
  CHECK(compose(inverse(f), f).theta.is_zero());
}

TEST_CASE("fixed points and trapped lines") {
  CHECK(fixed_element(q69::beta_map()) == q(0, Rat(4, 23)));
  CHECK(fixed_element(q69::alpha_map()) == q(0, Rat(4, 23)));
  PlanePoint f0 = q69::s0_fixed_point();
  CHECK(f0.x.is_zero());
  CHECK(f0.y == q(Rat(4, 23)));
  CHECK(fixed_element({q69::eps(), q(0)}).is_zero());
  CHECK_THROWS_AS(fixed_element({q(1), q(2)}), Error);

  LineConstraint fwd = trapped_point_line(q69::alpha_map(), 2);
  CHECK(fwd.value.conj() == q(0, Rat(-4, 23)));  // xi' = -(4/23) sqrt 69
  LineConstraint bwd = trapped_point_line(q69::beta_map(), 1).shifted(q(1));
  CHECK(bwd.value == q(1, Rat(4, 23)));
  PlanePoint p0 = q69::plain_trapped_point();
  CHECK(p0.x == q(Rat(1, 2)));
  CHECK(p0.y == q(Rat(4, 23), Rat(1, 138)));  // 4/23 + 1/(2 sqrt 69)
  CHECK(std::abs(to_double(p0.y) - 0.2341059) < 1e-7);
  CHECK(q69::T().contains(Rat(1, 2), Rat(2341, 10000)));
  try {
    trapped_point_line(q69::beta_map(), 2);
    FAIL("expected a valuation error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::valuation);
  }

  PlanePoint w0 = q69::weighted_trapped_point();
  CHECK(w0.x == q(Rat(-115, 46), Rat(15, 46)));
  CHECK(w0.y == q(Rat(1, 2), Rat(-5, 138)));  // (-5 + sqrt 69) / (2 sqrt 69)
  CHECK(std::abs(to_double(w0.x) - 0.20868169) < 1e-8);
  CHECK(std::abs(to_double(w0.y) - 0.19903536) < 1e-8);
}

TEST_CASE("cover with a huge bound") {
  CoverOptions o;
  o.k = 100;
  o.max_depth = 0;
  CoverCertificate c = cover(o);
  CHECK(c.exceptional.empty());
  CHECK(c.covered.size() == 1);
  CHECK(c.depth == 0);
  CHECK(verify_certificate(c.to_json()).sound);
  o.k = 0;
  CHECK_THROWS_AS(cover(o), Error);
}

TEST_CASE("plain covering at 7/8") {
  const CoverCertificate& c = plain_cert();
  CHECK(c.complete);
  CHECK_FALSE(c.exceptional.empty());
  auto U = lattice_copies(69, boxes_of(q69::plain_sets()), fundamental_region(69), false);
  for (auto& e : c.exceptional_boxes()) {
    CAPTURE(e.str());
    CHECK(covered_by_union(e, U));
  }
  Rat listed = q69::S0().area() + q69::S1().area() + q69::S2().area() + q69::T().area();
  CHECK(c.exceptional_area() < Rat(6, 5) * listed);
  // every box touches one of the sets
  bool hit_t = false, hit_s0 = false;
  for (auto& e : c.exceptional_boxes()) {
    hit_t |= e.intersects(q69::T());
    hit_s0 |= e.intersects(q69::S0());
  }
  CHECK(hit_t);
  CHECK(hit_s0);
}

TEST_CASE("plain inclusion table") {
  auto v = verify_inclusion_table(q69::plain_inclusion_table(), 69, make_rat(7, 8), CoverMode::plain());
  REQUIRE(v.size() == 8);
  for (auto& r : v) {
    CAPTURE(r.str());
    CHECK(r.ok);
  }
  CHECK_NOTHROW(require_rows(v));
  InclusionRow empty{"empty", {}, {q69::eps(), q(0)}, {}};
  WitnessSearch ws(69, make_rat(7, 8), CoverMode::plain());
  CHECK(verify_inclusion_row(empty, ws).ok);
  // a wrong target fails with an offending piece
  InclusionRow bad{"bad", {q69::S0()}, {q69::eps(), q(18, 2)}, {q69::T()}};
  RowVerdict b = verify_inclusion_row(bad, ws, 6);
  CHECK_FALSE(b.ok);
  CHECK(b.offending.has_value());
  CHECK_THROWS_AS(require_rows({b}), Error);
}

TEST_CASE("weighted covering at 99/100") {
  const CoverCertificate& c = weighted_cert();
  CHECK(c.complete);
  auto sets = boxes_of(q69::weighted_sets());
  sets.push_back(q69::origin_neighbourhood());
  auto U = lattice_copies(69, sets, fundamental_region(69), false);
  for (auto& e : c.exceptional_boxes()) {
    CAPTURE(e.str());
    CHECK(covered_by_union(e, U));
  }
  auto v = verify_inclusion_table(q69::weighted_inclusion_table(), 69, make_rat(99, 100),
                                  CoverMode::weighted_at(prime_ideal(69, 23, 0)));
  REQUIRE(v.size() == 6);
  for (auto& r : v) {
    CAPTURE(r.str());
    CHECK(r.ok);
  }
  // P0 values
  PlanePoint p = q69::weighted_trapped_point();
  QuadElem s = sqrt_m(69);
  QuadElem xi = p.x + p.y * s, xc = p.x - p.y * s;
  auto absn = [&](const QuadElem& g) { return abs((xi - g) * (xc - g.conj())); };
  CHECK(absn(q(2)) == q(Rat(94, 23), Rat(-10, 23)));
  CHECK(absn(q(Rat(5, 2), Rat(1, 2))) == q(Rat(-600, 23), Rat(75, 23)));
}

TEST_CASE("independent verifier") {
  for (const CoverCertificate* c : {&plain_cert(), &weighted_cert()}) {
    std::string js = c->to_json();
    CertificateCheck r = verify_certificate(js);
    CAPTURE(r.str());
    CHECK(r.sound);
    CHECK(r.complete);
    CHECK(r.covered == static_cast<long>(c->covered.size()));
    // tampering: checksum, witness, missing box
    std::string t1 = js;
    t1[t1.size() - 3] = t1[t1.size() - 3] == '0' ? '1' : '0';
    CHECK_FALSE(verify_certificate(t1).sound);
    CoverCertificate w = *c;
    w.covered[w.covered.size() / 2].w[0].bx2 += 40;
    CHECK_FALSE(verify_certificate(w.to_json()).sound);
    CoverCertificate g = *c;
    g.covered.erase(g.covered.begin() + 7);
    CHECK_FALSE(verify_certificate(g.to_json()).sound);
  }
  CoverCertificate w = weighted_cert();
  // same witness twice: difference 0 lies in the prime
  w.covered[3].w[1] = w.covered[3].w[0];
  CHECK(verify_certificate(w.to_json()).reason.find("prime") != std::string::npos);
  CHECK_FALSE(verify_certificate("{}").sound);
}

TEST_CASE("certificate witnesses at random points") {
  std::mt19937_64 gen(17);
  for (const CoverCertificate* c : {&plain_cert(), &weighted_cert()}) {
    std::uniform_int_distribution<size_t> pick(0, c->covered.size() - 1);
    std::uniform_int_distribution<long> t(0, 1000);
    for (int i = 0; i < 1000; ++i) {
      const CoveredBox& cb = c->covered[pick(gen)];
      Box B = cb.box.box();
      Rat px = B.x.lo + B.x.width() * make_rat(t(gen), 1000), py = B.y.lo + B.y.width() * make_rat(t(gen), 1000);
      QuadElem pt = q(px, py);
      for (int j = 0; j < cb.nw; ++j) CHECK(abs_q((pt - c->witness(cb.w[j])).norm()) < c->k);
      if (cb.nw == 2) CHECK_FALSE(c->mode.prime.contains(c->witness(cb.w[0]) - c->witness(cb.w[1])));
      // negation: -B is covered by -gamma
      CHECK(abs_q((-pt + c->witness(cb.w[0])).norm()) < c->k);
    }
  }
}

TEST_CASE("monotone in k and symmetric") {
  auto run = [](Rat k) {
    CoverOptions o;
    o.k = k;
    o.max_depth = 30;
    return cover(o);
  };
  CoverCertificate lo = run(make_rat(4, 5)), hi = run(make_rat(7, 8)), top = run(make_rat(9, 10));
  auto L = lo.exceptional_boxes(), H = hi.exceptional_boxes();
  for (auto& e : H) CHECK(covered_by_union(e, L));
  for (auto& e : top.exceptional_boxes()) CHECK(covered_by_union(e, H));
  CHECK(hi.exceptional_area() <= lo.exceptional_area());
  CHECK(top.exceptional_area() <= hi.exceptional_area());
  // deepening shrinks
  CHECK(plain_cert().exceptional_area() <= hi.exceptional_area());

  // the edges y = 0 and y = 1/4 are glued to themselves by x -> 1 - x and x -> 1/2 - x
  const CoverCertificate& w = weighted_cert();
  auto E = w.exceptional_boxes();
  auto EU = lattice_copies(69, E, make_box(-1, 2, -1, 1), true);
  for (auto& e : E) {
    if (sgn(e.y.lo) == 0) CHECK(covered_by_union(make_box(1 - e.x.hi, 1 - e.x.lo, 0, e.y.hi), EU));
    CHECK(covered_by_union(e.neg(), EU));
  }
}
