#include <doctest.h>

#include "ewin/error.hpp"
#include "ewin/zline/zline.hpp"

#include <numeric>

using namespace ewin;

namespace {

ZWeightedNorm fz(long p, const Rat& c) { return {Int(p), c}; }

}  // namespace

TEST_CASE("weighted norm on Z") {
  Rat c(7, 3);
  CHECK(weighted_norm_z(Int(1), fz(5, c)) == 1);
  CHECK(weighted_norm_z(Int(-1), fz(5, c)) == 1);
  CHECK(weighted_norm_z(Int(10), fz(5, c)) == 2 * c);
  CHECK(weighted_norm_z(Int(9), fz(5, c)) == 9);
  CHECK(weighted_norm_z(Int(0), fz(5, c)) == 0);
  CHECK(weighted_norm_z(Rat(1, 5), fz(5, c)) == 1 / c);
  for (long a = -30; a <= 30; ++a)
    for (long b = -30; b <= 30; ++b)
      CHECK(weighted_norm_z(Int(a * b), fz(3, c)) == weighted_norm_z(Int(a), fz(3, c)) * weighted_norm_z(Int(b), fz(3, c)));
}

TEST_CASE("trichotomy") {
  CHECK(minimum_z(fz(5, 4)).kind == ZMinKind::infinite);
  CHECK(minimum_z(fz(5, 5)).value == Rat(1, 2));
  CHECK(minimum_z(fz(5, 6)).value == 1);
  CHECK(minimum_z(fz(5, 6)).approach.has_value());
  CHECK(minimum_z(fz(2, Rat(5, 2))).kind == ZMinKind::finite);
  CHECK_THROWS_AS(minimum_z(fz(5, 0)), Error);
}

TEST_CASE("divergence witnesses") {
  auto d1 = divergence_witness(fz(5, 4), 1);
  CHECK(d1.a == 2);
  CHECK(d1.b == 5);
  CHECK(d1.bound == Rat(1, 2));
  auto d3 = divergence_witness(fz(5, 4), 3);
  CHECK(d3.a == 62);
  CHECK(d3.b == 125);
  CHECK(d3.bound == make_rat(62, 64));
  auto d4 = divergence_witness(fz(2, Rat(3, 2)), 4);
  CHECK(d4.a == 7);
  CHECK(d4.b == 16);
  CHECK(d4.bound == 7 * pow_q(Rat(2, 3), 4));
  Rat prev = -1;
  for (unsigned long n = 1; n <= 30; ++n) {
    auto d = divergence_witness(fz(5, 4), n);
    CHECK(d.bound > prev);
    prev = d.bound;
  }
  CHECK(prev > 100);
  CHECK_THROWS_AS(divergence_witness(fz(5, 5), 1), Error);
}

TEST_CASE("approach to one") {
  ZWeightedNorm f = fz(5, 6);
  ZApproach w = approach_fraction(f);
  CHECK(w.alpha == 11);
  CHECK(w.beta == 2);
  Rat gap_prev = 10;
  for (unsigned long n = 1; n <= 60; ++n) {
    auto t = approach_witness(f, w, n);
    CHECK(t.f_point > t.lower);
    CHECK(t.f_shift < 1);
    Rat gap = 1 - std::min(t.f_point, t.f_shift);
    if (n > 5) CHECK(gap < gap_prev);
    gap_prev = gap;
  }
  CHECK(gap_prev < Rat(1, 100));
  ZApproach w2 = approach_fraction(fz(2, Rat(5, 2)));
  CHECK(w2.beta % 2 != 0);
  CHECK(Rat(w2.alpha, w2.beta) > 2);
  CHECK(make_rat(w2.alpha, w2.beta) < Rat(5, 2));
}

TEST_CASE("Euclidean step") {
  ZWeightedNorm f = fz(5, 5);
  CHECK(euclidean_step_z(7, 10, f) == 1);
  CHECK(weighted_norm_z(Int(-3), f) == 3);
  CHECK(euclidean_step_z(1, 1, fz(3, 4)) == 1);
  CHECK(euclidean_step_z(3, 25, f) == 0);
  CHECK_THROWS_AS(euclidean_step_z(2, 4, f), Error);
  CHECK_THROWS_AS(euclidean_step_z(1, 5, fz(5, 4)), Error);
  for (long p : {2, 3, 5, 7})
    for (const Rat& c : {Rat(p), Rat(p + 1), Rat(2 * p)})
      for (long a = -60; a <= 60; ++a)
        for (long b = -60; b <= 60; ++b) {
          if (b == 0 || std::gcd(a, b) != 1) continue;
          ZWeightedNorm g = fz(p, c);
          Int q = euclidean_step_z(a, b, g);
          CHECK(weighted_norm_z(Int(a - b * q), g) < weighted_norm_z(Int(b), g));
        }
}

TEST_CASE("brute force oracle") {
  for (long p : {2, 3, 5}) {
    ZWeightedNorm f = fz(p, p);
    Rat worst = 0;
    for (long a = -40; a <= 40; ++a)
      for (long b = 1; b <= 40; ++b)
        if (std::gcd(a, b) == 1) worst = std::max(worst, empirical_min_z(a, b, f));
    CHECK(worst == Rat(1, 2));
  }
}
