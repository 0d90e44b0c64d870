#include <doctest.h>

#include "ewin/cubic/fixture.hpp"
#include "ewin/error.hpp"

#include <random>

using namespace ewin;

namespace {

std::string fixture(const char* name) { return std::string(EWIN_FIXTURE_DIR) + "/" + name; }

CubicElem rnd_int(std::mt19937_64& g, const CubicField& K, long r) {
  std::uniform_int_distribution<long> d(-r, r);
  return CubicElem::of(K, d(g), d(g), d(g));
}

}  // namespace

TEST_CASE("cubic norms") {
  CubicField K(1, -6, -1);
  CHECK(K.poly_disc() == 985);
  CHECK(norm_cubic(CubicElem::of(K, 0, 1)) == 1);
  CHECK(norm_cubic(CubicElem::of(K, 1)) == 1);
  CHECK(norm_cubic(CubicElem::of(K, 2)) == 8);
  CubicField K1937(1, -8, 1);
  CHECK(K1937.poly_disc() == 1937);
  CHECK(abs_q(norm_cubic(CubicElem::of(K1937, Rat(-14, 9), 1, Rat(4, 9)))) == 1);
  CHECK_THROWS_AS(CubicField(0, -1, 0), Error);  // x^3 - x
  CHECK(CubicField(-1, -10, -3).poly_disc() == 3305);
  CHECK(CubicField(-1, -10, -1).poly_disc() == 3889);
}

TEST_CASE("cubic norm multiplicativity") {
  std::mt19937_64 g(11);
  CubicField K(1, -8, 1);
  std::uniform_int_distribution<long> d(-20, 20), den(1, 9);
  for (int i = 0; i < 500; ++i) {
    CubicElem u = CubicElem::of(K, make_rat(d(g), den(g)), make_rat(d(g), den(g)), make_rat(d(g), den(g)));
    CubicElem v = CubicElem::of(K, make_rat(d(g), den(g)), make_rat(d(g), den(g)), make_rat(d(g), den(g)));
    CHECK(norm_cubic(u * v) == norm_cubic(u) * norm_cubic(v));
  }
}

TEST_CASE("integral bases") {
  CHECK(CubicField(1, -6, -1).power_basis_maximal());
  CHECK(CubicField(0, 0, -2).power_basis_maximal());
  // Dedekind's field x^3 - x^2 - 2x - 8: Z[alpha] has index 2
  CubicField D(-1, -2, -8);
  CHECK(D.poly_disc() == -2012);
  CHECK_FALSE(D.power_basis_maximal());
  // beta = (alpha + alpha^2) / 2 completes the basis
  CubicField D2(-1, -2, -8, {Int(0), Int(1), Int(1)}, 2);
  CHECK(D2.basis_disc() == -503);
}

TEST_CASE("prime ideals and divisibility") {
  CubicField K(1, -6, -1);
  CubicPrimeIdeal P{Int(5), 1, Int(-1), 0};
  CHECK(is_prime_ideal(K, P));
  CHECK(divides(K, P, CubicElem::of(K, -1, 1)));
  CHECK_FALSE(divides(K, P, CubicElem::of(K, 1)));
  CHECK_FALSE(is_prime_ideal(K, CubicPrimeIdeal{Int(5), 1, Int(0), 0}));
  CHECK_THROWS_AS(divides(K, P, CubicElem::of(K, Rat(1, 5))), Error);
  CubicField K3889(-1, -10, -1);
  CubicPrimeIdeal P7{Int(7), 1, Int(2), 0};
  CHECK(is_prime_ideal(K3889, P7));
  CHECK(divides(K3889, P7, CubicElem::of(K3889, 7)));
  CubicField K1937(1, -8, 1);
  CubicPrimeIdeal Q{Int(3), 2, Int(0), Int(1)};
  CHECK(is_prime_ideal(K1937, Q));
  CHECK(Q.norm() == 9);
  CHECK(divides(K1937, Q, CubicElem::of(K1937, 1, 0, 1)));
  CHECK(valuation(K1937, Q, CubicElem::of(K1937, 3)) == 1);
  CHECK(valuation(K1937, CubicPrimeIdeal{Int(3), 1, Int(1), 0}, CubicElem::of(K1937, 9)) == 2);
  // inert prime
  CubicField K985(1, -6, -1);
  CubicPrimeIdeal I2{Int(2), 3, 0, 0};
  CHECK(is_prime_ideal(K985, I2));
  CHECK(divides(K985, I2, CubicElem::of(K985, 2, 4, -6)));
  CHECK(valuation(K985, I2, CubicElem::of(K985, Rat(1, 4))) == -2);
}

TEST_CASE("divisibility vs norms") {
  std::mt19937_64 g(23);
  CubicField K(-1, -10, -1);
  std::vector<CubicPrimeIdeal> Ps{{Int(7), 1, Int(1), 0}, {Int(7), 1, Int(2), 0}, {Int(7), 1, Int(3), 0}};
  int hits = 0;
  for (int i = 0; i < 1000; ++i) {
    CubicElem x = rnd_int(g, K, 30);
    if (x.is_zero()) continue;
    Rat N = norm_cubic(x);
    for (auto& P : Ps) {
      bool d = divides(K, P, x);
      if (d) {
        ++hits;
        CHECK(N.get_num() % 7 == 0);
      }
      CHECK(d == (valuation(K, P, x) >= 1));
    }
    // v_p(N) = sum of the valuations at primes above 7, all of degree 1
    long s = 0;
    for (auto& P : Ps) s += valuation(K, P, x);
    CHECK(s == vp(N, Int(7)));
  }
  CHECK(hits > 100);
}

TEST_CASE("weighted norm") {
  CubicField K(1, -6, -1);
  CubicPrimeIdeal P{Int(5), 1, Int(-1), 0};
  CubicElem xi = CubicElem::of(K, Rat(22, 5), Rat(-1, 5), Rat(-3, 5));
  CHECK(weighted_norm_cubic(xi, P, 5) == abs_q(norm_cubic(xi)));
  CHECK(weighted_norm_cubic(xi, P, 6) == Rat(5, 6));
  CHECK(weighted_norm_cubic(xi, P, Rat(51, 10)) < 1);
  CHECK(weighted_norm_cubic(xi, P, 4) > 1);
  CubicField K3305(-1, -10, -3);
  CubicPrimeIdeal P3{Int(3), 1, Int(0), 0};
  CubicElem xi2 = CubicElem::of(K3305, Rat(-3, 5), Rat(4, 5), Rat(2, 5));
  CHECK(weighted_norm_cubic(xi2, P3, Rat(49, 10)) < 1);
  CHECK(weighted_norm_cubic(xi2, P3, 5) == 1);
  std::mt19937_64 g(2);
  for (int i = 0; i < 200; ++i) {
    CubicElem u = rnd_int(g, K, 15), v = rnd_int(g, K, 15);
    if (u.is_zero() || v.is_zero()) continue;
    Rat c = make_rat(static_cast<long>(g() % 50) + 1, 7);
    CHECK(weighted_norm_cubic(u * v, P, c) == weighted_norm_cubic(u, P, c) * weighted_norm_cubic(v, P, c));
  }
}

TEST_CASE("fixtures") {
  struct Row {
    const char* file;
    Threshold lo;
    std::optional<Threshold> hi;
  };
  const Row rows[] = {
      {"disc985.json", {5, 1}, std::nullopt},
      {"disc1937.json", {3, 1}, std::nullopt},
      {"disc3305.json", {13, 2}, Threshold{5, 1}},
      {"disc3889.json", {13, 1}, std::nullopt},
      {"disc1345.json", {7, 1}, std::nullopt},
  };
  for (auto& r : rows) {
    CubicReport rep = verify_cubic_fixture(load_cubic_fixture(fixture(r.file)));
    CAPTURE(rep.str());
    CHECK(rep.ok());
    REQUIRE(rep.window.spans.size() == 1);
    CHECK(*rep.window.spans[0].lo == r.lo);
    CHECK(rep.window.spans[0].hi.has_value() == r.hi.has_value());
    if (r.hi) CHECK(*rep.window.spans[0].hi == *r.hi);
    CHECK_FALSE(rep.assumed.empty());
  }
  CHECK_THROWS_AS(load_cubic_fixture(fixture("nope.json")), Error);
}
