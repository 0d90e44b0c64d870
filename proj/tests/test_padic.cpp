#include <doctest.h>

#include "ewin/error.hpp"
#include "ewin/minima/families.hpp"
#include "ewin/padic/padic.hpp"

#include <random>

using namespace ewin;

namespace {

const Int P23(23);

PadicQuadElem pq(const QuadElem& q, long N) { return PadicQuadElem::of(q, P23, N); }

}  // namespace

TEST_CASE("p-adic ring basics") {
  PadicQuadElem e = pq(q69::eps(), 6);
  CHECK((e * e.conj()) == PadicQuadElem::make(P23, 69, 6, 1, 0));
  CHECK(pq(QuadElem(69, 23), 4).val_pi() == 2);
  CHECK(pq(QuadElem(69, 0, 1), 4).val_pi() == 1);
  CHECK(pq(QuadElem(69, Rat(23, 2), Rat(3, 2)), 4).val_pi() == 1);
  CHECK(pq(QuadElem(69, 1), 4).val_pi() == 0);
  CHECK((e - PadicQuadElem::make(P23, 69, 6, 1, 0)).val_pi() == 1);
  CHECK_THROWS_AS(pq(QuadElem(69, Rat(1, 23)), 4), Error);
  CHECK_THROWS_AS(PadicQuadElem::make(Int(5), 69, 4, 1, 0), Error);
}

TEST_CASE("valuation additive") {
  std::mt19937_64 g(5);
  std::uniform_int_distribution<long> d(-2000, 2000);
  for (int i = 0; i < 500; ++i) {
    // bias towards multiples of pi
    Int a = d(g) * (i % 3 == 0 ? 23 : 1), b = d(g);
    Int c = d(g), e = d(g) * (i % 4 == 0 ? 23 : 1);
    PadicQuadElem x = PadicQuadElem::make(P23, 69, 10, a, b), y = PadicQuadElem::make(P23, 69, 10, c, e);
    if (x.is_zero() || y.is_zero()) continue;
    CHECK((x * y).val_pi() == std::min(20L, x.val_pi() + y.val_pi()));
  }
}

TEST_CASE("logarithm") {
  const long N = 6;
  PadicQuadElem one = PadicQuadElem::make(P23, 69, N, 1, 0);
  CHECK(padic_log(one).is_zero());
  PadicQuadElem e = pq(q69::eps(), N);
  PadicQuadElem le = padic_log(e);
  CHECK(padic_log(e * e) == le + le);
  CHECK(padic_log(e.conj()) == le.conj());
  // eps^{1+sigma} = 1
  CHECK((le + padic_log(e.conj())).is_zero());
  PadicQuadElem a = pq(q69::alpha_e23(), N);
  CHECK(padic_log(a * e) == padic_log(a) + le);
  CHECK(le.val_pi() == 1);
  CHECK_THROWS_AS(padic_log(PadicQuadElem::make(P23, 69, N, 2, 0)), Error);
}

TEST_CASE("p-adic exponent") {
  PadicExponent s = solve_exponent(q69::eps(), q69::alpha_e23(), P23, 5);
  CHECK(s.digits == std::vector<long>{11, 13, 15, 5, 3});
  for (long N = 1; N <= 6; ++N) {
    PadicExponent t = solve_exponent(q69::eps(), q69::alpha_e23(), P23, N);
    CHECK(pow(pq(q69::eps(), N), t.value) == pq(q69::alpha_e23(), N));
    if (N <= 5) CHECK(t.value == s.value % pow_z(P23, N));
  }
  CHECK(solve_exponent(q69::eps(), q69::eps(), P23, 4).value == 1);
  CHECK(solve_exponent(q69::eps(), pow(q69::eps(), 3), P23, 4).value == 3);
  // not Galois-fixed: the log of this target is not a Z_23 multiple of log eps
  CHECK_THROWS_AS(solve_exponent(q69::eps(), QuadElem(69, 24), P23, 4), Error);
}

TEST_CASE("divisibility pattern") {
  CHECK(q69::divisibility_pattern(10).by_p);
  CHECK(q69::divisibility_pattern(10).by_p_squared);
  CHECK(q69::divisibility_pattern(33).by_p);
  CHECK(q69::divisibility_pattern(33).by_p_squared);
  CHECK_FALSE(q69::divisibility_pattern(1).by_p);
  CHECK(q69::r_family(1).representative.a == QuadElem(69, Rat(1, 5), Rat(1, 5)));
  for (long r = 1; r <= 100; ++r) {
    auto d = q69::divisibility_pattern(r);
    CHECK(d.by_p == (r % 23 == 10));
    if (d.by_p) CHECK(d.by_p_squared);
    CHECK(q69::r_family_congruence(r));
  }
}

TEST_CASE("deep divisibility") {
  auto w1 = q69::deep_divisibility_witness(1);
  CHECK(w1.r == 10);
  auto w2 = q69::deep_divisibility_witness(2);
  CHECK(w2.r == 11 + 13 * 23 - 1);
  CHECK(w2.valuation >= 2);
  auto w3 = q69::deep_divisibility_witness(3);
  CHECK(w3.valuation >= 3);
  auto w4 = q69::deep_divisibility_witness(4);
  CHECK(w4.valuation >= 4);
  CHECK(q69::deep_divisibility_witness(0).r == 1);
}
