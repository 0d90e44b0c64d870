#include <doctest.h>

#include "ewin/error.hpp"
#include "ewin/ideals/factor.hpp"
#include "ewin/ideals/obstruction.hpp"
#include "ewin/minima/minimum.hpp"

#include <random>
#include <set>
#include <string>

using namespace ewin;

namespace {

QuadElem e14(const Rat& x, const Rat& y = 0) { return QuadElem(14, x, y); }

QuadElem rnd_elem(std::mt19937_64& g, long m, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  QuadElem q(m, make_rat(n(g), d(g)), make_rat(n(g), d(g)));
  return q.is_zero() ? QuadElem(m, 1) : q;
}

}  // namespace

TEST_CASE("prime ideals") {
  auto P7 = primes_above(14, 7);
  REQUIRE(P7.size() == 1);
  CHECK(P7[0].kind == PrimeKind::ramified);
  CHECK(P7[0].norm() == 7);
  CHECK(primes_above(14, 3)[0].kind == PrimeKind::inert);
  CHECK(primes_above(14, 3)[0].norm() == 9);
  CHECK(primes_above(14, 5).size() == 2);
  CHECK(primes_above(69, 23)[0].kind == PrimeKind::ramified);
  CHECK(class_number_one(14));
  CHECK(class_number_one(69));
  CHECK_FALSE(class_number_one(10));
  QuadElem g = generator(prime_ideal(14, 2));
  CHECK(abs_q(g.norm()) == 2);
}

TEST_CASE("factorization examples") {
  IdealFactorization f = factor_principal(e14(7, 2));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == prime_ideal(14, 7));
  CHECK(f.factors[0].second == 1);
  CHECK(factor_principal(e14(1)).factors.empty());
  IdealFactorization two = factor_principal(e14(2));
  REQUIRE(two.factors.size() == 1);
  CHECK(two.factors[0].first == prime_ideal(14, 2));
  CHECK(two.factors[0].second == 2);
  CHECK(two.norm() == 4);
  CHECK_THROWS_AS(factor_principal(e14(0)), Error);
}

TEST_CASE("valuation examples") {
  CHECK(valuation(e14(1), prime_ideal(14, 2)) == 0);
  CHECK(valuation(e14(2), prime_ideal(14, 2)) == 2);
  CHECK(valuation(QuadElem(69, 0, Rat(4, 23)), prime_ideal(69, 23)) == -1);
  CHECK(valuation(QuadElem(69, 0, 1), prime_ideal(69, 3)) == 1);
}

TEST_CASE("weighted norm examples") {
  WeightedNorm f{prime_ideal(14, 2), Rat(5, 2)};
  CHECK(weighted_norm(e14(1), f) == 1);
  CHECK(weighted_norm(e14(2), f) == f.c * f.c);
  CHECK(weighted_norm(e14(3, 1), f) == 5);
  CHECK(weighted_norm(e14(-3, 1), f) == 5);
  CHECK(weighted_norm(e14(0), f) == 0);
  WeightedValue v = weighted_value(e14(2), f.ideal);
  CHECK(v.coeff == 1);
  CHECK(v.exponent == 2);
  // c = NP gives |N|
  f.c = 2;
  CHECK(weighted_norm(e14(Rat(3, 7), Rat(5, 2)), f) == abs_q(e14(Rat(3, 7), Rat(5, 2)).norm()));
}

TEST_CASE("weighted norm properties") {
  std::mt19937_64 g(3);
  const PrimeIdealQ Ps[] = {prime_ideal(14, 2), prime_ideal(14, 7), prime_ideal(69, 23), primes_above(14, 5)[0]};
  for (int it = 0; it < 500; ++it) {
    const PrimeIdealQ& P = Ps[it % 4];
    QuadElem a = rnd_elem(g, P.m, 40, 12), b = rnd_elem(g, P.m, 40, 12);
    WeightedNorm f{P, make_rat(static_cast<long>(g() % 97) + 2, static_cast<long>(g() % 7) + 1)};
    CHECK(weighted_norm(a * b, f) == weighted_norm(a, f) * weighted_norm(b, f));
    WeightedNorm deg{P, Rat(P.norm())};
    CHECK(weighted_norm(a, deg) == abs_q(a.norm()));
    CHECK(factor_principal(a).norm() == abs_q(a.norm()));
  }
}

TEST_CASE("finiteness of bounded f-values") {
  // integral alpha with f(alpha) < B: |N alpha| < B (NP/c)^v with v <= log_c B; stable under budget
  WeightedNorm f{prime_ideal(14, 2), Rat(3)};
  const QuadField& K = field(14);
  Rat B = 40;
  // counted as principal ideals, i.e. up to units
  auto count = [&](const Rat& search) {
    std::set<std::string> ids;
    for (auto& b : K.small_norm_elements(search))
      if (weighted_norm(b, f) < B) ids.insert(factor_principal(b).str());
    return static_cast<long>(ids.size());
  };
  // f = |N| (c/2)^v >= |N| since c > NP: everything is inside the |N| < B search
  long n1 = count(B), n2 = count(2 * B), n3 = count(4 * B);
  CHECK(n1 > 0);
  CHECK(n1 == n2);
  CHECK(n2 == n3);
}

TEST_CASE("thresholds and weight sets") {
  Threshold s5{5, 2}, s7{7, 2}, r75{Rat(7, 5), 1};
  CHECK(s5 < s7);
  CHECK(r75 < s5);
  CHECK(s5.above(2));
  CHECK_FALSE(s5.above(3));
  WeightSet a{{{std::nullopt, s7}}}, b{{{s5, std::nullopt}}};
  WeightSet ab = intersect(a, b);
  REQUIRE(ab.spans.size() == 1);
  CHECK(ab.contains(Rat(24, 10)));
  CHECK_FALSE(ab.contains(Rat(22, 10)));
  CHECK_FALSE(ab.contains(Rat(27, 10)));
  CHECK(intersect(ab, WeightSet{{{std::nullopt, r75}}}).empty());
  CHECK(unite(a, b).spans.size() == 1);
}

TEST_CASE("residue rings") {
  ResidueRing R(e14(7, 2));
  CHECK(R.size() == 7);
  ResidueRing R2(e14(2));
  CHECK(R2.size() == 4);
  CHECK(R2.key(e14(1, 1)) == R2.key(e14(3, 5)));
  CHECK(R2.key(e14(1, 1)) != R2.key(e14(1, 0)));
  ResidueRing R69(QuadElem(69, 0, 1));
  CHECK(R69.size() == 69);
  for (auto& k : R.all_keys()) CHECK(R.key(R.element(k)) == k);
}

TEST_CASE("obstruction: upper endpoint sqrt 7") {
  ObstructionReport r = residue_obstruction(e14(7, 2), prime_ideal(14, 2), 40);
  CAPTURE(r.summary());
  CHECK(r.exact);
  CHECK(r.f_modulus.coeff == 7);
  CHECK(r.f_modulus.exponent == 0);
  REQUIRE(r.window_bound.spans.size() == 1);
  CHECK_FALSE(r.window_bound.spans[0].lo);
  CHECK(*r.window_bound.spans[0].hi == Threshold{7, 2});
  // classes +-2 reached only through powers of the generator of P; f(2) = c^2 dominates
  ResidueRing R(e14(7, 2));
  for (long s : {2, -2}) {
    auto k = R.key(e14(s));
    bool found = false;
    for (auto& c : r.classes) {
      if (R.key(c.residue) != k) continue;
      found = true;
      CHECK_FALSE(c.always);
      REQUIRE(c.upper);
      CHECK(*c.upper->threshold == Threshold{7, 2});
      CHECK(c.upper->v == 2);
      CHECK_FALSE(c.lower);
    }
    CHECK(found);
  }
}

TEST_CASE("obstruction: lower endpoint sqrt 5") {
  ObstructionReport r = residue_obstruction(e14(2), prime_ideal(14, 2), 60);
  CAPTURE(r.summary());
  CHECK(r.exact);
  CHECK(r.f_modulus.exponent == 2);
  REQUIRE(r.window_bound.spans.size() == 1);
  CHECK(*r.window_bound.spans[0].lo == Threshold{5, 2});
  CHECK_FALSE(r.window_bound.spans[0].hi);
  ResidueRing R(e14(2));
  for (auto& c : r.classes)
    if (R.key(c.residue) == R.key(e14(1, 1))) {
      REQUIRE(c.lower);
      CHECK(c.lower->beta_norm == 5);
    }
  // the two arguments together: window inside (sqrt 5, sqrt 7)
  WeightSet both = intersect(r.window_bound, residue_obstruction(e14(7, 2), prime_ideal(14, 2), 40).window_bound);
  REQUIRE(both.spans.size() == 1);
  CHECK(*both.spans[0].lo == Threshold{5, 2});
  CHECK(*both.spans[0].hi == Threshold{7, 2});
}

TEST_CASE("obstruction: empty windows for norm +-1 mod 8") {
  auto Ps = primes_norm_pm1_mod8(14, 3);
  REQUIRE(Ps.size() == 3);
  CHECK(Ps[0].norm() == 7);
  CHECK(Ps[1].norm() == 9);
  CHECK(Ps[2].norm() == 31);
  for (auto& P : Ps) {
    ObstructionReport r = residue_obstruction(e14(2), P, 60);
    CAPTURE(r.summary());
    CHECK(r.exact);
    CHECK(r.window_bound.empty());
    // generator a + b sqrt 14 has b even
    QuadElem g = generator(P);
    CHECK(Rat(g.y() / 2).get_den() == 1);
  }
}

TEST_CASE("obstruction: trivial modulus") {
  ObstructionReport r = residue_obstruction(e14(1), prime_ideal(14, 2), 10);
  CHECK(r.classes.empty());
  CHECK(r.window_bound.spans.size() == 1);
  CHECK(r.window_bound.contains(Rat(101, 100)));
}

TEST_CASE("window combination across weights") {
  // certificates at r < t combine into certificates at every s in [r, t]
  std::mt19937_64 g(17);
  const PrimeIdealQ P = prime_ideal(69, 23);
  const Rat r(26), t(40);
  int combined = 0;
  for (int it = 0; it < 150; ++it) {
    QuadElem xi = rnd_elem(g, 69, 30, 9);
    PointClass pc = make_class(xi);
    MinimumResult mr = euclidean_min_weighted(pc, {P, r}, 1), mt = euclidean_min_weighted(pc, {P, t}, 1);
    if (!mr.attained() || !mt.attained()) continue;
    QuadElem gamma = combine_certificates(xi, mr.witness, mt.witness, P);
    for (Rat s : {r, Rat(53, 2), Rat(30), Rat(77, 2), t}) CHECK(weighted_translate(xi, gamma, {P, s}) < 1);
    ++combined;
  }
  CHECK(combined > 100);
}
