#include <doctest.h>

#include "ewin/cover/sets.hpp"
#include "ewin/error.hpp"
#include "ewin/minima/chains.hpp"
#include "ewin/minima/families.hpp"

#include <random>

using namespace ewin;
using namespace ewin::q69;

namespace {

QuadElem e69(const Rat& x, const Rat& y = 0) { return QuadElem(69, x, y); }

// naive minimum over translates with half-coordinates |2g| <= 2R
Rat brute_min(const QuadElem& xi, long R) {
  const QuadField& K = field(xi.m());
  bool first = true;
  Rat best;
  for (long gy = -2 * R; gy <= 2 * R; ++gy)
    for (long gx = -2 * R; gx <= 2 * R; ++gx) {
      QuadElem g(xi.m(), Rat(gx, 2), Rat(gy, 2));
      if (!K.is_integral(g)) continue;
      Rat v = abs_q((xi - g).norm());
      if (first || v < best) best = v, first = false;
    }
  return best;
}

}  // namespace

TEST_CASE("points and reduction") {
  Point P0 = p_point(0);
  CHECK(P0.x() == e69(Rat(1, 2)));
  CHECK(P0.y() == e69(Rat(4, 23), Rat(1, 138)));
  CHECK(std::abs(to_double(P0.y()) - 0.2341059) < 1e-7);
  CHECK_FALSE(P0.in_field());
  PointClass c = make_class(e69(Rat(7, 3), Rat(5, 4)));
  CHECK(field(69).is_integral(c.delta));
  CHECK(c.representative.minus(c.delta) == c.reduced);
  CHECK(c.reduced.in_field());
}

TEST_CASE("orbit examples") {
  for (auto& pc : orbit(make_class(e69(0)), {-2, 2})) CHECK(pc.reduced.a.is_zero());
  // eps^{-r} P0 = P_r mod O_K
  auto orb = orbit(make_class(p_point(0)), {-6, 0});
  for (long r = 0; r <= 6; ++r) CHECK(orb[6 - r].reduced == make_class(p_point(r)).reduced);
  // eps c0 is a translate of c0 (the fixed point of beta)
  auto o1 = orbit(make_class(c0()), {0, 1});
  CHECK(o1[1].reduced == o1[0].reduced);
  CHECK(euclidean_min(o1[1], 2).value == euclidean_min(o1[0], 2).value);
  CHECK(orbit_period(make_class(c0())) == 1);
}

TEST_CASE("candidates and minima") {
  auto cands = enumerate_candidates(make_class(c0()), m1().x() + Rat(1, 100));
  bool found = false;
  for (auto& c : cands) found |= c.value == m1();
  CHECK(found);
  CHECK(!enumerate_candidates(make_class(e69(0)), 1).empty());

  MinimumResult r1 = euclidean_min(make_class(c0()), 2);
  CHECK(r1.attained());
  CHECK(r1.value == m1());
  CHECK(abs_q((c0() - r1.witness).norm()) == Rat(25, 23));

  MinimumResult z = euclidean_min(make_class(e69(0)), 1);
  CHECK(z.value.is_zero());
  CHECK(z.witness.is_zero());

  MinimumResult none = euclidean_min(make_class(c0()), 1);
  CHECK(none.status == MinStatus::none_below_k);
}

TEST_CASE("minimum at the symbolic point P0") {
  PointClass P0 = make_class(p_point(0));
  // j = 0: only P0 + a and P0 - (b + sqrt 69)/2 with b odd
  for (auto& c : enumerate_candidates(P0, 1, OrbitRange{0, 0})) {
    const QuadElem& g = c.witness;
    bool integer = g.is_rational() && g.x().get_den() == 1;
    bool half = g.y() == Rat(1, 2) && Rat(2 * g.x()).get_den() == 1 && mpz_odd_p(Rat(2 * g.x()).get_num().get_mpz_t());
    CHECK((integer || half));
  }
  MinimumResult r = euclidean_min(P0, 1, OrbitRange{-1, 0});
  CHECK(r.attained());
  CHECK(r.value == m2());
  CHECK(r.witness == eta_half());
  CHECK(r.orbit_index == 0);
  // P1 attains the same value at P1 + (5 - sqrt 69)/2; that translate sits just outside the
  // Pbd box (|s| > mu/sqrt 69), so the box finds it one unit step away
  CHECK(p_point(1).plus(e69(Rat(5, 2), Rat(-1, 2))).abs_norm() == m2());
  CHECK(euclidean_min(make_class(p_point(1)), 1, OrbitRange{0, 0}).status == MinStatus::none_below_k);
  MinimumResult r1 = euclidean_min(make_class(p_point(1)), 1, OrbitRange{0, 1});
  CHECK(r1.value == m2());
  CHECK(p_point(1).minus(r1.witness).abs_norm() == m2());
}

TEST_CASE("weighted minima") {
  WeightedNorm f{p23(), 26};
  for (Rat c : {Rat(26), Rat(30), Rat(51, 2), Rat(1000)}) {
    f.c = c;
    MinimumResult r = euclidean_min_weighted(make_class(c0()), f, 1);
    REQUIRE(r.attained());
    CHECK(r.value.x() == Rat(25) / c);
    CHECK(r.weighted->coeff == 25);
    CHECK(r.weighted->exponent == -1);
    CHECK(weighted_translate(c0(), r.witness, f) == Rat(25) / c);
  }
  // at c = 25 the value reaches 1 and no candidate lies below k = 1
  f.c = 25;
  CHECK(euclidean_min_weighted(make_class(c0()), f, 1).status == MinStatus::none_below_k);
  f.c = 5;
  CHECK(euclidean_min_weighted(make_class(e69(0)), f, 1).value.is_zero());

  // numerator divisible by P: the complementary translate bounds the f-minimum for c >= NP
  PointClass R2 = r_family(2);
  auto tb = two_translate_bound(R2.representative, e69(2), eta_half(), p23());
  REQUIRE(tb);
  for (Rat c : {Rat(23), Rat(24), Rat(40), Rat(1000)}) {
    f.c = c;
    MinimumResult r = euclidean_min_weighted(R2, f, 1);
    REQUIRE(r.attained());
    CHECK(r.value <= *tb);
  }
  CHECK_FALSE(two_translate_bound(R2.representative, e69(2), e69(25), p23()));

  // P0 of the weighted section: the two translates give kappa0
  auto kb = two_translate_bound(p0_weighted(), e69(2), eta_half(), p23());
  REQUIRE(kb);
  CHECK(*kb == kappa0());
  CHECK(p0_weighted().minus(e69(2)).abs_norm() == p0_weighted_norm_2());
}

TEST_CASE("Q_r family table") {
  struct Row {
    long r;
    Rat y, M;
  };
  const Row rows[] = {
      {-1, Rat(97, 414), Rat(541, 621)},
      {0, Rat(70, 299), Rat(13651, 15548)},
      {1, Rat(2423, 10350), Rat(340876, 388125)},
      {2, Rat(6989, 29854), Rat(8508391, 9687623)},
      {3, Rat(30239, 129168), Rat(212369041, 241802496)},
      {4, Rat(174445, 745154), Rat(Int("5300717776"), Int("6035374823"))},
  };
  const char* decs[] = {"0.871175523", "0.877990738", "0.878263446", "0.878274371", "0.878274809", "0.878274826"};
  int i = 0;
  for (auto& row : rows) {
    PointClass q = q_family(row.r);
    CHECK(q.reduced.a == e69(Rat(1, 2), row.y));
    CHECK(q_family_norm(row.r) == row.M);
    CHECK(decimal(row.M, 9, true) == decs[i++]);
    MinimumResult m = euclidean_min(q, 1);
    CHECK(m.value == e69(row.M));
    CHECK(q.representative.minus(m.witness).abs_norm() == e69(row.M));
  }
}

TEST_CASE("Q_r error term") {
  CHECK(q_family_error_term(-1) == m2() - e69(Rat(541, 621)));
  CHECK(q_family_error_term(0) == m2() - e69(Rat(13651, 15548)));
  QuadElem prev = q_family_error_term(-1);
  for (long r = 0; r <= 12; ++r) {
    QuadElem cur = q_family_error_term(r);
    CHECK(cur.sign() > 0);
    CHECK(cur < prev);
    CHECK(cur < q_family_error_first_order(r));
    CHECK(m2() - e69(q_family_norm(r)) == cur);
    prev = cur;
  }
  CHECK(q_family_error_term(8) < e69(Rat(1, 1000000)));
  CHECK(q_family_error_first_order(20) < e69(Rat(1, Int(10) * Int("1000000000000000000000000"))));
}

TEST_CASE("R_r family table") {
  struct Row {
    long r;
    Rat x, y, n1, n2;
  };
  const Row rows[] = {
      {1, Rat(1, 5), Rat(1, 5), Rat(23, 25), Rat(12, 25)},
      {2, Rat(5, 24), Rat(43, 216), Rat(3875, 3888), Rat(1849, 3888)},
      {3, Rat(130, 623), Rat(124, 623), Rat(388025, 388129), Rat(184512, 388129)},
      {4, Rat(125, 599), Rat(1073, 5391), Rat(9686225, 9687627), Rat(4605316, 9687627)},
      {5, Rat(649, 3110), Rat(619, 3110), Rat(2417687, 2418025), Rat(1149483, 2418025)},
      // the printed numerator of the last column is 2935561516, inconsistent with the printed
      // decimal 0.475380929; the exact value below matches the decimal
      {6, Rat(3120, 14951), Rat(26782, 134559), Rat(Int("6034532375"), Int("6035374827")),
       Rat(Int("2869102096"), Int("6035374827"))},
  };
  const char* d1[] = {"0.920000000", "0.996656378", "0.999732047", "0.999855279", "0.999860216", "0.999860414"};
  const char* d2[] = {"0.480000000", "0.475565843", "0.475388337", "0.475381225", "0.475380941", "0.475380929"};
  int i = 0;
  for (auto& row : rows) {
    CHECK(r_family(row.r).reduced.a == e69(row.x, row.y));
    auto [n1, n2] = r_family_norms(row.r);
    CHECK(n1 == row.n1);
    CHECK(n2 == row.n2);
    CHECK(decimal(n1, 9, true) == d1[i]);
    CHECK(decimal(n2, 9, true) == d2[i]);
    ++i;
  }
  CHECK(decimal(Rat(Int("2935561516"), Int("6035374827")), 9, true) != "0.475380929");
  // denominators prime to P
  for (long r = 1; r <= 30; ++r) {
    QuadElem R = r_family(r).representative.a;
    CHECK(valuation(R - eta_half(), p23()) >= 0);
    CHECK(valuation(R - e69(2), p23()) >= 0);
  }
}

TEST_CASE("chain bound checks") {
  ChainPlan one = forward_chain();
  one.steps.clear();
  ChainVerdict v1 = chain_bound_check(one);
  CHECK(v1.holds);
  CHECK(std::abs(to_double(v1.bound) + 1.48) < 0.01);

  ChainPlan empty;
  empty.target = -c0();
  CHECK(chain_bound_check(empty).vacuous);
  CHECK(chain_bound_check(empty).holds);

  ChainPlan five = forward_chain(5);
  CHECK(chain_bound_check(five).holds);
  CHECK(chain_bound_check(forward_chain()).holds);
  CHECK(chain_bound_check(backward_chain()).holds);
  CHECK(chain_bound_check(backward_chain(7)).holds);

  // induction identity: eps' (-c0) - 18 + 2 sqrt 69 = -c0
  CHECK(eps().conj() * (-c0()) - e69(18, -2) == -c0());

  ChainPlan bad = forward_chain();
  bad.steps.push_back({UnitAffineMap{eps(), e69(Rat(1, 3))}, 1});
  CHECK_THROWS_AS(chain_bound_check(bad), Error);
  ChainPlan orphan;
  orphan.target = -c0();
  orphan.steps.push_back({map_beta(), 1});
  CHECK_THROWS_AS(chain_bound_check(orphan), Error);

  // a wrong target fails honestly
  ChainPlan wrong = forward_chain();
  wrong.target = e69(-2);
  CHECK_FALSE(chain_bound_check(wrong).holds);

  SignArgument s = sign_argument(T(), e69(1) + c0(), -c0(), eta_half());
  CHECK(s.holds);
  CHECK(s.product == m2());
  CHECK(s.product == e69(Rat(165, 46), Rat(-15, 46)));
}

TEST_CASE("sum bound") {
  CHECK(sum_bound(1, 1, 2, 3));
  CHECK(sum_bound(Rat(1, 2), Rat(1, 3), 1, Rat(1, 2)));
  Rat a(7, 3), d(1, 1000000);
  CHECK(sum_bound(a - d, a - d, a, a * a));
  CHECK_THROWS_AS(sum_bound(3, 1, 2, 3), Error);
  CHECK_THROWS_AS(sum_bound(1, 1, 2, 1), Error);
  CHECK_THROWS_AS(sum_bound(0, 1, 2, 3), Error);
}

TEST_CASE("Pbd enumeration agrees with brute force") {
  std::mt19937_64 g(7);
  std::uniform_int_distribution<long> den(2, 9), num(-30, 30);
  const long ms[] = {69, 14, 2, 3, 5, 13};
  int compared = 0;
  for (int it = 0; it < 100; ++it) {
    long m = ms[it % 6];
    QuadElem xi(m, make_rat(num(g), den(g)), make_rat(num(g), den(g)));
    Rat k = 3;
    MinimumResult r = euclidean_min(make_class(xi), k);
    Rat b = brute_min(xi, 12);
    if (!r.attained()) {
      CHECK(b >= k);
      continue;
    }
    CHECK(r.value.x() <= b);
    QuadElem w = r.witness;
    if (abs_q(w.x()) <= 12 && abs_q(w.y()) <= 12) {
      CHECK(r.value.x() == b);
      ++compared;
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("orbit invariance of minima") {
  std::mt19937_64 g(11);
  std::uniform_int_distribution<long> den(2, 8), num(-20, 20);
  const long ms[] = {69, 14, 2, 6};
  for (int it = 0; it < 60; ++it) {
    long m = ms[it % 4];
    QuadElem xi(m, make_rat(num(g), den(g)), make_rat(num(g), den(g)));
    MinimumResult base = euclidean_min(make_class(xi), 2);
    for (auto& pc : orbit(make_class(xi), {-3, 3})) {
      MinimumResult r = euclidean_min(pc, 2);
      CHECK(r.status == base.status);
      CHECK(r.value == base.value);
    }
  }
}

TEST_CASE("M1 is isolated on exceptional-box points") {
  std::mt19937_64 g(5);
  int tested = 0;
  for (const auto& nb : plain_sets()) {
    const Box& B = nb.box;
    for (int it = 0; it < 6; ++it) {
      long d = 40 + static_cast<long>(g() % 60);
      Rat x = B.x.lo + B.x.width() * make_rat(static_cast<long>(g() % 1000), 1000);
      Rat y = B.y.lo + B.y.width() * make_rat(static_cast<long>(g() % 1000), 1000);
      x = Rat(round_q(x * d), d);
      y = Rat(round_q(y * d * 23), d * 23);
      QuadElem xi(69, x, y);
      if (make_class(xi).reduced == make_class(c0()).reduced || make_class(xi).reduced == make_class(-c0()).reduced) continue;
      MinimumResult r = euclidean_min(make_class(xi), m1().x());
      CHECK(r.attained());
      ++tested;
    }
  }
  CHECK(tested > 30);
}
