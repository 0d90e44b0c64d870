#include "ewin/minima/chains.hpp"

#include "ewin/error.hpp"
#include "ewin/exact/field.hpp"
#include "ewin/minima/families.hpp"
#include "ewin/cover/sets.hpp"

namespace ewin {

namespace {

QuadElem emb(const QuadElem& q, int j) { return j == 1 ? q : q.conj(); }

// exact range of the j-th embedding over a box
std::pair<QuadElem, QuadElem> emb_range(long m, const Box& B, int j) {
  QuadElem s = sqrt_m(m);
  if (j == 1) return {QuadElem(m, B.x.lo) + B.y.lo * s, QuadElem(m, B.x.hi) + B.y.hi * s};
  return {QuadElem(m, B.x.lo) - B.y.hi * s, QuadElem(m, B.x.hi) - B.y.lo * s};
}

bool allowed(const UnitAffineMap& f, const std::vector<UnitAffineMap>& list) {
  if (list.empty()) return true;
  const QuadField& K = field(f.unit.m());
  for (const auto& g : list)
    if (g.unit == f.unit && K.is_integral(f.theta - g.theta)) return true;
  return false;
}

}  // namespace

ChainVerdict chain_bound_check(const ChainPlan& plan) {
  ChainVerdict v;
  if (!plan.entry) {
    if (!plan.steps.empty()) throw Error(Err::chain, "chain steps without an entry map");
    v.vacuous = v.holds = true;
    v.log.push_back("empty chain");
    return v;
  }
  if (plan.embedding != 1 && plan.embedding != 2) throw Error(Err::chain, "embedding must be 1 or 2");
  if (!allowed(*plan.entry, plan.allowed)) throw Error(Err::chain, "entry map not allowed: " + plan.entry->str());
  for (const auto& s : plan.steps)
    if (!allowed(s.map, plan.allowed)) throw Error(Err::chain, "step map not allowed: " + s.map.str());

  const int j = plan.embedding;
  const long m = plan.target.m();
  auto [lo, hi] = emb_range(m, plan.start, j);
  // one step of the bound; false when the unit's embedding is not positive
  auto push = [&](const UnitAffineMap& f, QuadElem& B) {
    QuadElem u = emb(f.unit, j);
    if (u.sign() <= 0) return false;
    B = u * B - emb(f.theta, j);
    return true;
  };
  QuadElem B = plan.upper ? hi : lo;
  bool strict = false;
  if (!push(*plan.entry, B)) {
    v.log.push_back("entry unit not positive in embedding " + std::to_string(j));
    return v;
  }
  v.log.push_back("base bound " + B.str() + " ~ " + std::to_string(to_double(B)));
  for (const auto& s : plan.steps) {
    if (s.count >= 0) {
      for (long i = 0; i < s.count; ++i)
        if (!push(s.map, B)) {
          v.log.push_back("step unit not positive");
          return v;
        }
      v.log.push_back(std::to_string(s.count) + " step(s): bound " + B.str());
      continue;
    }
    QuadElem u = emb(s.map.unit, j);
    if (u.sign() <= 0 || u == QuadElem(m, 1)) {
      v.log.push_back("repeated step needs a positive unit != 1");
      return v;
    }
    QuadElem fp = emb(s.map.theta, j) / (u - Rat(1));
    bool inside = plan.upper ? (B < fp || (B == fp && strict)) : (fp < B || (B == fp && strict));
    if (!inside) {
      v.log.push_back("bound " + B.str() + " on the wrong side of fixed point " + fp.str());
      v.bound = B;
      return v;
    }
    B = fp;
    strict = true;
    v.log.push_back("repeated step: invariant half-line at fixed point " + fp.str());
  }
  v.bound = B;
  v.strict = strict;
  v.holds = plan.upper ? (B < plan.target || (B == plan.target && strict))
                       : (plan.target < B || (B == plan.target && strict));
  v.log.push_back(std::string(v.holds ? "holds: " : "fails: ") + (j == 1 ? "xi " : "xi' ") +
                  (plan.upper ? "< " : "> ") + plan.target.str());
  return v;
}

UnitAffineMap map_alpha() {
  using namespace q69;
  return {eps().inverse(), QuadElem(kM, -18, 2)};
}

UnitAffineMap map_beta() {
  using namespace q69;
  return {eps(), QuadElem(kM, 18, 2)};
}

ChainPlan forward_chain(long repeats) {
  using namespace q69;
  ChainPlan s;
  s.start = T();
  UnitAffineMap b = map_beta();
  // beta(Q - 1) = eps Q - (61 + 7 sqrt 69)/2
  s.entry = UnitAffineMap{b.unit, b.theta + eps()};
  s.steps = {{b, repeats}, {b, 1}};
  s.embedding = 2;
  s.upper = true;
  s.target = -c0();
  s.allowed = {map_alpha(), b};
  return s;
}

ChainPlan backward_chain(long repeats) {
  using namespace q69;
  ChainPlan s;
  s.start = T();
  UnitAffineMap a = map_alpha();
  s.entry = a;
  // S2 -> T: eps^{-1} xi + 19 - 2 sqrt 69
  s.steps = {{a, repeats}, {UnitAffineMap{a.unit, a.theta - QuadElem(kM, 1)}, 1}};
  s.embedding = 1;
  s.upper = false;
  s.target = QuadElem(kM, 1) + c0();
  s.allowed = {a, map_beta()};
  return s;
}

SignArgument sign_argument(const Box& B, const QuadElem& xi0, const QuadElem& xi0c, const QuadElem& g) {
  SignArgument s;
  const long m = g.m();
  s.alpha = xi0 - g;
  s.alpha_conj = xi0c - g.conj();
  s.product = -(s.alpha * s.alpha_conj);
  bool a_neg = s.alpha.sign() < 0, ac_pos = s.alpha_conj.sign() > 0;
  auto r1 = emb_range(m, B, 1), r2 = emb_range(m, B, 2);
  bool below_g = r1.second < g;               // xi - g < 0 on B
  bool above_gc = g.conj() < r2.first;        // xi' - g' > 0 on B
  s.log.push_back("alpha = " + s.alpha.str() + (a_neg ? " < 0" : " (not negative)"));
  s.log.push_back("alpha' = " + s.alpha_conj.str() + (ac_pos ? " > 0" : " (not positive)"));
  s.log.push_back(std::string("box: xi < g ") + (below_g ? "yes" : "no") + ", xi' > g' " + (above_gc ? "yes" : "no"));
  s.holds = a_neg && ac_pos && below_g && above_gc;
  return s;
}

bool sum_bound(const Rat& x, const Rat& y, const Rat& a, const Rat& b) {
  if (sgn(x) <= 0 || sgn(y) <= 0 || sgn(a) <= 0 || sgn(b) <= 0)
    throw Error(Err::precondition, "sum_bound needs positive arguments");
  if (!(x < a && y < a && x * y < b)) throw Error(Err::precondition, "sum_bound needs x < a, y < a, xy < b");
  return x + y < a + b / a;
}

}  // namespace ewin
