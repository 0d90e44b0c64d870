#include "ewin/cover/dynamics.hpp"

#include "ewin/cover/sets.hpp"
#include "ewin/error.hpp"

#include <sstream>

namespace ewin {

UnitAffineMap compose(const UnitAffineMap& g, const UnitAffineMap& f) {
  // g(f(xi)) = g.u f.u xi - (g.u f.theta + g.theta)
  return {g.unit * f.unit, g.unit * f.theta + g.theta};
}

UnitAffineMap inverse(const UnitAffineMap& f) {
  QuadElem inv = f.unit.inverse();
  return {inv, -(inv * f.theta)};
}

std::string PlanePoint::str() const { return "(" + x.str() + ", " + y.str() + ")"; }

QuadElem fixed_element(const UnitAffineMap& f) {
  QuadElem d = f.unit - Rat(1);
  if (d.is_zero()) throw Error(Err::precondition, "fixed point of a translation");
  return f.theta / d;
}

PlanePoint fixed_point(const UnitAffineMap& f) {
  QuadElem z = fixed_element(f);
  return {QuadElem(z.m(), z.x()), QuadElem(z.m(), z.y())};
}

LineConstraint LineConstraint::pulled_back(const UnitAffineMap& f) const {
  return {embedding, (value + f.theta) / f.unit};
}

std::string LineConstraint::str() const {
  QuadElem v = embedding == 1 ? value : value.conj();
  return std::string(embedding == 1 ? "x + y sqrt m" : "x - y sqrt m") + " = " + v.str();
}

LineConstraint trapped_point_line(const UnitAffineMap& f, int embedding) {
  if (embedding != 1 && embedding != 2) throw Error(Err::precondition, "embedding must be 1 or 2");
  QuadElem u = embedding == 1 ? f.unit : f.unit.conj();
  // |u|_j > 1, exactly
  if (!(abs(u) > QuadElem(u.m(), 1))) throw Error(Err::valuation, "unit does not expand at embedding " + std::to_string(embedding));
  return {embedding, fixed_element(f)};
}

PlanePoint intersect(const LineConstraint& a, const LineConstraint& b) {
  if (a.embedding == b.embedding) throw Error(Err::precondition, "need one constraint per embedding");
  const LineConstraint& p = a.embedding == 1 ? a : b;
  const LineConstraint& q = a.embedding == 1 ? b : a;
  long m = p.value.m();
  // s1 = x + y sqrt m, s2 = x - y sqrt m as real numbers in Q(sqrt m)
  QuadElem s1 = p.value, s2 = q.value.conj();
  QuadElem x = Rat(1, 2) * (s1 + s2);
  QuadElem y = (s1 - s2) / (Rat(2) * sqrt_m(m));
  return {x, y};
}

std::string RowVerdict::str() const {
  std::ostringstream os;
  os << (ok ? "PASS " : "FAIL ") << label << ": " << in_targets << " pieces in targets, " << covered << " covered";
  if (offending) os << ", left " << offending->str();
  return os.str();
}

RowVerdict verify_inclusion_row(const InclusionRow& row, const WitnessSearch& ws, int max_depth) {
  RowVerdict v;
  v.label = row.label;
  v.ok = true;
  const Rat &a = row.map.unit.x(), &b = row.map.unit.y();
  const long m = row.map.unit.m();
  std::vector<std::pair<Box, int>> stack;
  for (auto& s : row.source) stack.push_back({s, 0});
  while (!stack.empty()) {
    auto [s, d] = stack.back();
    stack.pop_back();
    Box img = transform_box(s, row.map);
    std::vector<Box> rest = box_minus_union(img, row.targets);
    if (rest.empty()) {
      ++v.in_targets;
      continue;
    }
    bool all = true;
    for (auto& r : rest)
      if (!ws.find(r)) {
        all = false;
        break;
      }
    if (all) {
      ++v.covered;
      continue;
    }
    if (d >= max_depth) {
      v.ok = false;
      v.offending = s;
      return v;
    }
    // halve the side that stretches the image more
    Rat cx = (abs_q(a) + abs_q(b)) * s.x.width(), cy = (abs_q(a) + abs_q(b) * m) * s.y.width();
    Rat mid = cx >= cy ? s.x.mid() : s.y.mid();
    Box lo = s, hi = s;
    if (cx >= cy) {
      lo.x.hi = mid;
      hi.x.lo = mid;
    } else {
      lo.y.hi = mid;
      hi.y.lo = mid;
    }
    stack.push_back({hi, d + 1});
    stack.push_back({lo, d + 1});
  }
  return v;
}

std::vector<RowVerdict> verify_inclusion_table(const std::vector<InclusionRow>& rows, long m, const Rat& k,
                                               const CoverMode& mode, int max_depth) {
  WitnessSearch ws(m, k, mode);
  std::vector<RowVerdict> out;
  for (auto& r : rows) out.push_back(verify_inclusion_row(r, ws, max_depth));
  return out;
}

void require_rows(const std::vector<RowVerdict>& v) {
  for (auto& r : v)
    if (!r.ok) throw Error(Err::row_failed, r.str());
}

namespace q69 {

namespace {
QuadElem q(const Rat& x, const Rat& y = 0) { return QuadElem(69, x, y); }
}  // namespace

QuadElem eps_bar() { return eps().conj(); }

UnitAffineMap alpha_map() { return {eps_bar(), q(-18, 2)}; }
UnitAffineMap beta_map() { return {eps(), q(18, 2)}; }

std::vector<InclusionRow> plain_inclusion_table() {
  const QuadElem e = eps(), eb = eps_bar();
  // "eps S - t" is the map with theta = t, "eps_bar S + t" has theta = -t
  return {
      {"eps S0 - (18+2r69) in S0 u S1", {S0()}, {e, q(18, 2)}, {S0(), S1()}},
      {"eps_bar S0 + (18-2r69) in S0 u S2", {S0()}, {eb, -q(18, -2)}, {S0(), S2()}},
      {"eps S1 - (18+2r69) in T", {S1()}, {e, q(18, 2)}, {T()}},
      {"eps_bar S1 + (18-2r69) in S0 u S2", {S1()}, {eb, -q(18, -2)}, {S0(), S2()}},
      {"eps S2 - (18+2r69) in S0 u S1", {S2()}, {e, q(18, 2)}, {S0(), S1()}},
      {"eps_bar S2 + (19-2r69) in T", {S2()}, {eb, -q(19, -2)}, {T()}},
      {"eps T - (61+7r69)/2 in S2", {T()}, {e, q(Rat(61, 2), Rat(7, 2))}, {S2()}},
      {"eps_bar T + (18-2r69) in S1", {T()}, {eb, -q(18, -2)}, {S1()}},
  };
}

std::vector<InclusionRow> weighted_inclusion_table() {
  const QuadElem e = eps(), eb = eps_bar();
  return {
      {"eps S1 - (18+2r69) in S1 u S2", {WS1()}, {e, q(18, 2)}, {WS1(), WS2()}},
      {"eps_bar S1 + (18-2r69) in S1 u -S2'", {WS1()}, {eb, -q(18, -2)}, {WS1(), WS2p().neg()}},
      {"eps S2 - (23+3r69) in S2'", {WS2()}, {e, q(23, 3)}, {WS2p()}},
      {"eps_bar S2 + (18-2r69) in S1", {WS2()}, {eb, -q(18, -2)}, {WS1()}},
      {"eps S2' + (18+2r69) in -S1", {WS2p()}, {e, -q(18, 2)}, {WS1().neg()}},
      {"eps_bar S2' - (23-3r69) in S2", {WS2p()}, {eb, q(23, -3)}, {WS2()}},
  };
}

PlanePoint s0_fixed_point() { return fixed_point(beta_map()); }

PlanePoint plain_trapped_point() {
  LineConstraint fwd = trapped_point_line(alpha_map(), 2);
  LineConstraint bwd = trapped_point_line(beta_map(), 1).shifted(q(1));  // P0 - 1 starts the chain
  return intersect(fwd, bwd);
}

PlanePoint weighted_trapped_point() {
  UnitAffineMap f1{-eps(), -q(23, 3)};  // P1 = -eps P0 + (23 + 3 sqrt 69)
  LineConstraint l1 = trapped_point_line(beta_map(), 1).pulled_back(beta_map()).pulled_back(f1);
  LineConstraint l2 = trapped_point_line(alpha_map(), 2).pulled_back(alpha_map());
  return intersect(l1, l2);
}

Box origin_neighbourhood() { return box_dec("-0.000001", "0.000001", "-0.000001", "0.000001"); }

}  // namespace q69

}  // namespace ewin
