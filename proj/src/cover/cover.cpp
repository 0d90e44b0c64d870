#include "ewin/cover/cover.hpp"

#include "ewin/error.hpp"
#include "ewin/exact/field.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <mutex>
#include <thread>

namespace ewin {

std::string CoverMode::str() const { return weighted ? "weighted at " + prime.str() : "plain"; }

namespace {

Rat dy(std::int64_t v) {
  Rat q(Int(static_cast<long>(v)));
  mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), DyBox::kShift);
  return q;
}

double dyd(std::int64_t v) { return std::ldexp(static_cast<double>(v), -DyBox::kShift); }

DyBox root_box(long m) {
  DyBox r;
  r.x1 = std::int64_t(1) << DyBox::kShift;
  r.y1 = std::int64_t(1) << (DyBox::kShift - (m % 4 == 1 ? 2 : 1));
  return r;
}

}  // namespace

Box DyBox::box() const { return make_box(dy(x0), dy(x1), dy(y0), dy(y1)); }

std::array<DyBox, 2> DyBox::split() const {
  DyBox a = *this, b = *this;
  if (x1 - x0 >= y1 - y0) {
    std::int64_t c = x0 + (x1 - x0) / 2;
    a.x1 = c;
    b.x0 = c;
  } else {
    std::int64_t c = y0 + (y1 - y0) / 2;
    a.y1 = c;
    b.y0 = c;
  }
  return {a, b};
}

bool DyBox::operator<(const DyBox& o) const {
  if (x0 != o.x0) return x0 < o.x0;
  if (y0 != o.y0) return y0 < o.y0;
  if (x1 != o.x1) return x1 < o.x1;
  return y1 < o.y1;
}

Box fundamental_region(long m) { return root_box(m).box(); }

// ---- witness search ----

WitnessSearch::WitnessSearch(long m, const Rat& k, const CoverMode& mode, int max_tier)
    : m_(m), k_(k), mode_(mode), J_(max_tier) {
  if (sgn(k) <= 0) throw Error(Err::precondition, "cover bound k must be positive");
  if (max_tier < 0 || max_tier > 12) throw Error(Err::precondition, "tier bound must lie in [0, 12]");
  if (mode.weighted && mode.prime.m != m) throw Error(Err::precondition, "weighted prime from another field");
  const QuadField& K = field(m);
  half_ = K.half();
  const QuadElem& eps = K.unit_plus();
  kd_ = k.get_d();
  mu_ = std::sqrt(K.mu_squared(k).get_d()) * (1 + 1e-9);
  sq_ = std::sqrt(static_cast<double>(m));
  QuadElem inv = eps.conj();  // norm +1
  for (int j = -J_; j <= J_; ++j) {
    QuadElem e = j >= 0 ? pow(eps, j) : pow(inv, -j);
    a_.push_back(e.x().get_d());
    b_.push_back(e.y().get_d());
    e1_.push_back(to_double(e));
    inv_pow_.push_back(j >= 0 ? pow(inv, j) : pow(eps, -j));
  }
}

QuadElem WitnessSearch::gamma(const Witness& w) const {
  QuadElem beta(m_, Rat(Int(static_cast<long>(w.bx2)), 2), Rat(Int(static_cast<long>(w.by2)), 2));
  return inv_pow_[w.tier + J_] * beta;
}

bool WitnessSearch::exact_ok(const Box& B, const QuadElem& g) const {
  RatInterval r = box_norm_bound(m_, B, g);
  return r.hi < k_ && -k_ < r.lo;
}

std::optional<std::array<Witness, 2>> WitnessSearch::find(const Box& B, int* nw) const {
  return find(B, B.x.lo.get_d(), B.x.hi.get_d(), B.y.lo.get_d(), B.y.hi.get_d(), nw);
}

std::optional<std::array<Witness, 2>> WitnessSearch::find(const Box& B, double x0, double x1, double y0, double y1,
                                                          int* nw) const {
  const double s = sq_, md = static_cast<double>(m_);
  const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2, hw = (x1 - x0) / 2, hh = (y1 - y0) / 2;
  const double lim = kd_ * (1 - 1e-9);
  constexpr long kTierCap = 4096;
  std::vector<std::pair<Witness, QuadElem>> good;  // weighted mode: exact-checked so far
  for (int t = 0; t <= 2 * J_; ++t) {
    int j = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
    int idx = j + J_;
    double e1 = e1_[idx], e2 = 1 / e1, a = a_[idx], b = b_[idx];
    double ex = std::fabs(a) * hw + md * std::fabs(b) * hh, ey = std::fabs(b) * hw + std::fabs(a) * hh;
    double hx = a * cx + md * b * cy, hy = b * cx + a * cy;
    double rx = std::min(mu_ + ex, mu_ + 4), ry = std::min(mu_ / s + ey, (mu_ + 4) / s);
    double by_lo = std::ceil(2 * (hy - ry)), by_hi = std::floor(2 * (hy + ry));
    double bx_lo = std::ceil(2 * (hx - rx)), bx_hi = std::floor(2 * (hx + rx));
    if ((by_hi - by_lo + 1) * (bx_hi - bx_lo + 1) > kTierCap) continue;
    double u0 = e1 * (x0 + y0 * s), u1 = e1 * (x1 + y1 * s);
    double v0 = e2 * (x0 - y1 * s), v1 = e2 * (x1 - y0 * s);
    for (double by2 = by_lo; by2 <= by_hi; by2 += 1) {
      auto iy = static_cast<std::int64_t>(by2);
      for (double bx2 = bx_lo; bx2 <= bx_hi; bx2 += 1) {
        auto ix = static_cast<std::int64_t>(bx2);
        if (half_ ? ((ix - iy) & 1) != 0 : ((ix & 1) != 0 || (iy & 1) != 0)) continue;
        double b1 = (bx2 + by2 * s) / 2, b2 = (bx2 - by2 * s) / 2;
        double U = std::max(std::fabs(u0 - b1), std::fabs(u1 - b1));
        double V = std::max(std::fabs(v0 - b2), std::fabs(v1 - b2));
        if (U * V >= lim) continue;
        Witness w{j, ix, iy};
        QuadElem g = gamma(w);
        if (!exact_ok(B, g)) continue;
        if (!mode_.weighted) {
          if (nw) *nw = 1;
          return std::array<Witness, 2>{w, w};
        }
        for (auto& [w0, g0] : good)
          if (!mode_.prime.contains(g - g0)) {
            if (nw) *nw = 2;
            return std::array<Witness, 2>{w0, w};
          }
        if (good.size() < 8) good.emplace_back(w, g);
      }
    }
  }
  return std::nullopt;
}

// ---- certificate ----

QuadElem CoverCertificate::witness(const Witness& w) const {
  const QuadField& K = field(m);
  QuadElem inv = K.unit_plus().conj();
  QuadElem beta(m, Rat(Int(static_cast<long>(w.bx2)), 2), Rat(Int(static_cast<long>(w.by2)), 2));
  return (w.tier >= 0 ? pow(inv, w.tier) : pow(K.unit_plus(), -w.tier)) * beta;
}

std::vector<Box> CoverCertificate::exceptional_boxes() const {
  std::vector<Box> out;
  out.reserve(exceptional.size());
  for (auto& e : exceptional) out.push_back(e.box());
  return out;
}

Rat CoverCertificate::exceptional_area() const {
  Rat a = 0;
  for (auto& e : exceptional) a += e.box().area();
  return a;
}

namespace {

void put_rat(std::string& o, const Rat& q) {
  o += '"';
  o += rat_str(q);
  o += '"';
}

void put_box(std::string& o, const Box& b) {
  o += '[';
  put_rat(o, b.x.lo);
  o += ',';
  put_rat(o, b.x.hi);
  o += ',';
  put_rat(o, b.y.lo);
  o += ',';
  put_rat(o, b.y.hi);
  o += ']';
}

}  // namespace

// keys in sorted order and no whitespace, the compact form a JSON library re-dumps to
std::string CoverCertificate::to_json() const {
  std::string body;
  body.reserve(256 + covered.size() * 160 + exceptional.size() * 100);
  body += "{\"complete\":";
  body += complete ? "true" : "false";
  body += ",\"covered\":[";
  // cache powers of the unit for the witnesses
  const QuadField& K = field(m);
  std::vector<QuadElem> pw;
  int J = 0;
  for (auto& c : covered)
    for (int i = 0; i < c.nw; ++i) J = std::max(J, std::abs(c.w[i].tier));
  for (int j = -J; j <= J; ++j)
    pw.push_back(j >= 0 ? pow(K.unit_plus().conj(), j) : pow(K.unit_plus(), -j));
  bool first = true;
  for (auto& c : covered) {
    if (!first) body += ',';
    first = false;
    body += "{\"box\":";
    put_box(body, c.box.box());
    body += ",\"w\":[";
    for (int i = 0; i < c.nw; ++i) {
      if (i) body += ',';
      const Witness& w = c.w[i];
      QuadElem g = pw[w.tier + J] * QuadElem(m, Rat(Int(static_cast<long>(w.bx2)), 2), Rat(Int(static_cast<long>(w.by2)), 2));
      body += '[';
      put_rat(body, g.x());
      body += ',';
      put_rat(body, g.y());
      body += ']';
    }
    body += "]}";
  }
  body += "],\"depth\":" + std::to_string(depth) + ",\"exceptional\":[";
  first = true;
  for (auto& e : exceptional) {
    if (!first) body += ',';
    first = false;
    put_box(body, e.box());
  }
  body += "],\"format\":\"ewin-cover-1\",\"k\":\"" + rat_str(k) + "\",\"m\":" + std::to_string(m) +
          ",\"max_depth\":" + std::to_string(max_depth) + ",\"mode\":\"" + (mode.weighted ? "weighted" : "plain") + "\"";
  if (mode.weighted) body += ",\"prime\":{\"p\":\"" + int_str(mode.prime.p) + "\",\"root\":\"" + int_str(mode.prime.root) + "\"}";
  body += ",\"region\":";
  put_box(body, fundamental_region(m));
  body += ",\"subdivision\":\"halve the longer side, x on ties\",\"symmetry\":\"translates by O_K and negation\"}";
  return "{\"body\":" + body + ",\"checksum\":\"" + fnv1a64(body) + "\"}";
}

std::string fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 15];
  return out;
}

// ---- engine ----

namespace {

struct Node {
  DyBox b;
  int depth;
};

struct Sink {
  std::vector<CoveredBox> covered;
  std::vector<DyBox> exceptional;
  int depth = 0;
};

// returns false when the box is left for subdivision
bool settle(const WitnessSearch& ws, const Node& n, Sink& out) {
  int nw = 0;
  Box B = n.b.box();
  auto w = ws.find(B, dyd(n.b.x0), dyd(n.b.x1), dyd(n.b.y0), dyd(n.b.y1), &nw);
  if (!w) return false;
  out.covered.push_back({n.b, *w, nw});
  out.depth = std::max(out.depth, n.depth);
  return true;
}

}  // namespace

CoverCertificate cover(const CoverOptions& opt) {
  if (sgn(opt.k) <= 0) throw Error(Err::precondition, "cover needs k > 0");
  if (opt.max_depth < 0 || opt.max_depth > 110) throw Error(Err::precondition, "max_depth must lie in [0, 110]");
  WitnessSearch ws(opt.m, opt.k, opt.mode, opt.max_tier);
  CoverCertificate cert;
  cert.m = opt.m;
  cert.k = opt.k;
  cert.mode = opt.mode;
  cert.max_depth = opt.max_depth;

  std::atomic<long> processed{0};
  std::atomic<bool> exhausted{false};
  Sink head;
  // breadth-first to a small frontier, then depth-first per frontier box
  const int d0 = std::min(opt.max_depth, 6);
  std::deque<Node> q{{root_box(opt.m), 0}};
  std::vector<Node> frontier;
  while (!q.empty()) {
    Node n = q.front();
    q.pop_front();
    ++processed;
    if (settle(ws, n, head)) continue;
    if (n.depth >= opt.max_depth) {
      head.exceptional.push_back(n.b);
      head.depth = std::max(head.depth, n.depth);
      continue;
    }
    auto kids = n.b.split();
    for (auto& c : kids) {
      if (n.depth + 1 < d0)
        q.push_back({c, n.depth + 1});
      else
        frontier.push_back({c, n.depth + 1});
    }
  }

  std::atomic<size_t> next{0};
  int nworkers = std::max(1, opt.workers);
  std::vector<Sink> sinks(nworkers);
  auto work = [&](Sink& out) {
    std::vector<Node> stack;
    for (size_t i; (i = next++) < frontier.size();) {
      stack.push_back(frontier[i]);
      while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        if (exhausted.load(std::memory_order_relaxed) || ++processed > opt.max_boxes) {
          exhausted = true;
          out.exceptional.push_back(n.b);
          continue;
        }
        if (settle(ws, n, out)) continue;
        if (n.depth >= opt.max_depth) {
          out.exceptional.push_back(n.b);
          out.depth = std::max(out.depth, n.depth);
          continue;
        }
        auto kids = n.b.split();
        stack.push_back({kids[1], n.depth + 1});
        stack.push_back({kids[0], n.depth + 1});
      }
    }
  };
  if (nworkers == 1) {
    work(sinks[0]);
  } else {
    std::vector<std::thread> th;
    for (int i = 0; i < nworkers; ++i) th.emplace_back(work, std::ref(sinks[i]));
    for (auto& t : th) t.join();
  }
  sinks.push_back(std::move(head));
  for (auto& s : sinks) {
    cert.covered.insert(cert.covered.end(), s.covered.begin(), s.covered.end());
    cert.exceptional.insert(cert.exceptional.end(), s.exceptional.begin(), s.exceptional.end());
    cert.depth = std::max(cert.depth, s.depth);
  }
  std::sort(cert.covered.begin(), cert.covered.end(), [](const CoveredBox& a, const CoveredBox& b) { return a.box < b.box; });
  std::sort(cert.exceptional.begin(), cert.exceptional.end());
  cert.complete = !exhausted;
  cert.boxes_processed = processed;
  return cert;
}

// ---- box unions ----

std::vector<Box> lattice_copies(long m, const std::vector<Box>& boxes, const Box& window, bool with_negatives) {
  const bool half = field(m).half();
  std::vector<Box> src = boxes;
  if (with_negatives)
    for (auto& b : boxes) src.push_back(b.neg());
  std::vector<Box> out;
  for (auto& b : src) {
    // translates (a + t/2, t/2) with t even unless half
    Int t0 = floor_q(2 * (window.y.lo - b.y.hi)) - 1, t1 = ceil_q(2 * (window.y.hi - b.y.lo)) + 1;
    for (Int t = t0; t <= t1; ++t) {
      if (!half && t % 2 != 0) continue;
      Rat ty(t, 2), txh = half ? Rat(t, 2) : Rat(0);
      Int a0 = floor_q(window.x.lo - b.x.hi - txh) - 1, a1 = ceil_q(window.x.hi - b.x.lo - txh) + 1;
      for (Int a = a0; a <= a1; ++a) {
        Box c = b.shifted(Rat(a) + txh, ty);
        if (c.intersects(window)) out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<Box> box_minus_union(const Box& B, const std::vector<Box>& U) {
  std::vector<Box> pieces{B};
  for (auto& u : U) {
    std::vector<Box> next;
    for (auto& p : pieces) {
      if (!p.intersects(u) || (p.x.hi == u.x.lo || u.x.hi == p.x.lo || p.y.hi == u.y.lo || u.y.hi == p.y.lo)) {
        next.push_back(p);
        continue;
      }
      // up to four slabs of p outside u
      Rat xl = std::max(p.x.lo, u.x.lo), xh = std::min(p.x.hi, u.x.hi);
      if (p.x.lo < u.x.lo) next.push_back({RatInterval(p.x.lo, u.x.lo), p.y});
      if (u.x.hi < p.x.hi) next.push_back({RatInterval(u.x.hi, p.x.hi), p.y});
      if (p.y.lo < u.y.lo) next.push_back({RatInterval(xl, xh), RatInterval(p.y.lo, u.y.lo)});
      if (u.y.hi < p.y.hi) next.push_back({RatInterval(xl, xh), RatInterval(u.y.hi, p.y.hi)});
    }
    pieces.swap(next);
    if (pieces.empty()) break;
  }
  return pieces;
}

bool covered_by_union(const Box& B, const std::vector<Box>& U) { return box_minus_union(B, U).empty(); }

}  // namespace ewin
