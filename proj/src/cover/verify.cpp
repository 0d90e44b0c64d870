// Deliberately standalone: only GMP and the JSON parser, nothing from the producer.
#include "ewin/cover/verify.hpp"

#include "ewin/error.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace ewin {

namespace {

using json = nlohmann::json;

struct Fail {
  std::string why;
};

mpq_class q_of(const json& j) {
  if (!j.is_string()) throw Fail{"expected a \"num/den\" string, got " + j.dump()};
  mpq_class q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw Fail{"bad rational " + j.dump()};
  q.canonicalize();
  return q;
}

using QBox = std::array<mpq_class, 4>;  // x0 x1 y0 y1

QBox box_of(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Fail{"box needs 4 endpoints: " + j.dump()};
  QBox b{q_of(j[0]), q_of(j[1]), q_of(j[2]), q_of(j[3])};
  if (!(b[0] < b[1] && b[2] < b[3])) throw Fail{"empty box " + j.dump()};
  return b;
}

std::string key(const QBox& b) {
  return b[0].get_str() + "," + b[1].get_str() + "," + b[2].get_str() + "," + b[3].get_str();
}

std::string hash64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool squarefree(long m) {
  if (m < 2) return false;
  for (long d = 2; d * d <= m; ++d)
    if (m % (d * d) == 0) return false;
  return true;
}

// range of t^2 for t in [a, b]
void sq_range(const mpq_class& a, const mpq_class& b, mpq_class& lo, mpq_class& hi) {
  mpq_class a2 = a * a, b2 = b * b;
  hi = a2 > b2 ? a2 : b2;
  if (sgn(a) <= 0 && sgn(b) >= 0)
    lo = 0;
  else
    lo = a2 < b2 ? a2 : b2;
}

struct Ctx {
  long m = 0;
  bool half = false;
  mpq_class k;
  bool weighted = false;
  mpz_class p, root;
};

void check_integral(const Ctx& c, const mpq_class& gx, const mpq_class& gy) {
  mpq_class tx = 2 * gx, ty = 2 * gy;
  tx.canonicalize();
  ty.canonicalize();
  if (tx.get_den() != 1 || ty.get_den() != 1) throw Fail{"witness not integral"};
  mpz_class a = tx.get_num(), b = ty.get_num();
  bool ok = c.half ? ((a - b) % 2 == 0) : (a % 2 == 0 && b % 2 == 0);
  if (!ok) throw Fail{"witness " + gx.get_str() + " + " + gy.get_str() + " sqrt m not integral"};
}

void check_bound(const Ctx& c, const QBox& b, const mpq_class& gx, const mpq_class& gy) {
  mpq_class xl, xh, yl, yh;
  sq_range(b[0] - gx, b[1] - gx, xl, xh);
  sq_range(b[2] - gy, b[3] - gy, yl, yh);
  mpq_class lo = xl - c.m * yh, hi = xh - c.m * yl;
  if (!(hi < c.k && lo > -c.k)) throw Fail{"witness bound fails on box " + key(b)};
}

bool in_prime(const Ctx& c, const mpq_class& dx, const mpq_class& dy) {
  mpq_class tx = 2 * dx, ty = 2 * dy;
  tx.canonicalize();
  ty.canonicalize();
  mpz_class r = tx.get_num() + ty.get_num() * c.root;
  return r % c.p == 0;
}

}  // namespace

std::string CertificateCheck::str() const {
  std::ostringstream os;
  os << (sound ? "sound" : "UNSOUND") << (complete ? ", complete" : ", incomplete") << ": " << covered
     << " covered boxes, " << exceptional << " exceptional boxes";
  if (!reason.empty()) os << " (" << reason << ")";
  return os.str();
}

CertificateCheck verify_certificate(const std::string& text) {
  CertificateCheck out;
  try {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw Fail{std::string("not JSON: ") + e.what()};
    }
    if (!doc.contains("body") || !doc.contains("checksum")) throw Fail{"missing body or checksum"};
    const json& B = doc.at("body");
    if (hash64(B.dump()) != doc.at("checksum").get<std::string>()) throw Fail{"checksum mismatch"};
    if (B.value("format", "") != "ewin-cover-1") throw Fail{"unknown format"};
    Ctx c;
    c.m = B.at("m").get<long>();
    if (!squarefree(c.m)) throw Fail{"m not squarefree"};
    c.half = c.m % 4 == 1;
    c.k = q_of(B.at("k"));
    if (sgn(c.k) <= 0) throw Fail{"k must be positive"};
    std::string mode = B.at("mode").get<std::string>();
    if (mode == "weighted") {
      c.weighted = true;
      c.p = mpz_class(B.at("prime").at("p").get<std::string>());
      c.root = mpz_class(B.at("prime").at("root").get<std::string>());
      if (c.p < 3 || mpz_probab_prime_p(c.p.get_mpz_t(), 30) == 0) throw Fail{"weighted prime must be an odd prime"};
      if ((c.root * c.root - c.m) % c.p != 0) throw Fail{"root^2 != m mod p"};
    } else if (mode != "plain") {
      throw Fail{"unknown mode " + mode};
    }
    if (B.at("symmetry").get<std::string>() != "translates by O_K and negation" ||
        B.at("subdivision").get<std::string>() != "halve the longer side, x on ties")
      throw Fail{"unknown symmetry or subdivision rule"};
    // [0,1] x [0,1/4] is a fundamental domain mod O_K and -1 when O_K holds (1/2, 1/2)
    QBox region = box_of(B.at("region"));
    QBox want{mpq_class(0), mpq_class(1), mpq_class(0), mpq_class(1, c.half ? 4 : 2)};
    if (key(region) != key(want)) throw Fail{"region is not the fundamental domain for m"};
    const int max_depth = B.at("max_depth").get<int>();

    std::unordered_map<std::string, int> leaves;
    for (auto& cb : B.at("covered")) {
      QBox b = box_of(cb.at("box"));
      const json& ws = cb.at("w");
      size_t need = c.weighted ? 2 : 1;
      if (ws.size() != need) throw Fail{"wrong witness count on " + key(b)};
      std::vector<std::pair<mpq_class, mpq_class>> g;
      for (auto& w : ws) {
        if (!w.is_array() || w.size() != 2) throw Fail{"witness needs two coordinates"};
        g.emplace_back(q_of(w[0]), q_of(w[1]));
        check_integral(c, g.back().first, g.back().second);
        check_bound(c, b, g.back().first, g.back().second);
      }
      if (c.weighted && in_prime(c, g[0].first - g[1].first, g[0].second - g[1].second))
        throw Fail{"witness difference lies in the prime on " + key(b)};
      if (!leaves.emplace(key(b), 0).second) throw Fail{"duplicate box " + key(b)};
      ++out.covered;
    }
    for (auto& e : B.at("exceptional")) {
      QBox b = box_of(e);
      if (!leaves.emplace(key(b), 1).second) throw Fail{"duplicate box " + key(b)};
      ++out.exceptional;
    }
    // the leaves must be exactly the leaves of a subdivision tree of the region
    std::vector<std::pair<QBox, int>> stack{{region, 0}};
    size_t hit = 0;
    while (!stack.empty()) {
      auto [b, d] = stack.back();
      stack.pop_back();
      if (leaves.count(key(b))) {
        ++hit;
        continue;
      }
      if (d >= max_depth) throw Fail{"region not tiled near " + key(b)};
      QBox l = b, r = b;
      if (b[1] - b[0] >= b[3] - b[2]) {
        mpq_class mid = (b[0] + b[1]) / 2;
        l[1] = mid;
        r[0] = mid;
      } else {
        mpq_class mid = (b[2] + b[3]) / 2;
        l[3] = mid;
        r[2] = mid;
      }
      stack.push_back({r, d + 1});
      stack.push_back({l, d + 1});
    }
    if (hit != leaves.size()) throw Fail{"boxes outside the subdivision of the region"};
    out.complete = B.at("complete").get<bool>();
    out.sound = true;
  } catch (const Fail& f) {
    out.sound = false;
    out.reason = f.why;
  } catch (const json::exception& e) {
    out.sound = false;
    out.reason = std::string("malformed certificate: ") + e.what();
  }
  return out;
}

CertificateCheck verify_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::fixture_missing, "cannot open certificate " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return verify_certificate(ss.str());
}

}  // namespace ewin
