#include "ewin/exact/rational.hpp"

#include "ewin/error.hpp"

#include <cctype>

namespace ewin {

const char* err_name(Err e) {
  switch (e) {
    case Err::precondition: return "precondition-violated";
    case Err::budget: return "budget-exceeded";
    case Err::not_integral: return "not-integral";
    case Err::no_solution: return "no-solution";
    case Err::precision: return "precision-insufficient";
    case Err::chain: return "chain-not-wellformed";
    case Err::valuation: return "valuation-condition-violated";
    case Err::depth: return "depth-exhausted";
    case Err::fixture_missing: return "fixture-missing";
    case Err::fixture_incomplete: return "fixture-incomplete";
    case Err::row_failed: return "row-failed";
    case Err::usage: return "usage";
  }
  return "error";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Err::precondition, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(Err::usage, "not an integer: " + std::string(s));
  Int z(std::string(s), 10);
  return neg ? Int(-z) : z;
}

}  // namespace

Rat parse_rat(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(Err::usage, "empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos)
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));

  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Int ez = parse_int(s.substr(e + 1));
    if (!ez.fits_slong_p() || abs(ez) > 10000) throw Error(Err::usage, "exponent too large");
    exp10 = ez.get_si();
    s = s.substr(0, e);
  }
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw Error(Err::usage, "bad decimal: " + std::string(s));
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw Error(Err::usage, "bad rational: " + std::string(s));
    digits = std::string(s);
  }
  Rat q{Int(digits.empty() ? std::string("0") : digits, 10)};
  Int ten = pow_z(10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 < 0) q /= ten; else q *= ten;
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

std::string rat_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_str(const Int& z) { return z.get_str(); }

Int floor_q(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_q(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int round_q(const Rat& q) {
  Int f = floor_q(q);
  Rat frac = q - f;
  Rat half(1, 2);
  if (frac < half) return f;
  if (frac > half) return f + 1;
  return sgn(q) > 0 ? f : Int(f + 1);  // tie toward zero
}

Rat abs_q(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

Int pow_z(const Int& z, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}

Rat pow_q(const Rat& q, long e) {
  if (e < 0) {
    if (sgn(q) == 0) throw Error(Err::precondition, "0 to a negative power");
    return pow_q(Rat(1) / q, -e);
  }
  Rat r(pow_z(q.get_num(), e), pow_z(q.get_den(), e));
  r.canonicalize();
  return r;
}

long vp(const Int& z, const Int& p) {
  if (z == 0) throw Error(Err::precondition, "valuation of 0");
  Int t = abs(z);
  long v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    t /= p;
    ++v;
  }
  return v;
}

long vp(const Rat& q, const Int& p) { return vp(q.get_num(), p) - vp(q.get_den(), p); }

std::string decimal(const Rat& q, int places, bool truncate) {
  Int scale = pow_z(10, places);
  Rat a = abs_q(q) * scale + (truncate ? Rat(0) : Rat(1, 2));
  Int n = floor_q(a);
  std::string digits = n.get_str();
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = sgn(q) < 0 && n != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

bool is_squarefree(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(Err::precondition, "isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace ewin
