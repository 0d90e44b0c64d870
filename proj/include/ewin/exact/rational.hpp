#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ewin {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// "n/d", "n", "-0.00085", "1e-3"; decimals convert exactly
Rat parse_rat(std::string_view s);
// canonical "num/den", den always printed
std::string rat_str(const Rat& q);
std::string int_str(const Int& z);

Int floor_q(const Rat& q);
Int ceil_q(const Rat& q);
// nearest integer, exact half rounds toward zero
Int round_q(const Rat& q);

inline int sgn(const Rat& q) { return ::sgn(q); }
inline int sgn(const Int& z) { return ::sgn(z); }
Rat abs_q(const Rat& q);
Rat pow_q(const Rat& q, long e);
Int pow_z(const Int& z, unsigned long e);

// v_p of a nonzero rational
long vp(const Rat& q, const Int& p);
long vp(const Int& z, const Int& p);

// fixed decimal, rounded half away from zero, or truncated (the published tables truncate)
std::string decimal(const Rat& q, int places, bool truncate = false);

bool is_squarefree(long n);
Int isqrt(const Int& n);

}  // namespace ewin
