#pragma once

#include "ewin/cubic/cubic.hpp"
#include "ewin/ideals/obstruction.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ewin {

struct CubicFactor {
  CubicPrimeIdeal prime;
  long exponent = 0;
};

// C1: weighted minimum must drop below 1 (lower endpoint)
// upper: weighted prime in the numerator (upper endpoint)
// satellite: minimizing translate of another exceptional point
enum class PointRole { c1, upper, satellite };

struct CubicPoint {
  std::string name;
  PointRole role = PointRole::c1;
  std::array<Rat, 3> coords;
  Rat abs_norm;
  std::vector<CubicFactor> factorization;
  std::optional<std::array<Rat, 3>> congruent;  // where the minimum is quoted, same class mod O_K
  std::optional<std::pair<std::array<Rat, 3>, std::array<Rat, 3>>> quotient;  // num / den form
};

struct CubicFixture {
  long discriminant = 0;
  std::array<Int, 3> poly;  // x^3 + a x^2 + b x + c
  std::array<Int, 3> beta_num{Int(0), Int(0), Int(1)};
  Int beta_den = 1;
  std::optional<CubicPrimeIdeal> prime;
  Rat m1;
  long table_np = 0, table_m = 0;  // rows known only from the table
  std::vector<CubicPoint> points;
  std::optional<Threshold> expected_lo, expected_hi;
  std::vector<std::string> assumed;
  std::string source;
};

CubicFixture load_cubic_fixture(const std::string& path);

struct CubicCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CubicReport {
  long discriminant = 0;
  std::vector<CubicCheck> checks;
  WeightSet window;
  std::vector<std::string> assumed;
  bool ok() const;
  std::string str() const;
};

CubicReport verify_cubic_fixture(const CubicFixture& fx);

}  // namespace ewin
