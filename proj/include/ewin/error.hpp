#pragma once

#include <stdexcept>
#include <string>

namespace ewin {

enum class Err {
  precondition,
  budget,          // factorization / enumeration / period search budgets
  not_integral,
  no_solution,
  precision,
  chain,
  valuation,
  depth,
  fixture_missing,
  fixture_incomplete,
  row_failed,
  usage,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace ewin
