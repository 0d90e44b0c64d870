#pragma once

#include "ewin/cover/box.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ewin {

// one link of a chain; count < 0 means "any number m >= 0 of repetitions"
struct ChainStep {
  UnitAffineMap map;
  long count = 1;
};

// points of `start`, pushed through `entry` and then the steps, have embedding `embedding`
// (1: x + y sqrt m, 2: x - y sqrt m) strictly below (upper) or above (!upper) `target`
struct ChainPlan {
  Box start;
  std::optional<UnitAffineMap> entry;
  std::vector<ChainStep> steps;
  int embedding = 1;
  bool upper = true;
  QuadElem target;
  // maps allowed inside `steps`; empty means unrestricted
  std::vector<UnitAffineMap> allowed;
};

struct ChainVerdict {
  bool holds = false;
  bool vacuous = false;
  QuadElem bound;  // proved bound after the last step
  bool strict = false;
  std::vector<std::string> log;
};

// throws chain when a step map is not allowed or steps come without an entry
ChainVerdict chain_bound_check(const ChainPlan& plan);

// alpha: xi -> eps^{-1} xi + 18 - 2 sqrt 69 and beta: xi -> eps xi - (18 + 2 sqrt 69)
UnitAffineMap map_alpha();
UnitAffineMap map_beta();

// the two chains of the M2 argument, as inclusions T -> S2 -> S0... -> S1 -> Q and back
ChainPlan forward_chain(long repeats = -1);
ChainPlan backward_chain(long repeats = -1);

struct SignArgument {
  bool holds = false;
  QuadElem alpha, alpha_conj, product;  // product = -alpha alpha'
  std::vector<std::string> log;
};

// with xi > xi0, xi' < xi0' and B enclosing the point, |N(xi - g)| < -alpha alpha' for
// alpha = xi0 - g, alpha' = xi0' - g'
SignArgument sign_argument(const Box& B, const QuadElem& xi0, const QuadElem& xi0c, const QuadElem& g);

// x + y < a + b/a for positive x, y with x < a, y < a, xy < b; throws precondition
bool sum_bound(const Rat& x, const Rat& y, const Rat& a, const Rat& b);

}  // namespace ewin
