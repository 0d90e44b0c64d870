#pragma once

#include "ewin/cover/box.hpp"

#include <string>
#include <vector>

namespace ewin::q69 {

// exceptional boxes at k = 7/8 (usual norm)
Box S0();
Box S1();
Box S2();
Box T();
// exceptional boxes at k = 99/100 for the weighted norm at (23, sqrt 69)
Box WS1();
Box WS2();
Box WS2p();

struct NamedBox {
  std::string name;
  Box box;
};

// the sets with their negatives, e.g. "S0", "-S0"
std::vector<NamedBox> plain_sets();
std::vector<NamedBox> weighted_sets();

}  // namespace ewin::q69
