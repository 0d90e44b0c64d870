#include "ewin/cover/sets.hpp"

namespace ewin::q69 {

Box S0() { return box_dec("-0.00085", "0.00085", "0.1739", "0.1742"); }
Box S1() { return box_dec("0.01917", "0.02005", "0.1763", "0.1765"); }
Box S2() { return box_dec("-0.02005", "-0.01917", "0.1763", "0.1765"); }
Box T() { return box_dec("0.4999", "0.5001", "0.2341", "0.2342"); }

Box WS1() { return box_dec("-0.0084", "0.0084", "0.1739", "0.175"); }
Box WS2() { return box_dec("0.2086", "0.2087", "0.19903", "0.19904"); }
Box WS2p() { return box_dec("0.2086", "0.2087", "-0.19904", "-0.19903"); }

namespace {
std::vector<NamedBox> with_negatives(std::vector<NamedBox> v) {
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) v.push_back({"-" + v[i].name, v[i].box.neg()});
  return v;
}
}  // namespace

std::vector<NamedBox> plain_sets() { return with_negatives({{"S0", S0()}, {"S1", S1()}, {"S2", S2()}, {"T", T()}}); }

std::vector<NamedBox> weighted_sets() {
  return with_negatives({{"S1", WS1()}, {"S2", WS2()}, {"S2'", WS2p()}});
}

}  // namespace ewin::q69
