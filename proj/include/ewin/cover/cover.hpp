#pragma once

#include "ewin/cover/box.hpp"
#include "ewin/ideals/prime.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ewin {

struct CoverMode {
  bool weighted = false;
  PrimeIdealQ prime;  // weighted mode only

  static CoverMode plain() { return {}; }
  static CoverMode weighted_at(const PrimeIdealQ& P) { return {true, P}; }
  std::string str() const;
};

struct CoverOptions {
  long m = 69;
  Rat k = make_rat(7, 8);
  CoverMode mode;
  int max_depth = 40;
  int max_tier = 8;           // unit powers eps^j, |j| <= max_tier
  long max_boxes = 50000000;  // processed boxes before giving up (certificate marked incomplete)
  int workers = 1;
};

// witness gamma = eps_plus^(-tier) * (bx2 + by2 sqrt m) / 2
struct Witness {
  int tier = 0;
  std::int64_t bx2 = 0, by2 = 0;
};

// dyadic box, coordinates are multiples of 2^-kShift
struct DyBox {
  static constexpr int kShift = 60;
  std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;

  Box box() const;
  std::array<DyBox, 2> split() const;  // longer side, x on ties
  bool operator<(const DyBox& o) const;
  bool operator==(const DyBox& o) const { return x0 == o.x0 && x1 == o.x1 && y0 == o.y0 && y1 == o.y1; }
};

struct CoveredBox {
  DyBox box;
  std::array<Witness, 2> w;
  int nw = 1;
};

// the region covered: fundamental domain of O_K modulo -1, [0,1] x [0,1/4] for m = 1 mod 4
// and [0,1] x [0,1/2] otherwise
Box fundamental_region(long m);

struct CoverCertificate {
  long m = 0;
  Rat k;
  CoverMode mode;
  int max_depth = 0;
  int depth = 0;  // deepest box emitted
  bool complete = true;
  std::vector<CoveredBox> covered;
  std::vector<DyBox> exceptional;
  long boxes_processed = 0;

  QuadElem witness(const Witness& w) const;
  std::vector<Box> exceptional_boxes() const;
  Rat exceptional_area() const;
  // canonical JSON with checksum
  std::string to_json() const;
};

CoverCertificate cover(const CoverOptions& opt);

// finds witnesses for an arbitrary box in the plane, the search used by cover()
class WitnessSearch {
 public:
  WitnessSearch(long m, const Rat& k, const CoverMode& mode, int max_tier = 8);
  std::optional<std::array<Witness, 2>> find(const Box& B, int* nw = nullptr) const;
  std::optional<std::array<Witness, 2>> find(const Box& B, double x0, double x1, double y0, double y1,
                                             int* nw) const;
  QuadElem gamma(const Witness& w) const;
  long m() const { return m_; }

 private:
  bool exact_ok(const Box& B, const QuadElem& g) const;
  long m_;
  Rat k_;
  CoverMode mode_;
  int J_;
  bool half_;
  double kd_, mu_, sq_;
  std::vector<double> e1_, a_, b_;  // eps^j in embedding 1 and as a + b sqrt m
  std::vector<QuadElem> inv_pow_;   // eps^-j
};

// lattice translates of the boxes and their negatives meeting the window
std::vector<Box> lattice_copies(long m, const std::vector<Box>& boxes, const Box& window, bool with_negatives = true);
// B inside the union (exact, by rectangle subtraction)
bool covered_by_union(const Box& B, const std::vector<Box>& U);
// the pieces of B outside the union
std::vector<Box> box_minus_union(const Box& B, const std::vector<Box>& U);

// FNV-1a, 64 bit, lowercase hex
std::string fnv1a64(const std::string& s);

}  // namespace ewin
