#pragma once

// Closed-form d-invariant of Sigma(p,q,r) for pq+pr-qr = 1.
//
// For odd p the d-invariant is (max f + q + r)/4 where
//   f(a,m) = -(q+r)a^2 + 4qam - 4(q-p)m^2 - 4m
// is maximized over the lattice {-p,-p+2,...,p} x {0,...,(p-1)/2}.
// f(.,m) is concave in a with critical point c(m) = 2qm/(q+r), so each
// slice's optimum sits at the odd integer(s) nearest c(m) and the scan
// costs O(p) exact operations. For even p, d = (q+r)/4 with no lattice
// maximizer. Slice analytics (delta, center, radius) describe the region
// where f(a,m) >= f(1,1); membership is decided by that integer
// comparison, never by radicals.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dinv/arith.hpp"
#include "dinv/triplet.hpp"

namespace dinv {

struct LatticePoint {
  int64_t a = 0;  // odd, |a| <= p
  int64_t m = 0;  // 0 <= m <= (p-1)/2
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct RegionSlice {
  int64_t m = 0;
  Int delta;            // 4[2m-(q+r)]^2 - 16(q+r)(p-1)
  Rat center;           // 2qm/(q+r)
  Rat radius_sq;        // delta / (2(q+r))^2, negative for an empty slice
  int64_t nearest_odd = 0;
  bool tie = false;     // center was an even integer; both neighbors optimal
  Rat dist_to_odd_sq;   // (nearest_odd - center)^2
  Int f_at_best;        // f(nearest_odd, m)
  bool in_region = false;  // f_at_best >= f(1,1)
};

enum class Method { EvenP, LatticeScan, Oracle };

std::string to_string(Method m);

struct DInvariantResult {
  Triplet triplet;
  int64_t d = 0;
  std::optional<Int> max_f;            // absent for even p
  std::optional<LatticePoint> argmax;  // absent for even p
  Method method = Method::LatticeScan;
  bool qhb_obstructed = false;  // d != 0: no rational homology ball bound
  std::string pretzel_note;     // "K(-p,q,r) not rationally slice"
};

Int f_eval(const Triplet& t, int64_t x, int64_t y);
Int delta(const Triplet& t, int64_t m);

// Closest odd integer to c. An exact tie (c an even integer) reports c+1
// with the flag set; f takes equal values at both neighbors then.
std::pair<int64_t, bool> nearest_odd(const Rat& c);

RegionSlice region_slice(const Triplet& t, int64_t m);
DInvariantResult d_invariant(const Triplet& t);

// One slice per m = 0..(p-1)/2. Odd p only.
std::vector<RegionSlice> region_dump(const Triplet& t);

}  // namespace dinv
