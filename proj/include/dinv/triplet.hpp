#pragma once
//
// Validated (p,q,r) with pq + pr - qr = 1. Any common divisor of two entries
// divides the left side, so pairwise coprimality is automatic; it is still
// checked to catch carrier overflow bugs early.
//

#include <cstdint>
#include <string>

#include "dinv/arith.hpp"

namespace dinv {

struct Triplet {
  int64_t p = 0, q = 0, r = 0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Throws std::invalid_argument unless 0 < p < q < r and pq + pr - qr = 1.
Triplet make_triplet(int64_t p, int64_t q, int64_t r);

std::string to_string(const Triplet& t);

}  // namespace dinv
