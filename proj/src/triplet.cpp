#include "dinv/triplet.hpp"

#include <numeric>
#include <stdexcept>

namespace dinv {

Triplet make_triplet(int64_t p, int64_t q, int64_t r) {
  if (p <= 0 || !(p < q && q < r))
    throw std::invalid_argument("triplet: need 0 < p < q < r");
  if (Int(p) * q + Int(p) * r - Int(q) * r != 1)
    throw std::invalid_argument("triplet: pq + pr - qr != 1 for (" + std::to_string(p) + "," +
                                std::to_string(q) + "," + std::to_string(r) + ")");
  if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
    throw std::logic_error("triplet: entries not pairwise coprime");
  return Triplet{p, q, r};
}

std::string to_string(const Triplet& t) {
  return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ")";
}

}  // namespace dinv
