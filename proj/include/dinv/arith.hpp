#pragma once
//
// Exact scalar layer: arbitrary-precision integers/rationals plus the small
// number-theoretic kit the plumbing side needs (negative continued fractions,
// the Seifert coefficient equation, divisor pairing). All growth-prone
// arithmetic happens in cpp_int; int64 is used only as a carrier for
// quantities bounded by ~p^2.
//

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dinv {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

using std::int64_t;

// Floor division (quotient rounded toward -infinity). den != 0.
Int floor_div(const Int& num, const Int& den);

// floor of an exact rational.
Int rat_floor(const Rat& x);

// Canonical rendering "num/den", denominator always present and positive.
std::string rat_to_string(const Rat& x);

Int int_of(int64_t v);
int64_t checked_int64(const Int& v);  // throws std::overflow_error if it does not fit

using CFExpansion = std::vector<int64_t>;

// Negative (ceiling-type) continued fraction num/den = t1 - 1/(t2 - 1/(...)).
// Recurrence: t = ceil(num/den), then (num, den) <- (den, t*den - num) until
// the remainder vanishes; den < num keeps every term >= 2.
// Requires 0 < den < num and gcd(num, den) = 1.
CFExpansion cf_expand(int64_t num, int64_t den);

// Evaluate [t1, ..., tm] from the right. Rejects empty input and any partial
// value of 0 (which would make the next step divide by zero).
Rat cf_evaluate(const CFExpansion& terms);

// Seifert coefficients of the canonical negative-definite star plumbing:
//   e0*p*q*r + p'*q*r + p*q'*r + p*q*r' = -1,  1 <= x' <= x-1 for each arm.
struct SeifertData {
  int64_t p = 0, q = 0, r = 0;
  int64_t e0 = 0;
  int64_t p_prime = 0, q_prime = 0, r_prime = 0;
};

// Unique solution for pairwise-coprime p,q,r >= 2; solved by modular
// inversion per arm. Throws std::invalid_argument outside the domain.
SeifertData solve_seifert_diophantine(int64_t p, int64_t q, int64_t r);

// All (s, n/s) with s <= n/s, s ascending. n >= 1.
std::vector<std::pair<int64_t, int64_t>> divisor_pairs(int64_t n);

}  // namespace dinv
