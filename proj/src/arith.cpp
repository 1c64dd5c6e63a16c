#include "dinv/arith.hpp"

#include <numeric>
#include <stdexcept>

#include <boost/integer/mod_inverse.hpp>

namespace dinv {

Int floor_div(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("floor_div: zero denominator");
  Int q = num / den;  // truncates toward zero
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

Int rat_floor(const Rat& x) {
  // cpp_rational keeps the denominator positive and the fraction reduced.
  return floor_div(numerator(x), denominator(x));
}

std::string rat_to_string(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Int int_of(int64_t v) { return Int(v); }

int64_t checked_int64(const Int& v) {
  if (v < std::numeric_limits<int64_t>::min() || v > std::numeric_limits<int64_t>::max())
    throw std::overflow_error("checked_int64: value out of range");
  return v.convert_to<int64_t>();
}

CFExpansion cf_expand(int64_t num, int64_t den) {
  if (den <= 0 || den >= num)
    throw std::invalid_argument("cf_expand: need 0 < den < num");
  if (std::gcd(num, den) != 1)
    throw std::invalid_argument("cf_expand: num and den must be coprime");
  CFExpansion terms;
  Int n = num, d = den;
  while (true) {
    Int t = -floor_div(-n, d);  // ceil(n/d)
    terms.push_back(checked_int64(t));
    Int rem = t * d - n;        // 0 <= rem < d
    if (rem == 0) break;
    n = d;
    d = rem;
  }
  return terms;
}

Rat cf_evaluate(const CFExpansion& terms) {
  if (terms.empty()) throw std::invalid_argument("cf_evaluate: empty expansion");
  Rat v = terms.back();
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (v == 0) throw std::invalid_argument("cf_evaluate: zero partial denominator");
    v = Rat(*it) - 1 / v;
  }
  return v;
}

namespace {

// Exhaustive search over the coefficient ranges; used to cross-check the
// modular route on small inputs.
SeifertData seifert_brute_force(int64_t p, int64_t q, int64_t r) {
  const Int pqr = Int(p) * q * r;
  for (int64_t pp = 1; pp < p; ++pp)
    for (int64_t qp = 1; qp < q; ++qp)
      for (int64_t rp = 1; rp < r; ++rp) {
        Int rest = Int(pp) * q * r + Int(p) * qp * r + Int(p) * q * rp;
        Int num = -1 - rest;
        if (num % pqr == 0)
          return SeifertData{p, q, r, checked_int64(num / pqr), pp, qp, rp};
      }
  throw std::logic_error("seifert_brute_force: no solution");
}

}  // namespace

SeifertData solve_seifert_diophantine(int64_t p, int64_t q, int64_t r) {
  if (p < 2 || q < 2 || r < 2)
    throw std::invalid_argument("solve_seifert_diophantine: each of p,q,r must be >= 2");
  if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
    throw std::invalid_argument("solve_seifert_diophantine: p,q,r must be pairwise coprime");

  // Reducing the equation mod p leaves p'*q*r = -1 (mod p), and likewise for
  // the other two arms; coprimality makes each factor invertible.
  auto arm = [](int64_t m, const Int& others) -> int64_t {
    Int inv = boost::integer::mod_inverse(Int(((others % m) + m) % m), Int(m));
    Int x = ((-inv) % m + m) % m;
    return checked_int64(x);
  };
  SeifertData s;
  s.p = p;
  s.q = q;
  s.r = r;
  s.p_prime = arm(p, Int(q) * r);
  s.q_prime = arm(q, Int(p) * r);
  s.r_prime = arm(r, Int(p) * q);

  const Int pqr = Int(p) * q * r;
  Int num = -1 - (Int(s.p_prime) * q * r + Int(p) * s.q_prime * r + Int(p) * q * s.r_prime);
  if (num % pqr != 0) throw std::logic_error("solve_seifert_diophantine: non-integral e0");
  s.e0 = checked_int64(num / pqr);

  if (pqr <= 5000) {
    SeifertData b = seifert_brute_force(p, q, r);
    if (b.e0 != s.e0 || b.p_prime != s.p_prime || b.q_prime != s.q_prime ||
        b.r_prime != s.r_prime)
      throw std::logic_error("solve_seifert_diophantine: modular/brute-force disagreement");
  }
  return s;
}

std::vector<std::pair<int64_t, int64_t>> divisor_pairs(int64_t n) {
  if (n < 1) throw std::invalid_argument("divisor_pairs: n must be positive");
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t s = 1; s <= n / s; ++s)
    if (n % s == 0) out.emplace_back(s, n / s);
  return out;
}

}  // namespace dinv
