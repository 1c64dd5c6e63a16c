#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "dinv/arith.hpp"

using namespace dinv;

TEST_CASE("cf_expand pinned expansions") {
  CHECK(cf_expand(3, 1) == CFExpansion{3});
  CHECK(cf_expand(7, 6) == CFExpansion{2, 2, 2, 2, 2, 2});
  CHECK(cf_expand(7, 2) == CFExpansion{4, 2});
}

TEST_CASE("cf_expand rejects bad inputs") {
  CHECK_THROWS_AS(cf_expand(3, 3), std::invalid_argument);   // den not < num
  CHECK_THROWS_AS(cf_expand(3, 5), std::invalid_argument);   // den > num
  CHECK_THROWS_AS(cf_expand(3, 0), std::invalid_argument);   // den <= 0
  CHECK_THROWS_AS(cf_expand(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(cf_expand(6, 4), std::invalid_argument);   // gcd 2
}

TEST_CASE("cf_evaluate pinned values") {
  CHECK(cf_evaluate(CFExpansion{3}) == Rat(3));
  CHECK(cf_evaluate(CFExpansion{2, 2}) == Rat(3, 2));
  CHECK(cf_evaluate(CFExpansion{2, 2, 2, 2, 2, 2}) == Rat(7, 6));
}

TEST_CASE("cf_evaluate rejects empty and zero-denominator expansions") {
  CHECK_THROWS_AS(cf_evaluate(CFExpansion{}), std::invalid_argument);
  // Tail [1,1] evaluates to 0, so the next step divides by zero.
  CHECK_THROWS_AS(cf_evaluate(CFExpansion{2, 1, 1}), std::invalid_argument);
}

TEST_CASE("cf round-trip for all coprime fractions up to 500") {
  for (int64_t n = 2; n <= 500; ++n)
    for (int64_t d = 1; d < n; ++d) {
      if (std::gcd(n, d) != 1) continue;
      CFExpansion cf = cf_expand(n, d);
      for (int64_t t : cf) REQUIRE(t >= 2);
      REQUIRE(cf_evaluate(cf) == Rat(n, d));
    }
}

TEST_CASE("seifert solver pinned solutions") {
  SeifertData s = solve_seifert_diophantine(3, 5, 7);
  CHECK(s.e0 == -2);
  CHECK(s.p_prime == 1);
  CHECK(s.q_prime == 4);
  CHECK(s.r_prime == 6);

  s = solve_seifert_diophantine(2, 3, 7);
  CHECK(s.e0 == -1);
  CHECK(s.p_prime == 1);
  CHECK(s.q_prime == 1);
  CHECK(s.r_prime == 1);

  s = solve_seifert_diophantine(11, 12, 131);
  CHECK(s.e0 == -2);
  CHECK(s.p_prime == 1);
  CHECK(s.q_prime == 11);
  CHECK(s.r_prime == 130);
}

TEST_CASE("seifert solver rejects invalid triples") {
  CHECK_THROWS_AS(solve_seifert_diophantine(2, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(solve_seifert_diophantine(6, 10, 15), std::invalid_argument);
  CHECK_THROWS_AS(solve_seifert_diophantine(1, 2, 3), std::invalid_argument);
}

namespace {

// Count solutions over the full boxes by brute force. Safe in int64 since
// the caller keeps pqr <= 10^4.
int count_solutions(int64_t p, int64_t q, int64_t r) {
  int found = 0;
  int64_t pqr = p * q * r;
  for (int64_t pp = 1; pp < p; ++pp)
    for (int64_t qp = 1; qp < q; ++qp)
      for (int64_t rp = 1; rp < r; ++rp)
        if ((pp * q * r + p * qp * r + p * q * rp + 1) % pqr == 0) ++found;
  return found;
}

}  // namespace

TEST_CASE("seifert solution unique for every coprime triple with pqr <= 10^4") {
  for (int64_t p = 2; p * p * p <= 10000; ++p)
    for (int64_t q = p + 1; p * q * q <= 10000; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (int64_t r = q + 1; p * q * r <= 10000; ++r) {
        if (std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
        REQUIRE(count_solutions(p, q, r) == 1);
        SeifertData s = solve_seifert_diophantine(p, q, r);
        Int lhs = Int(s.e0) * p * q * r + Int(s.p_prime) * q * r + Int(p) * s.q_prime * r +
                  Int(p) * q * s.r_prime;
        REQUIRE(lhs == -1);
      }
    }
}

TEST_CASE("triples with pq+pr-qr = 1 solve to (-2, 1, q-1, r-1)") {
  const int64_t cases[][3] = {{2, 3, 5}, {3, 4, 11}, {3, 5, 7}, {5, 7, 17}, {7, 8, 55}};
  for (auto [p, q, r] : cases) {
    SeifertData s = solve_seifert_diophantine(p, q, r);
    CHECK(s.e0 == -2);
    CHECK(s.p_prime == 1);
    CHECK(s.q_prime == q - 1);
    CHECK(s.r_prime == r - 1);
  }
}

TEST_CASE("divisor_pairs pinned lists") {
  using P = std::vector<std::pair<int64_t, int64_t>>;
  CHECK(divisor_pairs(8) == P{{1, 8}, {2, 4}});
  CHECK(divisor_pairs(120) ==
        P{{1, 120}, {2, 60}, {3, 40}, {4, 30}, {5, 24}, {6, 20}, {8, 15}, {10, 12}});
  CHECK(divisor_pairs(1) == P{{1, 1}});
  CHECK(divisor_pairs(9) == P{{1, 9}, {3, 3}});
}

TEST_CASE("rationals stay reduced with positive denominators") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  // The two-argument constructor rejects negative denominators; division
  // normalizes.
  CHECK(Rat(3) / -2 == Rat(-3, 2));
  CHECK(rat_to_string(Rat(3) / -2) == "-3/2");
  CHECK(denominator(Rat(3) / -2) == 2);
  CHECK(rat_to_string(Rat(4, 2)) == "2/1");
  Rat a(7, 13);
  CHECK(a * Rat(13, 7) == 1);
}

TEST_CASE("floor helpers handle negatives") {
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(rat_floor(Rat(-1, 3)) == -1);
  CHECK(rat_floor(Rat(5, 3)) == 1);
  CHECK(rat_floor(Rat(-6, 3)) == -2);
}

TEST_CASE("checked_int64 guards overflow") {
  CHECK(checked_int64(Int("9223372036854775807")) == INT64_MAX);
  CHECK_THROWS_AS(checked_int64(Int("9223372036854775808")), std::overflow_error);
  CHECK(checked_int64(Int("-9223372036854775808")) == INT64_MIN);
  CHECK_THROWS_AS(checked_int64(Int("-9223372036854775809")), std::overflow_error);
}
