#pragma once

// Parametric families of triples solving pq+pr-qr = 1, enumeration of all
// triples sharing a given smallest entry p, and batch d-invariant checks.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dinv/asl_fast.hpp"
#include "dinv/triplet.hpp"

namespace dinv {

struct FamilySpec {
  enum class Kind { Polynomial, Fibonacci };

  std::string name;
  // Coefficients in ascending degree: c0 + c1*n + c2*n^2. Ignored for the
  // Fibonacci family, which is (F(2n+1), F(2n+2), F(2n+3)).
  std::array<int64_t, 3> p{}, q{}, r{};
  std::optional<std::array<int64_t, 3>> expected_d;
  int64_t n_min = 1;
  Kind kind = Kind::Polynomial;
};

struct FamilyRow {
  int64_t n = 0;
  Triplet triplet;
  int64_t d_computed = 0;
  std::optional<int64_t> d_expected;
  bool match = true;
  std::optional<LatticePoint> argmax;
  bool qhb_obstructed = false;
};

struct FamilyReport {
  std::string family_name;
  bool has_expected = false;
  std::vector<FamilyRow> rows;
  int64_t mismatches = 0;
};

// Seven built-ins: families "1".."5" with expected d-values 2n, 2n, 2n,
// 6n+2, n^2+n, then "consecutive" (p,p+1,p^2+p-1) and "fibonacci".
std::vector<FamilySpec> builtin_families();

// The built-in with the given name, if any.
std::optional<FamilySpec> find_family(const std::string& name);

int64_t eval_poly(const std::array<int64_t, 3>& c, int64_t n);
Triplet family_triplet(const FamilySpec& spec, int64_t n);

// All triples (p, p+s, p+(p^2-1)/s) over divisor pairs s < (p^2-1)/s,
// ordered by increasing q. Requires p >= 2.
std::vector<Triplet> enumerate_triplets(int64_t p);

FamilyReport verify_family(const FamilySpec& spec, int64_t n_lo, int64_t n_hi);

std::string family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const std::string& text);

}  // namespace dinv
