#pragma once

// Command-line surface. Subcommands: d, triplets, family, region, graph,
// oracle-check. Exit codes: 0 success, 2 invalid input, 3 budget exceeded,
// 4 verification mismatch. DINV_ORACLE_BUDGET overrides the default oracle
// enumeration budget. Rendering helpers are exposed so tests can check the
// exact bytes commands produce.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dinv/asl_fast.hpp"
#include "dinv/families.hpp"
#include "dinv/oracle.hpp"
#include "dinv/triplet.hpp"

namespace dinv {

// A cross-check that should have agreed did not (exit code 4).
struct mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string render_d_json(const DInvariantResult& res);
std::string render_d_json_oracle(const Triplet& t, const OracleResult& res);
std::string render_triplets_csv(int64_t p);
std::string render_triplets_table(int64_t p);
std::string render_family_csv(const FamilyReport& rep);
std::string render_region_csv(const Triplet& t);

struct OracleCheckOutcome {
  std::string json;
  bool all_match = true;
};

// Fast-vs-oracle on every feasible triple with p <= 5 plus terminal
// classification on linear chains. inject_fault biases the fast value by 2
// to prove the mismatch path fires.
OracleCheckOutcome oracle_check(std::uint64_t max_budget, bool inject_fault = false);

std::uint64_t default_enum_budget();  // env override or built-in default

int run_cli(int argc, const char* const* argv);

}  // namespace dinv
