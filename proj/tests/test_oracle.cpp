#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "dinv/oracle.hpp"
#include "dinv/plumbing.hpp"
#include "dinv/triplet.hpp"

using namespace dinv;

TEST_CASE("window enumeration of the 2-chain") {
  PlumbingGraph a2 = build_simple_linear(2);
  CHECK(initial_class_count(a2) == 4);
  InitialClassEnumerator en(a2);
  CHECK(en.count() == 4);
  std::vector<std::vector<int64_t>> got;
  CharVector k;
  while (en.next(k)) got.push_back(k.evals);
  CHECK(got == std::vector<std::vector<int64_t>>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
}

TEST_CASE("window sizes") {
  CHECK(initial_class_count(build_asl_graph(make_triplet(2, 3, 5))) == 256);
  // 2^34 * 5 states: over any reasonable budget.
  Int big = initial_class_count(build_asl_graph(make_triplet(5, 6, 29)));
  CHECK(big == (Int(1) << 34) * 5);
  CHECK_THROWS_AS(InitialClassEnumerator(build_asl_graph(make_triplet(5, 6, 29))),
                  budget_error);
  CHECK_THROWS_AS(initial_class_count(PlumbingGraph({1}, {})), std::invalid_argument);
}

TEST_CASE("full path examples") {
  PlumbingGraph a2 = build_simple_linear(2);
  PathOutcome po = run_full_path(a2, CharVector{{2, 2}});
  CHECK(po.verdict == Verdict::Bad);
  CHECK(po.terminal.evals == std::vector<int64_t>{-2, 4});

  PlumbingGraph a3 = build_simple_linear(3);
  po = run_full_path(a3, CharVector{{0, 2, 0}});
  CHECK(po.verdict == Verdict::Good);
  CHECK(po.terminal.evals == std::vector<int64_t>{0, -2, 0});
  CHECK(po.steps == 4);

  // No eval at -e: already terminal, zero moves.
  po = run_full_path(a3, CharVector{{0, 0, 0}});
  CHECK(po.verdict == Verdict::Good);
  CHECK(po.steps == 0);
  CHECK(po.terminal.evals == std::vector<int64_t>{0, 0, 0});
}

TEST_CASE("full path input validation") {
  PlumbingGraph a2 = build_simple_linear(2);
  CHECK_THROWS_AS(run_full_path(a2, CharVector{{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(run_full_path(a2, CharVector{{-2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(run_full_path(a2, CharVector{{4, 0}}), std::invalid_argument);
  // Step budget is a hard failure.
  PlumbingGraph a3 = build_simple_linear(3);
  CHECK_THROWS_AS(run_full_path(a3, CharVector{{0, 2, 0}}, 1), budget_error);
}

TEST_CASE("terminal classification tables") {
  auto t2 = classify_terminals(2);
  REQUIRE(t2.size() == 4);
  std::set<std::vector<int64_t>> good;
  for (auto& [k, out] : t2)
    if (out.verdict == Verdict::Good) good.insert(k.evals);
  CHECK(good == std::set<std::vector<int64_t>>{{0, 0}, {2, 0}, {0, 2}});
  CHECK(t2.at(CharVector{{2, 2}}).verdict == Verdict::Bad);

  auto t5 = classify_terminals(5);
  const PathOutcome& po = t5.at(CharVector{{0, 0, 2, 0, 0}});
  CHECK(po.verdict == Verdict::Good);
  CHECK(po.terminal.evals == std::vector<int64_t>{0, 0, -2, 0, 0});

  auto t4 = classify_terminals(4);
  const PathOutcome& zeros = t4.at(CharVector{{0, 0, 0, 0}});
  CHECK(zeros.verdict == Verdict::Good);
  CHECK(zeros.terminal.evals == std::vector<int64_t>{0, 0, 0, 0});

  CHECK_THROWS_AS(classify_terminals(0), std::invalid_argument);
  CHECK_THROWS_AS(classify_terminals(13), std::invalid_argument);
}

TEST_CASE("two or more 2-evals always go bad on chains up to 12") {
  for (int64_t t = 2; t <= 12; ++t) {
    auto table = classify_terminals(t);
    for (auto& [k, out] : table) {
      int twos = 0;
      for (int64_t e : k.evals) twos += (e == 2);
      if (twos >= 2) REQUIRE(out.verdict == Verdict::Bad);
    }
  }
}

TEST_CASE("oracle d-values") {
  OracleResult res = oracle_d(build_asl_graph(make_triplet(2, 3, 5)));
  CHECK(res.d_value == 2);
  CHECK(res.max_k_squared == 0);
  CHECK(res.enumerated == 256);
  CHECK(res.argmax.evals == std::vector<int64_t>(8, 0));

  res = oracle_d(build_asl_graph(make_triplet(3, 5, 7)));
  CHECK(res.d_value == 2);
  CHECK(res.max_k_squared == -4);
  CHECK(res.enumerated == 6144);

  res = oracle_d(build_asl_graph(make_triplet(3, 4, 11)));
  CHECK(res.d_value == 2);
  CHECK(res.max_k_squared == -7);
}

TEST_CASE("oracle rejects graphs outside its hypotheses") {
  CHECK_THROWS_AS(oracle_d(PlumbingGraph({1}, {})), std::invalid_argument);
  // Negative definite but determinant 3.
  CHECK_THROWS_AS(oracle_d(build_simple_linear(2)), std::invalid_argument);
  // Two bad vertices: valency 2 > 1 at both -1 vertices.
  PlumbingGraph two_bad({-3, -1, -4, -1, -3}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  REQUIRE(validate(two_bad).is_negative_definite);
  REQUIRE(validate(two_bad).bad_vertex_count == 2);
  CHECK_THROWS_AS(oracle_d(two_bad), std::invalid_argument);
  // Budget propagates.
  CHECK_THROWS_AS(oracle_d(build_asl_graph(make_triplet(5, 6, 29))), budget_error);
}

TEST_CASE("elkies congruence over the full window") {
  PlumbingGraph g = build_asl_graph(make_triplet(2, 3, 5));
  InitialClassEnumerator en(g);
  CharVector k;
  while (en.next(k)) {
    Rat deg = k_squared(g, k);
    REQUIRE(denominator(deg) == 1);
    Int v = numerator(deg) + 8;  // k^2 + |G| must be 0 mod 8
    REQUIRE(v % 8 == 0);
  }
}

TEST_CASE("degree is constant along every full path") {
  auto check_graph = [](const PlumbingGraph& g) {
    InitialClassEnumerator en(g);
    CharVector k;
    while (en.next(k)) {
      Rat deg = k_squared(g, k);
      bool constant = true;
      run_full_path(g, k, kDefaultStepBudget, VertexSelection::LowestId,
                    [&](const CharVector& step) {
                      if (k_squared(g, step) != deg) constant = false;
                    });
      REQUIRE(constant);
    }
  };
  check_graph(build_asl_graph(make_triplet(2, 3, 5)));
  for (int64_t t = 1; t <= 8; ++t) check_graph(build_simple_linear(t));
}

TEST_CASE("verdict does not depend on the vertex choice") {
  auto check_graph = [](const PlumbingGraph& g) {
    InitialClassEnumerator en(g);
    CharVector k;
    while (en.next(k)) {
      Verdict lo =
          run_full_path(g, k, kDefaultStepBudget, VertexSelection::LowestId).verdict;
      Verdict hi =
          run_full_path(g, k, kDefaultStepBudget, VertexSelection::HighestId).verdict;
      REQUIRE(lo == hi);
    }
  };
  for (int64_t t = 1; t <= 6; ++t) check_graph(build_simple_linear(t));
  check_graph(build_asl_graph(make_triplet(2, 3, 5)));
}

TEST_CASE("worker partitioning does not change the result") {
  PlumbingGraph g = build_asl_graph(make_triplet(3, 5, 7));
  OracleOptions serial;
  serial.workers = 1;
  OracleOptions wide;
  wide.workers = 4;
  OracleResult a = oracle_d(g, serial);
  OracleResult b = oracle_d(g, wide);
  CHECK(a.d_value == b.d_value);
  CHECK(a.max_k_squared == b.max_k_squared);
  CHECK(a.argmax == b.argmax);
  CHECK(a.enumerated == b.enumerated);
}
