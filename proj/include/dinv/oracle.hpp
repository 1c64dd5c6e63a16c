#pragma once
//
// Brute-force d-invariant oracle on small negative-definite unimodular trees
// with at most one bad vertex: enumerate every characteristic vector in the
// adjunction window e_j+2 <= <k,v_j> <= -e_j, walk each full path (adding
// 2PD(v) at a vertex with <k,v> = -e_v until a Good or Bad terminal), and
// maximize k^2. d = (max k^2 + |G|)/4.
//

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "dinv/plumbing.hpp"

namespace dinv {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 1ull << 28;
inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

enum class Verdict { Good, Bad };
enum class VertexSelection { LowestId, HighestId };

struct PathOutcome {
  Verdict verdict = Verdict::Good;
  CharVector terminal;
  std::uint64_t steps = 0;
};

// Number of window vectors, exactly prod(-e_j).
Int initial_class_count(const PlumbingGraph& g);

// Streams the window vectors without materializing them: vertex 0 varies
// slowest, the last vertex fastest. Construction refuses graphs whose window
// exceeds the budget ("oracle infeasible").
class InitialClassEnumerator {
 public:
  explicit InitialClassEnumerator(const PlumbingGraph& g,
                                  std::uint64_t budget = kDefaultEnumBudget);

  std::uint64_t count() const { return count_; }
  // Fills `out` with the next vector; false once the stream is exhausted.
  bool next(CharVector& out);

 private:
  const PlumbingGraph& g_;
  std::uint64_t count_ = 0;
  std::vector<int64_t> lo_, hi_, cur_;
  bool done_ = false, started_ = false;
};

// One full path from an in-window characteristic vector, lowest-id-first
// vertex selection by default. The optional observer sees every class on the
// path, the initial one included. Exceeding the step budget is a hard error.
PathOutcome run_full_path(const PlumbingGraph& g, const CharVector& k,
                          std::uint64_t step_budget = kDefaultStepBudget,
                          VertexSelection selection = VertexSelection::LowestId,
                          const std::function<void(const CharVector&)>& observer = {});

struct OracleResult {
  Rat d_value;
  Int max_k_squared;
  CharVector argmax;  // first window vector attaining the max, in stream order
  std::uint64_t enumerated = 0;
};

struct OracleOptions {
  std::uint64_t enum_budget = kDefaultEnumBudget;
  std::uint64_t step_budget = kDefaultStepBudget;
  unsigned workers = 0;  // 0 = ask the hardware
};

// Maximizes k^2 over the whole window and, independently, over the vectors
// whose full path is Good; the two maxima must agree (they are the two
// right-hand expressions of the d formula) or a logic_error is thrown.
OracleResult oracle_d(const PlumbingGraph& g, const OracleOptions& opts = {});

// Exhaustive Good/Bad table for the path graph A_t, t <= 12.
std::map<CharVector, PathOutcome> classify_terminals(int64_t t);

}  // namespace dinv
