#include "dinv/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace dinv {

Int initial_class_count(const PlumbingGraph& g) {
  Int n(1);
  for (int v = 0; v < g.size(); ++v) {
    if (g.weight(v) >= 0)
      throw std::invalid_argument("initial_class_count: window needs negative weights");
    n *= Int(-g.weight(v));
  }
  return n;
}

InitialClassEnumerator::InitialClassEnumerator(const PlumbingGraph& g, std::uint64_t budget)
    : g_(g) {
  Int total = initial_class_count(g);
  if (total > budget)
    throw budget_error("oracle infeasible: " + total.str() + " window vectors exceed budget " +
                       std::to_string(budget));
  count_ = total.convert_to<std::uint64_t>();
  const int n = g.size();
  lo_.resize(n);
  hi_.resize(n);
  for (int v = 0; v < n; ++v) {
    lo_[v] = g.weight(v) + 2;
    hi_[v] = -g.weight(v);
  }
  cur_ = lo_;
}

bool InitialClassEnumerator::next(CharVector& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    int j = g_.size() - 1;
    for (; j >= 0; --j) {
      if (cur_[j] < hi_[j]) {
        cur_[j] += 2;
        break;
      }
      cur_[j] = lo_[j];
    }
    if (j < 0) {
      done_ = true;
      return false;
    }
  }
  out.evals = cur_;
  return true;
}

namespace {

// Adjacency flattened for the hot loop.
struct FlatGraph {
  int n = 0;
  std::vector<int64_t> weight, neg;  // e_j and -e_j
  std::vector<int> adj_off, adj;

  explicit FlatGraph(const PlumbingGraph& g) : n(g.size()) {
    weight.resize(n);
    neg.resize(n);
    adj_off.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
      weight[v] = g.weight(v);
      neg[v] = -g.weight(v);
      adj_off[v + 1] = adj_off[v] + g.valency(v);
    }
    adj.reserve(adj_off[n]);
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors(v)) adj.push_back(w);
  }
};

// Lazy-deletion heap over vertex ids; push may duplicate, pop revalidates.
struct MoveQueue {
  std::vector<int> heap;
  bool lowest_first = true;

  void clear() { heap.clear(); }
  void push(int v) {
    heap.push_back(lowest_first ? -v : v);
    std::push_heap(heap.begin(), heap.end());
  }
  int pop() {  // -1 when empty
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end());
      int v = heap.back();
      heap.pop_back();
      return lowest_first ? -v : v;
    }
    return -1;
  }
};

// Walks one full path in place. evals must start characteristic and within
// the window. When complete_final_move is set, the move that creates a bad
// eval is still applied in full so evals holds the true terminal class.
Verdict walk_path(const FlatGraph& fg, std::vector<int64_t>& evals, MoveQueue& queue,
                  std::uint64_t step_budget, bool complete_final_move, std::uint64_t* steps_out,
                  const std::function<void(const std::vector<int64_t>&)>& observer = {}) {
  queue.clear();
  for (int v = 0; v < fg.n; ++v)
    if (evals[v] == fg.neg[v]) queue.push(v);
  if (observer) observer(evals);

  std::uint64_t steps = 0;
  bool bad = false;
  for (;;) {
    int v = -1;
    while ((v = queue.pop()) >= 0)
      if (evals[v] == fg.neg[v]) break;
    if (v < 0) break;  // no movable vertex: Good terminal
    if (++steps > step_budget) throw budget_error("full path exceeded the step budget");

    // k += 2 PD(v): <k,w> += 2 I_vw.
    evals[v] += 2 * fg.weight[v];
    for (int i = fg.adj_off[v]; i < fg.adj_off[v + 1]; ++i) {
      int w = fg.adj[i];
      evals[w] += 2;
      if (evals[w] > fg.neg[w]) {
        bad = true;
        if (!complete_final_move) {
          if (steps_out) *steps_out = steps;
          return Verdict::Bad;
        }
      } else if (evals[w] == fg.neg[w]) {
        queue.push(w);
      }
    }
    if (observer) observer(evals);
    if (bad) break;
  }
  if (steps_out) *steps_out = steps;
  return bad ? Verdict::Bad : Verdict::Good;
}

}  // namespace

PathOutcome run_full_path(const PlumbingGraph& g, const CharVector& k,
                          std::uint64_t step_budget, VertexSelection selection,
                          const std::function<void(const CharVector&)>& observer) {
  if (!is_characteristic(g, k))
    throw std::invalid_argument("run_full_path: vector is not characteristic");
  for (int v = 0; v < g.size(); ++v)
    if (k.evals[v] < g.weight(v) + 2 || k.evals[v] > -g.weight(v))
      throw std::invalid_argument("run_full_path: vector is outside the adjunction window");

  FlatGraph fg(g);
  MoveQueue queue;
  queue.lowest_first = (selection == VertexSelection::LowestId);
  std::vector<int64_t> evals = k.evals;

  std::function<void(const std::vector<int64_t>&)> relay;
  if (observer)
    relay = [&observer](const std::vector<int64_t>& e) { observer(CharVector{e}); };

  PathOutcome out;
  out.verdict = walk_path(fg, evals, queue, step_budget, /*complete_final_move=*/true,
                          &out.steps, relay);
  out.terminal = CharVector{std::move(evals)};
  return out;
}

namespace {

struct ScanBest {
  bool set = false;
  Int k2;
  std::vector<int64_t> evals;
};

// One window partition (vertex 0 pinned) with incremental k^2 maintenance:
// changing coordinate j by delta sends k^2 to k^2 + delta*(2 s_j + delta W_jj)
// where s = W k, and s += delta * W row j.
template <class T>
void scan_partition(const FlatGraph& fg, const std::vector<T>& w_flat, int64_t v0_value,
                    std::uint64_t step_budget, ScanBest& best_all, ScanBest& best_good) {
  const int n = fg.n;
  std::vector<int64_t> lo(n), hi(n), cur(n);
  for (int v = 0; v < n; ++v) {
    lo[v] = fg.weight[v] + 2;
    hi[v] = fg.neg[v];
    cur[v] = lo[v];
  }
  cur[0] = v0_value;

  std::vector<T> s(n, T(0));
  T k2(0);
  for (int i = 0; i < n; ++i) {
    T si(0);
    for (int j = 0; j < n; ++j) si += w_flat[std::size_t(i) * n + j] * T(cur[j]);
    s[i] = si;
    k2 += T(cur[i]) * si;
  }
  auto set_coord = [&](int j, int64_t nv) {
    T delta(nv - cur[j]);
    k2 += delta * (2 * s[j] + delta * w_flat[std::size_t(j) * n + j]);
    const T* row = &w_flat[std::size_t(j) * n];
    for (int i = 0; i < n; ++i) s[i] += delta * row[i];
    cur[j] = nv;
  };

  MoveQueue queue;
  std::vector<int64_t> scratch(n);
  auto consider = [&](ScanBest& best) {
    Int val(k2);
    if (!best.set || val > best.k2) {
      best.set = true;
      best.k2 = val;
      best.evals = cur;
    }
  };
  for (;;) {
    consider(best_all);
    scratch = cur;
    if (walk_path(fg, scratch, queue, step_budget, /*complete_final_move=*/false, nullptr) ==
        Verdict::Good)
      consider(best_good);
    int j = n - 1;
    for (; j >= 1; --j) {
      if (cur[j] < hi[j]) {
        set_coord(j, cur[j] + 2);
        break;
      }
      set_coord(j, lo[j]);
    }
    if (j < 1) break;
  }
}

}  // namespace

OracleResult oracle_d(const PlumbingGraph& g, const OracleOptions& opts) {
  GraphReport rep = validate(g);
  if (!rep.is_negative_definite)
    throw std::invalid_argument("oracle_d: graph must be negative definite");
  if (rep.bad_vertex_count > 1)
    throw std::invalid_argument("oracle_d: more than one bad vertex");
  if (!rep.is_unimodular)
    throw std::invalid_argument("oracle_d: graph must be unimodular");
  Int total = initial_class_count(g);
  if (total > opts.enum_budget)
    throw budget_error("oracle infeasible: " + total.str() + " window vectors exceed budget " +
                       std::to_string(opts.enum_budget));

  const int n = g.size();
  FlatGraph fg(g);

  // Unimodular, so the exact inverse is integral.
  RatMatrix inv = exact_inverse(g.intersection_matrix());
  std::vector<Int> w_int(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& e = inv(i, j);
      if (denominator(e) != 1) throw std::logic_error("oracle_d: non-integral inverse entry");
      w_int[std::size_t(i) * n + j] = numerator(e);
    }

  // int64 is safe when the worst-case bilinear value leaves headroom.
  Int bound(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      bound += abs(w_int[std::size_t(i) * n + j]) * Int(fg.neg[i]) * Int(fg.neg[j]);
  const bool use_int64 = bound < (Int(1) << 60);

  std::vector<int64_t> v0_values;
  for (int64_t x = g.weight(0) + 2; x <= -g.weight(0); x += 2) v0_values.push_back(x);
  const std::size_t nparts = v0_values.size();

  std::vector<ScanBest> part_all(nparts), part_good(nparts);
  auto run_part = [&](std::size_t pi) {
    if (use_int64) {
      std::vector<int64_t> w64(w_int.size());
      for (std::size_t i = 0; i < w_int.size(); ++i) w64[i] = checked_int64(w_int[i]);
      scan_partition<int64_t>(fg, w64, v0_values[pi], opts.step_budget, part_all[pi],
                              part_good[pi]);
    } else {
      scan_partition<Int>(fg, w_int, v0_values[pi], opts.step_budget, part_all[pi],
                          part_good[pi]);
    }
  };

  unsigned workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, nparts));
  if (workers <= 1) {
    for (std::size_t pi = 0; pi < nparts; ++pi) run_part(pi);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        try {
          for (std::size_t pi; (pi = cursor.fetch_add(1)) < nparts;) run_part(pi);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          cursor.store(nparts);  // stop handing out work
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  // First maximizer in stream order: earliest partition wins ties.
  auto reduce = [&](const std::vector<ScanBest>& parts) {
    const ScanBest* best = nullptr;
    for (const auto& p : parts)
      if (p.set && (!best || p.k2 > best->k2)) best = &p;
    if (!best) throw std::logic_error("oracle_d: empty enumeration");
    return best;
  };
  const ScanBest* all = reduce(part_all);
  const ScanBest* good = reduce(part_good);
  if (all->k2 != good->k2)
    throw std::logic_error("oracle_d: window maximum differs from Good-restricted maximum");

  OracleResult res;
  res.max_k_squared = all->k2;
  res.d_value = Rat(all->k2 + n) / 4;
  res.argmax = CharVector{all->evals};
  res.enumerated = total.convert_to<std::uint64_t>();
  return res;
}

std::map<CharVector, PathOutcome> classify_terminals(int64_t t) {
  if (t < 1 || t > 12)
    throw std::invalid_argument("classify_terminals: need 1 <= t <= 12");
  PlumbingGraph g = build_simple_linear(t);
  InitialClassEnumerator en(g);
  std::map<CharVector, PathOutcome> table;
  CharVector k;
  while (en.next(k)) table[k] = run_full_path(g, k);
  return table;
}

}  // namespace dinv
