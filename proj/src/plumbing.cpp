#include "dinv/plumbing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "json.hpp"

namespace dinv {

PlumbingGraph::PlumbingGraph(std::vector<int64_t> weights,
                             std::vector<std::pair<int, int>> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  const int n = static_cast<int>(weights_.size());
  if (n < 1) throw std::invalid_argument("plumbing graph: need at least one vertex");
  if (static_cast<int>(edges_.size()) != n - 1)
    throw std::invalid_argument("plumbing graph: a tree on n vertices has n-1 edges");
  adj_.assign(n, {});
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw std::invalid_argument("plumbing graph: bad edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  // n-1 edges + connected <=> tree.
  std::vector<char> seen(n, 0);
  std::deque<int> work{0};
  seen[0] = 1;
  int reached = 1;
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        work.push_back(w);
      }
  }
  if (reached != n) throw std::invalid_argument("plumbing graph: not connected");
}

IntMatrix PlumbingGraph::intersection_matrix() const {
  const int n = size();
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int v = 0; v < n; ++v) m(v, v) = weights_[v];
  for (auto& [u, v] : edges_) {
    m(u, v) = 1;
    m(v, u) = 1;
  }
  return m;
}

bool is_characteristic(const PlumbingGraph& g, const CharVector& k) {
  if (static_cast<int>(k.evals.size()) != g.size()) return false;
  for (int v = 0; v < g.size(); ++v)
    if (((k.evals[v] + g.weight(v)) % 2 + 2) % 2 != 0) return false;
  return true;
}

IntersectionLattice::IntersectionLattice(PlumbingGraph g) : g_(std::move(g)) {}

const Int& IntersectionLattice::determinant() const {
  std::call_once(det_once_, [this] { det_ = bareiss_determinant(g_.intersection_matrix()); });
  return *det_;
}

const RatMatrix& IntersectionLattice::inverse() const {
  std::call_once(inv_once_, [this] {
    if (determinant() == 0)
      throw std::invalid_argument("intersection lattice: singular, no inverse");
    inv_ = exact_inverse(g_.intersection_matrix());
  });
  return *inv_;
}

PlumbingGraph build_star_graph(const SeifertData& s) {
  std::vector<int64_t> weights{s.e0};
  std::vector<std::pair<int, int>> edges;
  auto add_arm = [&](int64_t num, int64_t den) {
    int prev = 0;
    for (int64_t t : cf_expand(num, den)) {
      weights.push_back(-t);
      int id = static_cast<int>(weights.size()) - 1;
      edges.emplace_back(prev, id);
      prev = id;
    }
  };
  add_arm(s.p, s.p_prime);
  add_arm(s.q, s.q_prime);
  add_arm(s.r, s.r_prime);
  return PlumbingGraph(std::move(weights), std::move(edges));
}

PlumbingGraph build_asl_graph(const Triplet& t) {
  const int n = static_cast<int>(t.q + t.r);
  std::vector<int64_t> weights(n, -2);
  weights[0] = -t.p;
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(0, 1);
  for (int i = 2; i <= t.q; ++i) edges.emplace_back(i == 2 ? 1 : i - 1, i);
  for (int i = static_cast<int>(t.q) + 1; i < n; ++i)
    edges.emplace_back(i == t.q + 1 ? 1 : i - 1, i);
  return PlumbingGraph(std::move(weights), std::move(edges));
}

PlumbingGraph build_simple_linear(int64_t tcount) {
  if (tcount < 1) throw std::invalid_argument("build_simple_linear: need t >= 1");
  std::vector<int64_t> weights(tcount, -2);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < tcount; ++i) edges.emplace_back(i - 1, i);
  return PlumbingGraph(std::move(weights), std::move(edges));
}

Int determinant(const PlumbingGraph& g) {
  return bareiss_determinant(g.intersection_matrix());
}

GraphReport validate(const PlumbingGraph& g) {
  GraphReport rep;
  IntMatrix m = g.intersection_matrix();
  rep.is_negative_definite = is_negative_definite(m);
  rep.determinant = bareiss_determinant(m);
  rep.is_unimodular = (rep.determinant == 1 || rep.determinant == -1);
  for (int v = 0; v < g.size(); ++v)
    if (g.valency(v) > -g.weight(v)) ++rep.bad_vertex_count;
  return rep;
}

namespace {

// Vertices on the unique tree path v..w, inclusive.
std::vector<int> tree_path(const PlumbingGraph& g, int v, int w) {
  std::vector<int> parent(g.size(), -1);
  std::deque<int> work{v};
  parent[v] = v;
  while (!work.empty()) {
    int u = work.front();
    work.pop_front();
    if (u == w) break;
    for (int x : g.neighbors(u))
      if (parent[x] < 0) {
        parent[x] = u;
        work.push_back(x);
      }
  }
  std::vector<int> path;
  for (int u = w; u != v; u = parent[u]) path.push_back(u);
  path.push_back(v);
  return path;
}

Int deleted_minor(const PlumbingGraph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.size(), 0);
  for (int v : removed) gone[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.size(); ++v)
    if (!gone[v]) keep.push_back(v);
  IntMatrix m = IntMatrix::Zero(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) m(i, i) = g.weight(keep[i]);
  for (auto& [u, v] : g.edges())
    if (!gone[u] && !gone[v]) {
      auto iu = std::lower_bound(keep.begin(), keep.end(), u) - keep.begin();
      auto iv = std::lower_bound(keep.begin(), keep.end(), v) - keep.begin();
      m(iu, iv) = 1;
      m(iv, iu) = 1;
    }
  return bareiss_determinant(m);  // empty deletion remainder gives 1
}

}  // namespace

Rat inverse_entry(const PlumbingGraph& g, int v, int w) {
  if (v < 0 || v >= g.size() || w < 0 || w >= g.size())
    throw std::invalid_argument("inverse_entry: vertex id out of range");
  IntMatrix m = g.intersection_matrix();
  if (!is_negative_definite(m))
    throw std::invalid_argument("inverse_entry: graph must be negative definite");
  Int det = bareiss_determinant(m);
  Int sub = deleted_minor(g, tree_path(g, v, w));
  Rat val = Rat(sub) / Rat(det);
  return val > 0 ? Rat(-val) : val;  // -|det(I_(vw))/det(I)|
}

Rat k_squared(const PlumbingGraph& g, const CharVector& k) {
  if (!is_characteristic(g, k))
    throw std::invalid_argument("k_squared: vector is not characteristic");
  IntVector kv(g.size());
  for (int v = 0; v < g.size(); ++v) kv(v) = k.evals[v];
  RatVector x = bareiss_solve(g.intersection_matrix(), kv);
  Rat acc(0);
  for (int v = 0; v < g.size(); ++v) acc += Rat(kv(v)) * x(v);
  return acc;
}

CharVector make_k_am(const Triplet& t, int64_t a, int64_t m) {
  if (t.p % 2 == 0) throw std::invalid_argument("make_k_am: p must be odd");
  if (a % 2 == 0 || a < -t.p || a > t.p)
    throw std::invalid_argument("make_k_am: a must be odd with |a| <= p");
  if (m < 0 || m > (t.p - 1) / 2)
    throw std::invalid_argument("make_k_am: m out of range");
  CharVector k;
  k.evals.assign(t.q + t.r, 0);
  k.evals[0] = a;
  if (m >= 1) k.evals[t.q + t.r - m] = -2;
  return k;
}

namespace {

std::string canonical_encoding(const PlumbingGraph& g, int root) {
  // AHU-style: encode(v) = "(" + weight + sorted encodings of children + ")".
  std::vector<std::string> enc(g.size());
  std::vector<int> parent(g.size(), -1), order;
  order.reserve(g.size());
  std::deque<int> work{root};
  parent[root] = root;
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    order.push_back(v);
    for (int w : g.neighbors(v))
      if (parent[w] < 0) {
        parent[w] = v;
        work.push_back(w);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
      if (parent[w] == v) kids.push_back(enc[w]);
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(g.weight(v));
    for (auto& kid : kids) s += kid;
    s += ")";
    enc[v] = s;
  }
  return enc[root];
}

std::vector<int> tree_centroids(const PlumbingGraph& g) {
  // Repeatedly strip leaves; the last one or two survivors are the centers.
  const int n = g.size();
  std::vector<int> deg(n);
  std::deque<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.valency(v);
    if (deg[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  std::vector<char> removed(n, 0);
  while (remaining > 2) {
    std::deque<int> next;
    for (int v : leaves) {
      removed[v] = 1;
      --remaining;
      for (int w : g.neighbors(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    leaves.swap(next);
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) out.push_back(v);
  return out;
}

}  // namespace

bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
  if (a.size() != b.size()) return false;
  auto canon = [](const PlumbingGraph& g) {
    std::string best;
    for (int c : tree_centroids(g)) {
      std::string e = canonical_encoding(g, c);
      if (best.empty() || e < best) best = e;
    }
    return best;
  };
  return canon(a) == canon(b);
}

std::string graph_to_json(const PlumbingGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.size(); ++v)
    j["vertices"].push_back({{"id", v}, {"weight", g.weight(v)}});
  j["edges"] = nlohmann::ordered_json::array();
  for (auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

PlumbingGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph json: missing vertices/edges");
  std::vector<int64_t> weights(j["vertices"].size(), 0);
  std::vector<char> seen(j["vertices"].size(), 0);
  for (auto& v : j["vertices"]) {
    int64_t id = v.at("id").get<int64_t>();
    if (id < 0 || id >= static_cast<int64_t>(weights.size()) || seen[id])
      throw std::invalid_argument("graph json: vertex ids must be 0..n-1, unique");
    weights[id] = v.at("weight").get<int64_t>();
    seen[id] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: edges must be [u,v] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return PlumbingGraph(std::move(weights), std::move(edges));
}

std::string graph_to_dot(const PlumbingGraph& g) {
  std::string out = "graph plumbing {\n";
  for (int v = 0; v < g.size(); ++v)
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(g.weight(v)) + "\"];\n";
  for (auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace dinv
