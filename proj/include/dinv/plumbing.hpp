#pragma once
//
// Weighted-tree plumbing graphs and their intersection lattices.
//
// Intersection matrix rule: I_jj = e_j (the vertex weight), I_vw = 1 when v,w
// adjacent, 0 otherwise. All determinant work is fraction-free and exact.
//
// ASL vertex labelling (fixed convention, pinned by the inverse-entry tests):
//   id 0            the -p vertex
//   id 1            the central -2 vertex (valency 3)
//   ids 2 .. q      the (q-1)-chain of -2s, outward from the center
//   ids q+1..q+r-1  the (r-1)-chain of -2s, outward; id q+r-1 is the free end
//

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dinv/arith.hpp"
#include "dinv/linalg.hpp"
#include "dinv/triplet.hpp"

namespace dinv {

class PlumbingGraph {
 public:
  // Validates the tree shape: ids 0..n-1, n >= 1, exactly n-1 edges, connected.
  PlumbingGraph(std::vector<int64_t> weights, std::vector<std::pair<int, int>> edges);

  int size() const { return static_cast<int>(weights_.size()); }
  int64_t weight(int v) const { return weights_[v]; }
  const std::vector<int64_t>& weights() const { return weights_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int valency(int v) const { return static_cast<int>(adj_[v].size()); }

  IntMatrix intersection_matrix() const;

 private:
  std::vector<int64_t> weights_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Characteristic vector given by its evaluations evals[j] = <k, v_j>.
struct CharVector {
  std::vector<int64_t> evals;

  friend bool operator==(const CharVector&, const CharVector&) = default;
  friend auto operator<=>(const CharVector&, const CharVector&) = default;
};

bool is_characteristic(const PlumbingGraph& g, const CharVector& k);

struct GraphReport {
  bool is_negative_definite = false;
  bool is_unimodular = false;
  int bad_vertex_count = 0;  // vertices with valency > -e_j
  Int determinant;
};

// Graph plus write-once caches for the determinant and the exact inverse of
// the intersection matrix. Safe for concurrent readers.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(PlumbingGraph g);

  const PlumbingGraph& graph() const { return g_; }
  const Int& determinant() const;
  const RatMatrix& inverse() const;  // throws if det = 0

 private:
  PlumbingGraph g_;
  mutable std::once_flag det_once_, inv_once_;
  mutable std::optional<Int> det_;
  mutable std::optional<RatMatrix> inv_;
};

// Builders -------------------------------------------------------------

// Star with three arms read off the negative continued fractions of p/p',
// q/q', r/r'; center weighted e0, arm weights are the negated cf terms.
// Center is id 0, arms are laid out consecutively in p,q,r order.
PlumbingGraph build_star_graph(const SeifertData& s);

// One -p vertex joined to a central -2 vertex that also carries a (q-1)-chain
// and an (r-1)-chain of -2s. |G| = q+r. Labelling as in the header comment.
PlumbingGraph build_asl_graph(const Triplet& t);

// Path graph A_t, all weights -2.
PlumbingGraph build_simple_linear(int64_t tcount);

// Queries --------------------------------------------------------------

Int determinant(const PlumbingGraph& g);

GraphReport validate(const PlumbingGraph& g);

// (v,w) entry of the exact inverse via the path-deletion recipe
//   I^{-1}_vw = -|det(I with the v..w tree path deleted) / det(I)|,
// valid on connected negative-definite trees (all inverse entries < 0).
Rat inverse_entry(const PlumbingGraph& g, int v, int w);

// k^2 = k^t I^{-1} k, computed by one exact solve I x = k (no full inverse).
Rat k_squared(const PlumbingGraph& g, const CharVector& k);

// The class with eval a at the -p vertex and, for m >= 1, eval -2 at the
// r-arm vertex with exactly m-1 vertices strictly between it and the free
// end (m=1 is the free end itself, id q+r-1; generally id q+r-m).
CharVector make_k_am(const Triplet& t, int64_t a, int64_t m);

// Weighted-tree isomorphism (canonical rooted encoding at the centroid).
bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

// Serialization ---------------------------------------------------------
// JSON schema: {"vertices":[{"id":int,"weight":int}],"edges":[[int,int]]}

std::string graph_to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const std::string& text);
std::string graph_to_dot(const PlumbingGraph& g);

}  // namespace dinv
