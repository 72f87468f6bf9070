#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cpt/outcome.hpp"
#include "cpt/symmetric_tensor.hpp"

namespace cpt {

/// A multi-hypergraph on vertices [1..n] whose edges are m-multisets of the
/// vertex set, stored canonically (sorted) without duplicates. Iteration
/// over `edges()` is lexicographic, which fixes the column order of the
/// indicator matrix and all reported witnesses.
class MultiHypergraph {
 public:
  MultiHypergraph(int order, int vertex_count);
  MultiHypergraph(int order, int vertex_count, const std::vector<std::vector<int>>& edges);

  int order() const { return order_; }
  int vertex_count() const { return vertex_count_; }
  const std::set<std::vector<int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(std::span<const int> raw) const;

 private:
  int order_;
  int vertex_count_;
  std::set<std::vector<int>> edges_;
};

/// The (0,1) tensor with a 1 exactly at the canonical indices that are edges.
SymmetricTensor adjacency_tensor(const MultiHypergraph& graph);

/// Edges whose base set is not a strict subset of another edge's base set,
/// in lexicographic order.
std::vector<std::vector<int>> maximal_edges(const MultiHypergraph& graph);

/// Downward closure check: for every edge a, every m-multiset supported
/// inside base(a) must itself be an edge. Only maximal base sets need to be
/// scanned; a closure hole below a non-maximal edge is also a hole below a
/// maximal one. The witness is the first missing multiset in (edge,
/// multiset) lexicographic scan order.
struct PropertyRCheck {
  bool holds = false;
  std::optional<std::vector<int>> edge;
  std::optional<std::vector<int>> missing;
};

PropertyRCheck property_r_check(const MultiHypergraph& graph);

/// Rank-one certificate for a graph with downward closure and a single
/// maximal edge E: the adjacency tensor equals alpha^m for the (0,1)
/// indicator alpha of base(E). The identity is verified entrywise before
/// the certificate is issued.
struct UniqueMaximalCertificate {
  Outcome outcome = Outcome::not_applicable;
  std::vector<int> alpha;  // (0,1), dimension n
  std::string reason;
};

UniqueMaximalCertificate certify_unique_maximal(const MultiHypergraph& graph);

/// Columns are vertex-frequency vectors of the edges in lexicographic
/// order; every column sums to m.
struct IndicatorMatrix {
  int vertex_count = 0;
  std::vector<std::vector<int>> columns;
};

IndicatorMatrix indicator_matrix(const MultiHypergraph& graph);

/// W W^T = sum_j u_j u_j^T over the indicator columns, in exact integers.
std::vector<std::vector<Integer>> associated_matrix(const MultiHypergraph& graph);

/// Inverse of adjacency_tensor on (0,1) tensors.
MultiHypergraph tensor_to_multihypergraph(const SymmetricTensor& tensor);

/// C(n, m) / n^m: the fraction of edges with m distinct vertices among all
/// m-multisets; tends to 1/m! as n grows.
Rational normal_edge_ratio(int order, int vertex_count);

/// Edges whose base set has exactly k distinct vertices. A plain filter;
/// no further structure is attached to it.
std::vector<std::vector<int>> edges_with_base_size(const MultiHypergraph& graph, int k);

}  // namespace cpt
