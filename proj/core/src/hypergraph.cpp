#include "cpt/hypergraph.hpp"

#include <algorithm>

#include "cpt/tensor_ops.hpp"

namespace cpt {

MultiHypergraph::MultiHypergraph(int order, int vertex_count)
    : order_(order), vertex_count_(vertex_count) {
  if (order < 2) fail(ErrorKind::invalid_argument, "edge order must be at least 2");
  if (vertex_count < 0) fail(ErrorKind::invalid_argument, "vertex count must be nonnegative");
}

MultiHypergraph::MultiHypergraph(int order, int vertex_count,
                                 const std::vector<std::vector<int>>& edges)
    : MultiHypergraph(order, vertex_count) {
  for (const auto& raw : edges) {
    MultiIndex edge = MultiIndex::canonicalize(raw, vertex_count_);
    if (edge.order() != order_) {
      fail(ErrorKind::order_mismatch, "edge size does not match the graph order");
    }
    edges_.insert(edge.entries());
  }
}

bool MultiHypergraph::has_edge(std::span<const int> raw) const {
  MultiIndex edge = MultiIndex::canonicalize(raw, vertex_count_);
  return edges_.contains(edge.entries());
}

SymmetricTensor adjacency_tensor(const MultiHypergraph& graph) {
  SymmetricTensor::Builder builder(graph.order(), graph.vertex_count());
  for (const auto& edge : graph.edges()) builder.set(edge, Rational(1));
  return std::move(builder).build(Domain::binary);
}

namespace {

bool strict_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::vector<int>> maximal_edges(const MultiHypergraph& graph) {
  std::vector<std::vector<int>> result;
  for (const auto& edge : graph.edges()) {
    std::vector<int> base = base_set_of(edge);
    bool dominated = std::any_of(graph.edges().begin(), graph.edges().end(),
                                 [&](const std::vector<int>& other) {
                                   return strict_subset(base, base_set_of(other));
                                 });
    if (!dominated) result.push_back(edge);
  }
  return result;
}

PropertyRCheck property_r_check(const MultiHypergraph& graph) {
  PropertyRCheck check;
  check.holds = true;
  std::set<std::vector<int>> scanned_bases;
  std::vector<int> mapped(static_cast<std::size_t>(graph.order()));
  for (const auto& edge : maximal_edges(graph)) {
    if (!check.holds) break;
    std::vector<int> base = base_set_of(edge);
    if (!scanned_bases.insert(base).second) continue;
    for_each_canonical_lex(graph.order(), static_cast<int>(base.size()),
                           [&](const std::vector<int>& entries) {
                             if (!check.holds) return;
                             std::transform(entries.begin(), entries.end(), mapped.begin(),
                                            [&base](int i) {
                                              return base[static_cast<std::size_t>(i - 1)];
                                            });
                             if (!graph.edges().contains(mapped)) {
                               check.holds = false;
                               check.edge = edge;
                               check.missing = mapped;
                             }
                           });
  }
  return check;
}

UniqueMaximalCertificate certify_unique_maximal(const MultiHypergraph& graph) {
  UniqueMaximalCertificate certificate;
  PropertyRCheck closure = property_r_check(graph);
  if (!closure.holds) {
    certificate.reason = "downward closure fails";
    return certificate;
  }
  std::vector<std::vector<int>> maximal = maximal_edges(graph);
  if (maximal.size() != 1) {
    certificate.reason = std::to_string(maximal.size()) + " maximal edges";
    return certificate;
  }
  std::vector<int> alpha(static_cast<std::size_t>(graph.vertex_count()), 0);
  for (int v : base_set_of(maximal.front())) alpha[static_cast<std::size_t>(v - 1)] = 1;
  std::vector<Rational> alpha_rational(alpha.size());
  std::transform(alpha.begin(), alpha.end(), alpha_rational.begin(),
                 [](int v) { return Rational(v); });
  if (!(adjacency_tensor(graph) == rank_one_power(alpha_rational, graph.order()))) {
    certificate.reason = "rank-one identity failed verification";
    return certificate;
  }
  certificate.outcome = Outcome::positive;
  certificate.alpha = std::move(alpha);
  return certificate;
}

IndicatorMatrix indicator_matrix(const MultiHypergraph& graph) {
  IndicatorMatrix matrix;
  matrix.vertex_count = graph.vertex_count();
  for (const auto& edge : graph.edges()) {
    std::vector<int> column(static_cast<std::size_t>(graph.vertex_count()), 0);
    for (int v : edge) ++column[static_cast<std::size_t>(v - 1)];
    matrix.columns.push_back(std::move(column));
  }
  return matrix;
}

std::vector<std::vector<Integer>> associated_matrix(const MultiHypergraph& graph) {
  const std::size_t n = static_cast<std::size_t>(graph.vertex_count());
  std::vector<std::vector<Integer>> matrix(n, std::vector<Integer>(n, Integer(0)));
  IndicatorMatrix indicator = indicator_matrix(graph);
  for (const auto& column : indicator.columns) {
    for (std::size_t i = 0; i < n; ++i) {
      if (column[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        matrix[i][j] += Integer(column[i]) * column[j];
      }
    }
  }
  return matrix;
}

MultiHypergraph tensor_to_multihypergraph(const SymmetricTensor& tensor) {
  if (!tensor.all_values_binary()) {
    fail(ErrorKind::domain_error, "adjacency inversion requires a (0,1) tensor");
  }
  std::vector<std::vector<int>> edges;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (tensor.at_rank(rank) == 1) edges.push_back(entries);
                     });
  return MultiHypergraph(tensor.order(), tensor.dim(), edges);
}

Rational normal_edge_ratio(int order, int vertex_count) {
  if (order < 1 || vertex_count < 1) {
    fail(ErrorKind::invalid_argument, "ratio needs positive order and vertex count");
  }
  return Rational(binomial(vertex_count, order),
                  pow(Integer(vertex_count), static_cast<unsigned>(order)));
}

std::vector<std::vector<int>> edges_with_base_size(const MultiHypergraph& graph, int k) {
  std::vector<std::vector<int>> result;
  for (const auto& edge : graph.edges()) {
    if (static_cast<int>(base_set_of(edge).size()) == k) result.push_back(edge);
  }
  return result;
}

}  // namespace cpt
