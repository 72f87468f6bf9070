#include "cpt/hypergraph.hpp"

#include <gtest/gtest.h>

#include "cpt/binary_cp.hpp"
#include "cpt/error.hpp"
#include "cpt/gramian.hpp"
#include "cpt/tensor_ops.hpp"
#include "test_support.hpp"

namespace cpt {
namespace {

using testing::Rng;

/// The 3-uniform graph on {1,2,3,4} whose edges are all ten 3-multisets
/// over {1,3,4}; vertex 2 is isolated and the unique maximal edge is {1,3,4}.
MultiHypergraph downward_closed_cube() {
  return MultiHypergraph(3, 4,
                         {{1, 3, 4},
                          {1, 1, 3},
                          {1, 3, 3},
                          {1, 1, 4},
                          {1, 4, 4},
                          {3, 3, 4},
                          {3, 4, 4},
                          {1, 1, 1},
                          {3, 3, 3},
                          {4, 4, 4}});
}

std::vector<Rational> rat(std::initializer_list<int> values) {
  std::vector<Rational> result;
  for (int v : values) result.emplace_back(v);
  return result;
}

TEST(MultiHypergraph, EdgesAreCanonicalAndDeduplicated) {
  MultiHypergraph graph(3, 3, {{2, 1, 1}, {1, 1, 2}, {3, 3, 3}});
  EXPECT_EQ(graph.edge_count(), 2u);
  EXPECT_TRUE(graph.has_edge(std::vector<int>{1, 2, 1}));
  EXPECT_FALSE(graph.has_edge(std::vector<int>{1, 2, 3}));
}

TEST(AdjacencyTensor, MatchesRankOnePowerOnTheCube) {
  EXPECT_EQ(adjacency_tensor(downward_closed_cube()),
            rank_one_power(rat({1, 0, 1, 1}), 3));
}

TEST(AdjacencyTensor, EmptyAndCompleteGraphs) {
  EXPECT_EQ(adjacency_tensor(MultiHypergraph(3, 2)), SymmetricTensor::zeros(3, 2));
  std::vector<std::vector<int>> all;
  for_each_canonical(3, 2, [&](const std::vector<int>& e, std::size_t) { all.push_back(e); });
  EXPECT_EQ(adjacency_tensor(MultiHypergraph(3, 2, all)), SymmetricTensor::all_ones(3, 2));
}

TEST(MaximalEdges, UniqueOnTheCube) {
  auto maximal = maximal_edges(downward_closed_cube());
  ASSERT_EQ(maximal.size(), 1u);
  EXPECT_EQ(maximal[0], (std::vector<int>{1, 3, 4}));
}

TEST(MaximalEdges, SingleEdgeIsMaximal) {
  MultiHypergraph graph(3, 5, {{2, 2, 5}});
  auto maximal = maximal_edges(graph);
  ASSERT_EQ(maximal.size(), 1u);
  EXPECT_EQ(maximal[0], (std::vector<int>{2, 2, 5}));
}

TEST(MaximalEdges, StrictBaseContainmentDominates) {
  MultiHypergraph graph(3, 3, {{1, 1, 2}, {1, 2, 3}});
  auto maximal = maximal_edges(graph);
  ASSERT_EQ(maximal.size(), 1u);
  EXPECT_EQ(maximal[0], (std::vector<int>{1, 2, 3}));
}

TEST(PropertyR, HoldsOnTheCube) {
  EXPECT_TRUE(property_r_check(downward_closed_cube()).holds);
}

TEST(PropertyR, MissingMultisetIsReported) {
  MultiHypergraph graph(3, 4,
                        {{1, 3, 4},
                         {1, 1, 3},
                         {1, 3, 3},
                         {1, 1, 4},
                         {1, 4, 4},
                         {3, 4, 4},
                         {1, 1, 1},
                         {3, 3, 3},
                         {4, 4, 4}});
  PropertyRCheck check = property_r_check(graph);
  ASSERT_FALSE(check.holds);
  EXPECT_EQ(*check.edge, (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(*check.missing, (std::vector<int>{3, 3, 4}));
}

TEST(PropertyR, CompleteMultisetFamilyHolds) {
  std::vector<std::vector<int>> all;
  for_each_canonical(3, 3, [&](const std::vector<int>& e, std::size_t) { all.push_back(e); });
  EXPECT_TRUE(property_r_check(MultiHypergraph(3, 3, all)).holds);
}

TEST(CertifyUniqueMaximal, CubeGetsRankOneCertificate) {
  UniqueMaximalCertificate certificate = certify_unique_maximal(downward_closed_cube());
  ASSERT_EQ(certificate.outcome, Outcome::positive);
  EXPECT_EQ(certificate.alpha, (std::vector<int>{1, 0, 1, 1}));
}

TEST(CertifyUniqueMaximal, TwoMaximalEdgesFallBack) {
  MultiHypergraph graph(2, 4, {{1, 2}, {1, 1}, {2, 2}, {3, 4}, {3, 3}, {4, 4}});
  UniqueMaximalCertificate certificate = certify_unique_maximal(graph);
  EXPECT_EQ(certificate.outcome, Outcome::not_applicable);
  // The block certifier settles it instead.
  BinaryCpResult fallback = certify_binary_cp_01(adjacency_tensor(graph));
  ASSERT_EQ(fallback.outcome, Outcome::positive);
  EXPECT_EQ(fallback.u_columns.size(), 2u);
}

TEST(CertifyUniqueMaximal, ClosureViolationFallsBack) {
  MultiHypergraph graph(3, 2, {{1, 1, 2}});
  UniqueMaximalCertificate certificate = certify_unique_maximal(graph);
  EXPECT_EQ(certificate.outcome, Outcome::not_applicable);
}

TEST(CertifyUniqueMaximal, AgreesWithBlockCertifier) {
  Rng rng(90210);
  int positives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int m = rng.uniform(2, 3);
    int n = rng.uniform(1, 4);
    SymmetricTensor tensor = rng.binary_tensor(m, n, 60);
    MultiHypergraph graph = tensor_to_multihypergraph(tensor);
    UniqueMaximalCertificate certificate = certify_unique_maximal(graph);
    if (certificate.outcome != Outcome::positive) continue;
    ++positives;
    BinaryCpResult blocks = certify_binary_cp_01(tensor);
    ASSERT_EQ(blocks.outcome, Outcome::positive);
    ASSERT_EQ(blocks.u_columns.size(), 1u);
    EXPECT_EQ(blocks.u_columns[0], certificate.alpha);
  }
  EXPECT_GT(positives, 0);
}

TEST(IndicatorMatrix, FrequencyColumns) {
  MultiHypergraph graph(3, 4, {{1, 3, 4}, {1, 1, 3}});
  IndicatorMatrix matrix = indicator_matrix(graph);
  ASSERT_EQ(matrix.columns.size(), 2u);
  // Lexicographic edge order: (1,1,3) before (1,3,4).
  EXPECT_EQ(matrix.columns[0], (std::vector<int>{2, 0, 1, 0}));
  EXPECT_EQ(matrix.columns[1], (std::vector<int>{1, 0, 1, 1}));
}

TEST(IndicatorMatrix, EmptyGraphHasNoColumns) {
  EXPECT_TRUE(indicator_matrix(MultiHypergraph(3, 4)).columns.empty());
}

TEST(AssociatedMatrix, SingleEdgeOuterProduct) {
  MultiHypergraph graph(3, 4, {{1, 3, 4}});
  auto matrix = associated_matrix(graph);
  Integer expected[4][4] = {{1, 0, 1, 1}, {0, 0, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 1}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                expected[i][j]);
    }
  }
}

TEST(AssociatedMatrix, EmptyGraphIsZero) {
  auto matrix = associated_matrix(MultiHypergraph(3, 3));
  for (const auto& row : matrix) {
    for (const Integer& v : row) EXPECT_EQ(v, 0);
  }
}

TEST(AssociatedMatrix, MatchesOrder2GramOfIndicatorRows) {
  Rng rng(424242);
  for (int trial = 0; trial < 50; ++trial) {
    int m = rng.uniform(2, 3);
    int n = rng.uniform(1, 4);
    SymmetricTensor source = rng.binary_tensor(m, n, 55);
    MultiHypergraph graph = tensor_to_multihypergraph(source);
    IndicatorMatrix indicator = indicator_matrix(graph);
    // Columns of the Gramian generator are the rows of W.
    std::vector<std::vector<Rational>> gram_columns(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> row(indicator.columns.size());
      for (std::size_t j = 0; j < indicator.columns.size(); ++j) {
        row[j] = indicator.columns[j][static_cast<std::size_t>(i)];
      }
      gram_columns[static_cast<std::size_t>(i)] = std::move(row);
    }
    SymmetricTensor gram = gram_tensor(FactorMatrix(gram_columns), 2);
    auto matrix = associated_matrix(graph);
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        EXPECT_EQ(gram.at({i, j}),
                  Rational(matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]));
      }
    }
  }
}

TEST(TensorToMultiHypergraph, RoundTripsWithAdjacency) {
  Rng rng(60601);
  for (int trial = 0; trial < 100; ++trial) {
    int m = rng.uniform(2, 4);
    int n = rng.uniform(1, 4);
    SymmetricTensor tensor = rng.binary_tensor(m, n, 50);
    MultiHypergraph graph = tensor_to_multihypergraph(tensor);
    EXPECT_EQ(adjacency_tensor(graph), tensor);
    MultiHypergraph again = tensor_to_multihypergraph(adjacency_tensor(graph));
    EXPECT_EQ(again.edges(), graph.edges());
  }
}

TEST(TensorToMultiHypergraph, CubeTensorRecoversTenEdges) {
  MultiHypergraph graph =
      tensor_to_multihypergraph(rank_one_power(rat({1, 0, 1, 1}), 3));
  EXPECT_EQ(graph.edges(), downward_closed_cube().edges());
}

TEST(TensorToMultiHypergraph, RequiresBinaryValues) {
  std::vector<Rational> diag = {Rational(2)};
  EXPECT_THROW(tensor_to_multihypergraph(SymmetricTensor::diagonal(2, diag)), Error);
}

TEST(NormalEdgeRatio, ApproachesInverseFactorial) {
  EXPECT_EQ(normal_edge_ratio(3, 4), Rational(4, 64));
  // |C(n,3)/n^3 - 1/6| < 1/100 from n = 200 on, checked exactly.
  Rational sixth(1, 6);
  Rational bound(1, 100);
  for (int n : {200, 500, 1000}) {
    Rational gap = sixth - normal_edge_ratio(3, n);
    EXPECT_GT(gap, 0);
    EXPECT_LT(gap, bound);
  }
}

TEST(EdgesWithBaseSize, FiltersByDistinctVertexCount) {
  MultiHypergraph graph = downward_closed_cube();
  EXPECT_EQ(edges_with_base_size(graph, 3).size(), 1u);
  EXPECT_EQ(edges_with_base_size(graph, 2).size(), 6u);
  EXPECT_EQ(edges_with_base_size(graph, 1).size(), 3u);
}

}  // namespace
}  // namespace cpt
