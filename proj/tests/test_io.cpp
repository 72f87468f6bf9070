#include "cpt/io.hpp"

#include <gtest/gtest.h>

#include "cpt/tensor_ops.hpp"
#include "test_support.hpp"

namespace cpt {
namespace {

using testing::Rng;

TEST(TensorFormat, WriteIsCanonical) {
  SymmetricTensor tensor = SymmetricTensor::Builder(3, 2)
                               .set({1, 1, 1}, 3)
                               .set({2, 1, 1}, Rational(1, 2))
                               .build();
  EXPECT_EQ(to_text(tensor),
            "order 3 dim 2 domain rational\n"
            "1,1,1 3\n"
            "1,1,2 1/2\n");
}

TEST(TensorFormat, RoundTripIsBitExact) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int m = rng.uniform(2, 4);
    int n = rng.uniform(0, 4);
    std::vector<Rational> values(canonical_count(m, n));
    for (auto& v : values) {
      v = Rational(rng.uniform(-6, 6), rng.uniform(1, 4));
    }
    SymmetricTensor tensor(m, n, std::move(values), Domain::rational);
    std::string text = to_text(tensor);
    SymmetricTensor reread = read_tensor(text);
    EXPECT_EQ(reread, tensor);
    EXPECT_EQ(reread.domain(), tensor.domain());
    EXPECT_EQ(to_text(reread), text);
  }
}

TEST(TensorFormat, OmittedIndicesAreZero) {
  SymmetricTensor tensor = read_tensor("order 2 dim 2 domain integer\n1,2 7\n");
  EXPECT_EQ(tensor.at({1, 1}), 0);
  EXPECT_EQ(tensor.at({2, 1}), 7);
  EXPECT_EQ(tensor.at({2, 2}), 0);
  EXPECT_EQ(tensor.domain(), Domain::integer);
}

TEST(TensorFormat, DiagnosticsCarryLineAndColumn) {
  try {
    read_tensor("order 2 dim 2 domain binary\n1,2 1\n2,1 1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 1u);
  }
  try {
    read_tensor("order 2 dim 2 domain binary\n1,2 5\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
  try {
    read_tensor("order 2 dim 2 domain nosuch\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 22u);
  }
  EXPECT_THROW(read_tensor(""), ParseError);
  EXPECT_THROW(read_tensor("order 2 dim 2 domain binary\n1,2 1\n1,2 1\n"), ParseError);
  EXPECT_THROW(read_tensor("order 2 dim 2 domain binary\n1,3 1\n"), ParseError);
}

TEST(TensorFormat, ZeroDimensionalTensor) {
  SymmetricTensor tensor = read_tensor("order 3 dim 0 domain binary\n");
  EXPECT_EQ(tensor.dim(), 0);
  EXPECT_EQ(to_text(tensor), "order 3 dim 0 domain binary\n");
}

TEST(FactorMatrixFormat, RoundTrip) {
  FactorMatrix matrix({{Rational(1), Rational(0)}, {Rational(2), Rational(1)}});
  std::string text = to_text(matrix);
  EXPECT_EQ(text, "dim 2 cols 2\n1,0\n2,1\n");
  FactorMatrix reread = read_factor_matrix(text);
  EXPECT_EQ(reread.columns(), matrix.columns());
  EXPECT_EQ(to_text(reread), text);
}

TEST(FactorMatrixFormat, RationalEntries) {
  FactorMatrix matrix = read_factor_matrix("dim 2 cols 1\n1/3,-2\n");
  EXPECT_EQ(matrix.column(0), (std::vector<Rational>{Rational(1, 3), Rational(-2)}));
  EXPECT_FALSE(matrix.is_nonnegative());
}

TEST(FactorMatrixFormat, ColumnCountEnforced) {
  EXPECT_THROW(read_factor_matrix("dim 2 cols 2\n1,0\n"), ParseError);
  EXPECT_THROW(read_factor_matrix("dim 2 cols 1\n1\n"), ParseError);
}

TEST(HypergraphFormat, RoundTripLexicographic) {
  MultiHypergraph graph(3, 4, {{1, 3, 4}, {1, 1, 3}, {4, 4, 4}});
  std::string text = to_text(graph);
  EXPECT_EQ(text, "order 3 vertices 4\n1,1,3\n1,3,4\n4,4,4\n");
  MultiHypergraph reread = read_hypergraph(text);
  EXPECT_EQ(reread.edges(), graph.edges());
  EXPECT_EQ(to_text(reread), text);
}

TEST(HypergraphFormat, RejectsUnsortedAndDuplicateEdges) {
  EXPECT_THROW(read_hypergraph("order 3 vertices 4\n3,1,4\n"), ParseError);
  EXPECT_THROW(read_hypergraph("order 3 vertices 4\n1,3,4\n1,3,4\n"), ParseError);
  EXPECT_THROW(read_hypergraph("order 3 vertices 4\n1,3\n"), ParseError);
  EXPECT_THROW(read_hypergraph("order 3 vertices 4\n1,3,5\n"), ParseError);
}

}  // namespace
}  // namespace cpt
