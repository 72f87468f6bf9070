#include "cpt/gramian.hpp"

#include <algorithm>

#include "cpt/multi_index.hpp"

namespace cpt {

FactorMatrix::FactorMatrix(std::vector<std::vector<Rational>> columns)
    : columns_(std::move(columns)) {
  dim_ = columns_.empty() ? 0 : static_cast<int>(columns_.front().size());
  nonnegative_ = true;
  for (const auto& column : columns_) {
    if (static_cast<int>(column.size()) != dim_) {
      fail(ErrorKind::dimension_mismatch, "factor matrix columns have mixed dimensions");
    }
    for (const Rational& v : column) {
      if (v < 0) nonnegative_ = false;
    }
  }
}

FactorMatrix FactorMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != n) {
      fail(ErrorKind::dimension_mismatch, "factor matrix rows have mixed lengths");
    }
  }
  std::vector<std::vector<Rational>> columns(n, std::vector<Rational>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) columns[j][i] = rows[i][j];
  }
  return FactorMatrix(std::move(columns));
}

FactorMatrix FactorMatrix::diagonal(std::span<const Rational> diagonal_values) {
  const std::size_t n = diagonal_values.size();
  std::vector<std::vector<Rational>> columns(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) columns[j][j] = diagonal_values[j];
  return FactorMatrix(std::move(columns));
}

std::vector<std::vector<Rational>> FactorMatrix::rows() const {
  std::vector<std::vector<Rational>> result(
      static_cast<std::size_t>(dim_),
      std::vector<Rational>(columns_.size()));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (int i = 0; i < dim_; ++i) {
      result[static_cast<std::size_t>(i)][j] = columns_[j][static_cast<std::size_t>(i)];
    }
  }
  return result;
}

CpDecomposition::CpDecomposition(int dim, std::vector<std::vector<Rational>> factors,
                                 std::vector<WeightedFactor> weighted)
    : dim_(dim), factors_(std::move(factors)), weighted_(std::move(weighted)) {
  for (const auto& factor : factors_) {
    if (static_cast<int>(factor.size()) != dim_) {
      fail(ErrorKind::dimension_mismatch, "decomposition factor dimension mismatch");
    }
    for (const Rational& v : factor) {
      if (v < 0) fail(ErrorKind::negative_factor, "decomposition factor has a negative entry");
    }
  }
  for (const auto& wf : weighted_) {
    if (wf.weight < 0) fail(ErrorKind::negative_factor, "weighted factor has negative weight");
    if (!std::is_sorted(wf.support.begin(), wf.support.end()) ||
        std::adjacent_find(wf.support.begin(), wf.support.end()) != wf.support.end()) {
      fail(ErrorKind::invalid_argument, "weighted factor support must be strictly increasing");
    }
    for (int i : wf.support) {
      if (i < 1 || i > dim_) {
        fail(ErrorKind::index_out_of_range, "weighted factor support out of range");
      }
    }
  }
}

std::vector<Rational> hadamard(std::span<const std::vector<Rational>> vectors) {
  if (vectors.empty()) fail(ErrorKind::empty_family, "Hadamard product of an empty family");
  std::vector<Rational> result = vectors.front();
  for (std::size_t j = 1; j < vectors.size(); ++j) {
    if (vectors[j].size() != result.size()) {
      fail(ErrorKind::dimension_mismatch, "Hadamard product over mixed dimensions");
    }
    for (std::size_t k = 0; k < result.size(); ++k) result[k] *= vectors[j][k];
  }
  return result;
}

Rational m_inner_product(std::span<const std::vector<Rational>> vectors) {
  std::vector<Rational> product = hadamard(vectors);
  Rational sum = 0;
  for (const Rational& v : product) sum += v;
  return sum;
}

Rational m_power_sum(std::span<const Rational> vec, int order) {
  Rational sum = 0;
  for (const Rational& v : vec) sum += pow(v, static_cast<unsigned>(order));
  return sum;
}

RootEnclosure m_norm(std::span<const Rational> vec, int order) {
  if (order < 1) fail(ErrorKind::invalid_argument, "m-norm needs order >= 1");
  Rational power = m_power_sum(vec, order);
  if (power < 0) {
    fail(ErrorKind::undefined_norm,
         "m-inner power is negative (odd order on mixed-sign input)");
  }
  return nth_root_enclosure(power, static_cast<unsigned>(order));
}

SymmetricTensor gram_tensor(const FactorMatrix& matrix, int order) {
  if (order < 2) fail(ErrorKind::invalid_argument, "Gramian tensor needs order >= 2");
  const int n = matrix.column_count();
  const int d = matrix.vector_dim();
  std::vector<Rational> values(canonical_count(order, n));
  for_each_canonical(order, n, [&](const std::vector<int>& entries, std::size_t rank) {
    // m-inner product of the selected columns, repeated columns included.
    Rational sum = 0;
    for (int k = 0; k < d; ++k) {
      Rational product = 1;
      for (int i : entries) {
        product *= matrix.column(i - 1)[static_cast<std::size_t>(k)];
        if (product == 0) break;
      }
      sum += product;
    }
    values[rank] = std::move(sum);
  });
  Domain domain = detect_domain(values);
  return SymmetricTensor(order, n, std::move(values), domain);
}

CpDecomposition row_decomposition(const FactorMatrix& matrix) {
  if (!matrix.is_nonnegative()) {
    fail(ErrorKind::negative_factor, "factor matrix has negative entries");
  }
  return CpDecomposition(matrix.column_count(), matrix.rows());
}

VerifyResult verify_cp_decomposition(const SymmetricTensor& tensor,
                                     const CpDecomposition& decomposition) {
  if (decomposition.dim() != tensor.dim()) {
    fail(ErrorKind::dimension_mismatch, "decomposition dimension does not match tensor");
  }
  const int order = tensor.order();
  VerifyResult result{true, std::nullopt, 0, 0};
  for_each_canonical(order, tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (!result.verified) return;
                       Rational total = 0;
                       for (const auto& factor : decomposition.factors()) {
                         Rational product = 1;
                         for (int i : entries) {
                           product *= factor[static_cast<std::size_t>(i - 1)];
                           if (product == 0) break;
                         }
                         total += product;
                       }
                       for (const auto& wf : decomposition.weighted()) {
                         bool inside = std::all_of(entries.begin(), entries.end(), [&](int i) {
                           return std::binary_search(wf.support.begin(), wf.support.end(), i);
                         });
                         if (inside) total += wf.weight;
                       }
                       if (total != tensor.at_rank(rank)) {
                         result.verified = false;
                         result.first_mismatch = MultiIndex(entries, tensor.dim());
                         result.tensor_value = tensor.at_rank(rank);
                         result.decomposition_value = std::move(total);
                       }
                     });
  return result;
}

HolderCheck holder_check(std::span<const std::vector<Rational>> vectors) {
  if (vectors.empty()) fail(ErrorKind::empty_family, "Hoelder check on an empty family");
  const int order = static_cast<int>(vectors.size());
  for (const auto& vec : vectors) {
    for (const Rational& v : vec) {
      if (v < 0) fail(ErrorKind::negative_factor, "Hoelder check needs nonnegative vectors");
    }
  }
  HolderCheck check;
  check.lhs = pow(m_inner_product(vectors), static_cast<unsigned>(order));
  check.rhs = 1;
  for (const auto& vec : vectors) check.rhs *= m_power_sum(vec, order);
  check.holds = check.lhs <= check.rhs;
  return check;
}

}  // namespace cpt
