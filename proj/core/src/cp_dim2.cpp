#include "cpt/cp_dim2.hpp"

#include <algorithm>

#include "cpt/tensor_ops.hpp"

namespace cpt {

Dim2Profile profile_dim2(const SymmetricTensor& tensor) {
  if (tensor.dim() != 2) {
    fail(ErrorKind::wrong_dimension, "profile requires a dimension-2 tensor");
  }
  const int m = tensor.order();
  Dim2Profile profile;
  profile.order = m;
  profile.values.resize(static_cast<std::size_t>(m) + 1);
  std::vector<int> index;
  for (int r = 0; r <= m; ++r) {
    index.assign(static_cast<std::size_t>(r), 1);
    index.resize(static_cast<std::size_t>(m), 2);
    profile.values[static_cast<std::size_t>(r)] = tensor.at(index);
  }
  profile.valid = true;
  profile.strong_symmetric = true;
  for (int r = 2; r < m; ++r) {
    if (profile.values[static_cast<std::size_t>(r)] != profile.values[1]) {
      profile.strong_symmetric = false;
      break;
    }
  }
  return profile;
}

namespace {

MultiIndex first_off_diagonal_dim2(int order) {
  // Colex-first mixed index: (1, .., 1, 2).
  std::vector<int> entries(static_cast<std::size_t>(order), 1);
  entries.back() = 2;
  return MultiIndex(std::move(entries), 2);
}

}  // namespace

BcpCertificate certify_binary_cp_dim2(const SymmetricTensor& tensor) {
  BcpCertificate certificate;
  if (tensor.dim() != 2) {
    certificate.reason = "tensor dimension is not 2";
    return certificate;
  }
  if (!tensor.all_values_nonneg_integer()) {
    certificate.reason = "entries are not nonnegative integers";
    return certificate;
  }
  Dim2Profile profile = profile_dim2(tensor);
  if (!profile.strong_symmetric) {
    certificate.reason = "tensor is not strong symmetric";
    return certificate;
  }
  const int m = tensor.order();
  const Integer n1 = numerator(profile.diagonal_one());
  const Integer n2 = numerator(profile.diagonal_two());
  const Integer n12 = numerator(profile.off_value());
  if (n12 > n1 || n12 > n2) {
    certificate.outcome = Outcome::negative;
    int diagonal = n1 <= n2 ? 1 : 2;
    certificate.witness = DominanceWitness{first_off_diagonal_dim2(m), diagonal,
                                           profile.off_value(),
                                           diagonal == 1 ? profile.diagonal_one()
                                                         : profile.diagonal_two()};
    return certificate;
  }
  // Overlapping prefix supports: S1 = [1..n1], S2 = [1..n12] + [n1+1..p].
  const Integer p = n1 + n2 - n12;
  certificate.outcome = Outcome::positive;
  certificate.bcprank = static_cast<std::size_t>(p);
  for (Integer j = 1; j <= p; ++j) {
    bool in_s1 = j <= n1;
    bool in_s2 = j <= n12 || j > n1;
    certificate.factors.push_back({Rational(in_s1 ? 1 : 0), Rational(in_s2 ? 1 : 0)});
  }
  return certificate;
}

Dim2Construction construct_cp_dim2(const SymmetricTensor& tensor) {
  Dim2Construction result;
  if (tensor.dim() != 2) {
    result.reason = "tensor dimension is not 2";
    return result;
  }
  Dim2Profile profile = profile_dim2(tensor);
  bool nonnegative = std::all_of(tensor.values().begin(), tensor.values().end(),
                                 [](const Rational& v) { return v >= 0; });
  if (!nonnegative) {
    result.reason = "tensor has negative entries";
    return result;
  }
  if (!profile.strong_symmetric) {
    result.reason = "tensor is not strong symmetric";
    return result;
  }
  const Rational& diag1 = profile.diagonal_one();
  const Rational& diag2 = profile.diagonal_two();
  const Rational& off = profile.off_value();
  if (off > diag1 || off > diag2) {
    result.outcome = Outcome::inconclusive;
    result.reason = "off-diagonal value exceeds a diagonal entry; the condition is sufficient only";
    return result;
  }
  std::vector<WeightedFactor> weighted;
  if (diag1 != off) weighted.push_back({{1}, diag1 - off});
  if (diag2 != off) weighted.push_back({{2}, diag2 - off});
  if (off != 0) weighted.push_back({{1, 2}, off});
  result.outcome = Outcome::positive;
  result.decomposition = CpDecomposition(2, {}, std::move(weighted));
  return result;
}

PairwiseCheck pairwise_necessary_check(const SymmetricTensor& tensor) {
  PairwiseCheck check;
  bool nonnegative = std::all_of(tensor.values().begin(), tensor.values().end(),
                                 [](const Rational& v) { return v >= 0; });
  if (!nonnegative || !is_strong_symmetric(tensor)) return check;
  check.applicable = true;
  check.passed = true;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (!check.passed) return;
                       std::vector<int> base = base_set_of(entries);
                       if (base.size() != 2) return;
                       Rational lhs = pow(tensor.at_rank(rank), 2);
                       Rational rhs = tensor.diagonal_entry(base[0]) *
                                      tensor.diagonal_entry(base[1]);
                       if (lhs > rhs) {
                         check.passed = false;
                         check.witness = PairwiseWitness{MultiIndex(entries, tensor.dim()),
                                                         base[0], base[1], std::move(lhs),
                                                         std::move(rhs)};
                       }
                     });
  return check;
}

DominanceCheck dominance_necessary_check(const SymmetricTensor& tensor) {
  DominanceCheck check;
  if (!tensor.all_values_nonneg_integer()) return check;
  check.applicable = true;
  check.passed = true;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (!check.passed) return;
                       for (int k : base_set_of(entries)) {
                         const Rational& diagonal = tensor.diagonal_entry(k);
                         if (tensor.at_rank(rank) > diagonal) {
                           check.passed = false;
                           check.witness = DominanceWitness{MultiIndex(entries, tensor.dim()),
                                                            k, tensor.at_rank(rank), diagonal};
                           break;
                         }
                       }
                     });
  return check;
}

}  // namespace cpt
