#include "cpt/binary_cp.hpp"

#include <algorithm>
#include <numeric>

#include "cpt/tensor_ops.hpp"

namespace cpt {

namespace {

std::vector<bool> subset_mask(const SymmetricTensor& tensor, std::span<const int> subset) {
  const int n = tensor.dim();
  if (subset.empty() || static_cast<int>(subset.size()) >= n) {
    fail(ErrorKind::bad_subset, "subset must be proper and nonempty");
  }
  std::vector<bool> mask(static_cast<std::size_t>(n) + 1, false);
  for (int i : subset) {
    if (i < 1 || i > n) fail(ErrorKind::bad_subset, "subset index out of range");
    if (mask[static_cast<std::size_t>(i)]) fail(ErrorKind::bad_subset, "subset has duplicates");
    mask[static_cast<std::size_t>(i)] = true;
  }
  return mask;
}

}  // namespace

bool is_reducible(const SymmetricTensor& tensor, std::span<const int> subset) {
  std::vector<bool> mask = subset_mask(tensor, subset);
  bool reducible = true;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (!reducible || tensor.at_rank(rank) == 0) return;
                       bool inside = false;
                       bool outside = false;
                       for (int i : entries) {
                         (mask[static_cast<std::size_t>(i)] ? inside : outside) = true;
                       }
                       if (inside && outside) reducible = false;
                     });
  return reducible;
}

bool is_reducible_slicewise(const SymmetricTensor& tensor, std::span<const int> subset) {
  std::vector<bool> mask = subset_mask(tensor, subset);
  bool reducible = true;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (!reducible || tensor.at_rank(rank) == 0) return;
                       int hits = 0;
                       for (int i : entries) {
                         if (mask[static_cast<std::size_t>(i)]) ++hits;
                       }
                       if (hits == 1) reducible = false;
                     });
  return reducible;
}

BlockDecomposition irreducible_components(const SymmetricTensor& tensor) {
  const int n = tensor.dim();
  // Union-find over the support graph: i ~ j when some nonzero entry has
  // both in its base set.
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

  std::vector<bool> incident(static_cast<std::size_t>(n) + 1, false);
  for_each_canonical(tensor.order(), n,
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (tensor.at_rank(rank) == 0) return;
                       std::vector<int> base = base_set_of(entries);
                       for (int v : base) incident[static_cast<std::size_t>(v)] = true;
                       for (std::size_t k = 1; k < base.size(); ++k) unite(base[0], base[k]);
                     });

  // Components keyed by their smallest vertex, in ascending order.
  std::vector<std::vector<int>> components;
  std::vector<int> zero_vertices;
  std::vector<int> component_of_root(static_cast<std::size_t>(n) + 1, -1);
  for (int v = 1; v <= n; ++v) {
    if (!incident[static_cast<std::size_t>(v)]) {
      zero_vertices.push_back(v);
      continue;
    }
    int root = find(v);
    int& slot = component_of_root[static_cast<std::size_t>(root)];
    if (slot < 0) {
      slot = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[static_cast<std::size_t>(slot)].push_back(v);
  }

  std::vector<int> images(static_cast<std::size_t>(n));
  int next = 1;
  for (const auto& component : components) {
    for (int v : component) images[static_cast<std::size_t>(v - 1)] = next++;
  }
  for (int v : zero_vertices) images[static_cast<std::size_t>(v - 1)] = next++;

  BlockDecomposition result{Permutation(std::move(images)), {}, {}, zero_vertices.size()};
  for (auto& component : components) {
    result.blocks.push_back(principal_subtensor(tensor, component));
    result.block_vertices.push_back(std::move(component));
  }
  return result;
}

SymmetricTensor reassemble(const BlockDecomposition& decomposition, int order) {
  SymmetricTensor result = SymmetricTensor::zeros(order, 0);
  for (const SymmetricTensor& block : decomposition.blocks) {
    result = direct_sum(result, block);
  }
  return direct_sum(result, SymmetricTensor::zeros(order, static_cast<int>(decomposition.zero_dim)));
}

BinaryCpResult certify_binary_cp_01(const SymmetricTensor& tensor) {
  if (!tensor.all_values_binary()) {
    fail(ErrorKind::domain_error, "certify_binary_cp_01 requires a (0,1) tensor");
  }
  BlockDecomposition decomposition = irreducible_components(tensor);
  BinaryCpResult result;
  for (std::size_t b = 0; b < decomposition.blocks.size(); ++b) {
    const SymmetricTensor& block = decomposition.blocks[b];
    bool all_ones = std::all_of(block.values().begin(), block.values().end(),
                                [](const Rational& v) { return v == 1; });
    if (!all_ones) {
      result.outcome = Outcome::negative;
      result.witness = BinaryCpResult::Witness{decomposition.block_vertices[b], block};
      return result;
    }
  }
  result.outcome = Outcome::positive;
  for (const auto& vertices : decomposition.block_vertices) {
    std::vector<int> column(static_cast<std::size_t>(tensor.dim()), 0);
    for (int v : vertices) column[static_cast<std::size_t>(v - 1)] = 1;
    result.u_columns.push_back(std::move(column));
    result.block_sizes.push_back(vertices.size());
  }
  return result;
}

DiagonalBcprank diagonal_bcprank(const SymmetricTensor& tensor) {
  if (!tensor.all_values_nonneg_integer()) {
    fail(ErrorKind::domain_error, "diagonal bcprank requires nonnegative integral entries");
  }
  if (!is_diagonal(tensor)) {
    fail(ErrorKind::not_diagonal, "tensor has a nonzero off-diagonal entry");
  }
  DiagonalBcprank result;
  for (int i = 1; i <= tensor.dim(); ++i) {
    Integer d = numerator(tensor.diagonal_entry(i));
    for (Integer c = 0; c < d; ++c) {
      std::vector<int> basis(static_cast<std::size_t>(tensor.dim()), 0);
      basis[static_cast<std::size_t>(i - 1)] = 1;
      result.factors.push_back(std::move(basis));
      ++result.rank;
    }
  }
  return result;
}

namespace {

std::vector<std::vector<Rational>> to_rational_factors(
    const std::vector<std::vector<int>>& factors) {
  std::vector<std::vector<Rational>> result;
  result.reserve(factors.size());
  for (const auto& f : factors) {
    std::vector<Rational> converted(f.size());
    std::transform(f.begin(), f.end(), converted.begin(),
                   [](int v) { return Rational(v); });
    result.push_back(std::move(converted));
  }
  return result;
}

std::vector<int> support_of(const std::vector<int>& factor) {
  std::vector<int> support;
  for (std::size_t i = 0; i < factor.size(); ++i) {
    if (factor[i] != 0) support.push_back(static_cast<int>(i) + 1);
  }
  return support;
}

}  // namespace

UniformBoundsReport uniform_bounds_check(const SymmetricTensor& tensor,
                                         const std::vector<std::vector<int>>& factors) {
  for (const auto& f : factors) {
    bool zero_one = std::all_of(f.begin(), f.end(), [](int v) { return v == 0 || v == 1; });
    if (!zero_one || static_cast<int>(f.size()) != tensor.dim()) {
      fail(ErrorKind::invalid_decomposition, "factors must be (0,1) vectors of matching dimension");
    }
  }
  auto rational_factors = to_rational_factors(factors);
  SymmetricTensor rebuilt = sum_rank_one(rational_factors, tensor.order(), tensor.dim());
  if (!(rebuilt == tensor)) {
    fail(ErrorKind::invalid_decomposition, "decomposition does not reproduce the tensor");
  }

  UniformBoundsReport report;
  report.factor_count = factors.size();
  std::vector<std::vector<int>> supports;
  supports.reserve(factors.size());
  for (const auto& f : factors) supports.push_back(support_of(f));

  report.uniform = true;
  report.support_size = supports.empty() ? 0 : supports.front().size();
  for (const auto& s : supports) {
    if (s.size() != report.support_size) report.uniform = false;
  }

  report.tensor_is_01 = tensor.all_values_binary();
  report.essential_01 = true;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (entries.front() == entries.back()) return;  // diagonal
                       if (!is_binary_value(tensor.at_rank(rank))) report.essential_01 = false;
                     });

  report.supports_disjoint = true;
  report.intersections_at_most_one = true;
  for (std::size_t a = 0; a < supports.size(); ++a) {
    for (std::size_t b = a + 1; b < supports.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(supports[a].begin(), supports[a].end(), supports[b].begin(),
                            supports[b].end(), std::back_inserter(common));
      if (!common.empty()) report.supports_disjoint = false;
      if (common.size() > 1) report.intersections_at_most_one = false;
    }
  }

  const std::size_t m = static_cast<std::size_t>(tensor.order());
  const std::size_t n = static_cast<std::size_t>(tensor.dim());
  report.n_equals_m_times_r = report.uniform && report.support_size == m &&
                              n == m * report.factor_count;
  if (report.tensor_is_01 && report.uniform && report.support_size == m &&
      report.supports_disjoint) {
    report.bound_uniform = report.factor_count;
  }
  if (report.uniform && report.support_size >= 2) {
    std::size_t k = report.support_size;
    report.bound_essential = (n + k - 2) / (k - 1);
  }
  return report;
}

namespace {

struct Candidate {
  std::vector<int> vector;          // (0,1) coordinates, dimension n
  std::vector<std::size_t> covers;  // colex ranks of indices inside the support
};

// All nonzero (0,1) vectors of dimension n in ascending lexicographic order,
// each with the list of canonical index ranks its rank-one power touches.
std::vector<Candidate> enumerate_candidates(int order, int dim) {
  if (dim > 20) {
    fail(ErrorKind::search_space_too_large,
         "candidate enumeration over 2^n vectors is infeasible for n > 20");
  }
  std::vector<Candidate> candidates;
  const std::uint32_t total = (dim <= 0) ? 0 : (1u << dim);
  for (std::uint32_t code = 1; code < total; ++code) {
    Candidate candidate;
    candidate.vector.resize(static_cast<std::size_t>(dim), 0);
    std::vector<int> support;
    // Coordinate 1 is the most significant position in the lexicographic order.
    for (int i = 0; i < dim; ++i) {
      if (code & (1u << (dim - 1 - i))) {
        candidate.vector[static_cast<std::size_t>(i)] = 1;
        support.push_back(i + 1);
      }
    }
    std::vector<int> mapped(static_cast<std::size_t>(order));
    for_each_canonical(order, static_cast<int>(support.size()),
                       [&](const std::vector<int>& entries, std::size_t) {
                         std::transform(entries.begin(), entries.end(), mapped.begin(),
                                        [&support](int i) {
                                          return support[static_cast<std::size_t>(i - 1)];
                                        });
                         candidate.covers.push_back(colex_rank(mapped));
                       });
    candidates.push_back(std::move(candidate));
  }
  // Ascending code order is ascending lexicographic order on the vectors.
  return candidates;
}

struct OracleSearch {
  const std::vector<Candidate>& candidates;
  std::vector<Integer>& residual;
  Integer remaining_mass;  // sum of all residual entries
  std::uint64_t node_cap;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> chosen;

  bool admissible(const Candidate& candidate) const {
    return std::all_of(candidate.covers.begin(), candidate.covers.end(),
                       [&](std::size_t r) { return residual[r] >= 1; });
  }

  void apply(const Candidate& candidate, int delta) {
    for (std::size_t r : candidate.covers) residual[r] += delta;
    remaining_mass += delta * static_cast<long long>(candidate.covers.size());
  }

  bool dfs(std::size_t depth, std::size_t limit, std::size_t first) {
    if (++nodes > node_cap) {
      fail(ErrorKind::search_space_too_large, "oracle node budget exhausted");
    }
    if (remaining_mass == 0) return true;
    if (depth == limit) return false;
    // Each further factor lowers any single entry by at most one.
    Integer max_entry = *std::max_element(residual.begin(), residual.end());
    if (max_entry > static_cast<long long>(limit - depth)) return false;
    for (std::size_t c = first; c < candidates.size(); ++c) {
      if (!admissible(candidates[c])) continue;
      apply(candidates[c], -1);
      chosen.push_back(c);
      if (dfs(depth + 1, limit, c)) return true;
      chosen.pop_back();
      apply(candidates[c], +1);
    }
    return false;
  }
};

}  // namespace

OracleResult oracle_binary_cp_search(const SymmetricTensor& tensor,
                                     const OracleOptions& options) {
  if (!tensor.all_values_nonneg_integer()) {
    fail(ErrorKind::domain_error, "oracle requires nonnegative integral entries");
  }
  Integer diagonal_sum = 0;
  for (int i = 1; i <= tensor.dim(); ++i) diagonal_sum += numerator(tensor.diagonal_entry(i));

  OracleResult result;
  std::size_t requested = options.k_max.value_or(static_cast<std::size_t>(diagonal_sum));
  result.k_max = requested;
  // Depths beyond the diagonal sum cannot carry any nonzero factor.
  std::size_t effective = std::min<std::size_t>(requested, static_cast<std::size_t>(diagonal_sum));

  std::vector<Candidate> candidates = enumerate_candidates(tensor.order(), tensor.dim());
  std::vector<Integer> residual(tensor.size());
  Integer mass = 0;
  for (std::size_t r = 0; r < tensor.size(); ++r) {
    residual[r] = numerator(tensor.at_rank(r));
    mass += residual[r];
  }

  OracleSearch search{candidates, residual, mass, options.node_cap};
  for (std::size_t limit = 0; limit <= effective; ++limit) {
    search.chosen.clear();
    if (search.dfs(0, limit, 0)) {
      result.status = OracleResult::Status::found;
      result.k = search.chosen.size();
      for (std::size_t c : search.chosen) result.factors.push_back(candidates[c].vector);
      result.nodes_visited = search.nodes;
      return result;
    }
  }
  result.status = OracleResult::Status::exhausted;
  result.nodes_visited = search.nodes;
  return result;
}

}  // namespace cpt
