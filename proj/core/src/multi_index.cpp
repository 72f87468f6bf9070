#include "cpt/multi_index.hpp"

#include <algorithm>
#include <numeric>

namespace cpt {

namespace {

void check_entries(std::span<const int> entries, int dim) {
  for (int v : entries) {
    if (v < 1 || v > dim) {
      fail(ErrorKind::index_out_of_range,
           "subscript entry " + std::to_string(v) + " outside [1.." +
               std::to_string(dim) + "]");
    }
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries, int dim)
    : entries_(std::move(entries)), dim_(dim) {
  if (order() < 1) fail(ErrorKind::invalid_argument, "multi-index needs at least one entry");
  check_entries(entries_, dim_);
  if (!std::is_sorted(entries_.begin(), entries_.end())) {
    fail(ErrorKind::invalid_argument, "multi-index entries must be non-decreasing");
  }
}

MultiIndex MultiIndex::canonicalize(std::span<const int> raw, int dim) {
  check_entries(raw, dim);
  std::vector<int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  return MultiIndex(std::move(sorted), dim);
}

std::vector<int> MultiIndex::base_set() const { return base_set_of(entries_); }

long MultiIndex::level() const {
  long sum = std::accumulate(entries_.begin(), entries_.end(), 0L);
  return sum - order();
}

Integer MultiIndex::multiplicity() const { return permutation_count(entries_); }

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(),
                                                other.entries_.begin(),
                                                other.entries_.end());
}

std::size_t canonical_count(int order, int dim) {
  if (dim <= 0) return 0;
  return binomial_size(dim + order - 1, order);
}

std::size_t colex_rank(std::span<const int> entries) {
  // Shift to a strictly increasing combination, then rank it in colex:
  // rank = sum_k C(entries[k-1] + k - 2, k) over 1-based positions k.
  std::size_t rank = 0;
  for (std::size_t k = 1; k <= entries.size(); ++k) {
    long long c = entries[k - 1] + static_cast<long long>(k) - 2;
    rank += binomial_size(c, static_cast<long long>(k));
  }
  return rank;
}

bool next_index_colex(std::vector<int>& entries, int dim) {
  const std::size_t m = entries.size();
  for (std::size_t k = 0; k < m; ++k) {
    int limit = (k + 1 < m) ? entries[k + 1] : dim;
    if (entries[k] < limit) {
      ++entries[k];
      std::fill(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(k), 1);
      return true;
    }
  }
  return false;
}

bool next_index_lex(std::vector<int>& entries, int dim) {
  const std::size_t m = entries.size();
  for (std::size_t k = m; k-- > 0;) {
    if (entries[k] < dim) {
      int v = entries[k] + 1;
      std::fill(entries.begin() + static_cast<std::ptrdiff_t>(k), entries.end(), v);
      return true;
    }
  }
  return false;
}

Integer permutation_count(std::span<const int> entries) {
  Integer result = 1;
  for (std::size_t i = 1; i <= entries.size(); ++i) result *= static_cast<long>(i);
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    Integer run_factorial = 1;
    for (std::size_t r = 1; r <= j - i; ++r) run_factorial *= static_cast<long>(r);
    result /= run_factorial;
    i = j;
  }
  return result;
}

std::vector<int> base_set_of(std::span<const int> entries) {
  std::vector<int> base;
  for (int v : entries) {
    if (base.empty() || base.back() != v) base.push_back(v);
  }
  return base;
}

}  // namespace cpt
