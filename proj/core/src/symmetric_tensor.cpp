#include "cpt/symmetric_tensor.hpp"

#include <algorithm>

namespace cpt {

const char* to_string(Domain domain) {
  switch (domain) {
    case Domain::binary: return "binary";
    case Domain::integer: return "integer";
    case Domain::rational: return "rational";
  }
  return "unknown";
}

std::optional<Domain> parse_domain(std::string_view text) {
  if (text == "binary") return Domain::binary;
  if (text == "integer") return Domain::integer;
  if (text == "rational") return Domain::rational;
  return std::nullopt;
}

Domain join(Domain a, Domain b) { return a > b ? a : b; }

Domain detect_domain(std::span<const Rational> values) {
  Domain domain = Domain::binary;
  for (const Rational& v : values) {
    if (is_binary_value(v)) continue;
    if (is_nonneg_integer(v)) {
      domain = join(domain, Domain::integer);
    } else {
      return Domain::rational;
    }
  }
  return domain;
}

namespace {

void check_shape(int order, int dim) {
  if (order < 2) fail(ErrorKind::invalid_argument, "tensor order must be at least 2");
  if (dim < 0) fail(ErrorKind::invalid_argument, "tensor dimension must be nonnegative");
}

void check_domain(std::span<const Rational> values, Domain domain) {
  for (const Rational& v : values) {
    bool ok = domain == Domain::rational ||
              (domain == Domain::integer && is_nonneg_integer(v)) ||
              (domain == Domain::binary && is_binary_value(v));
    if (!ok) {
      fail(ErrorKind::domain_error,
           "value " + to_string(v) + " outside domain " + to_string(domain));
    }
  }
}

}  // namespace

SymmetricTensor::Builder::Builder(int order, int dim) : order_(order), dim_(dim) {
  check_shape(order, dim);
  values_.assign(canonical_count(order, dim), Rational(0));
}

SymmetricTensor::Builder& SymmetricTensor::Builder::set(std::span<const int> raw_index,
                                                        Rational value) {
  MultiIndex index = MultiIndex::canonicalize(raw_index, dim_);
  if (index.order() != order_) {
    fail(ErrorKind::order_mismatch, "subscript length does not match tensor order");
  }
  values_[colex_rank(index.entries())] = std::move(value);
  return *this;
}

SymmetricTensor::Builder& SymmetricTensor::Builder::set(
    std::initializer_list<int> raw_index, Rational value) {
  return set(std::span<const int>(raw_index.begin(), raw_index.size()), std::move(value));
}

SymmetricTensor SymmetricTensor::Builder::build() && {
  Domain domain = detect_domain(values_);
  return SymmetricTensor(order_, dim_, std::move(values_), domain);
}

SymmetricTensor SymmetricTensor::Builder::build(Domain domain) && {
  return SymmetricTensor(order_, dim_, std::move(values_), domain);
}

SymmetricTensor SymmetricTensor::zeros(int order, int dim) {
  return SymmetricTensor(order, dim,
                         std::vector<Rational>(canonical_count(order, dim), Rational(0)),
                         Domain::binary);
}

SymmetricTensor SymmetricTensor::constant(int order, int dim, const Rational& value) {
  std::vector<Rational> values(canonical_count(order, dim), value);
  Domain domain = detect_domain(values);
  return SymmetricTensor(order, dim, std::move(values), domain);
}

SymmetricTensor SymmetricTensor::all_ones(int order, int dim) {
  return constant(order, dim, Rational(1));
}

SymmetricTensor SymmetricTensor::diagonal(int order,
                                          std::span<const Rational> diagonal_values) {
  Builder builder(order, static_cast<int>(diagonal_values.size()));
  std::vector<int> index(static_cast<std::size_t>(order));
  for (int i = 1; i <= static_cast<int>(diagonal_values.size()); ++i) {
    std::fill(index.begin(), index.end(), i);
    builder.set(index, diagonal_values[static_cast<std::size_t>(i - 1)]);
  }
  return std::move(builder).build();
}

SymmetricTensor::SymmetricTensor(int order, int dim, std::vector<Rational> values,
                                 Domain domain)
    : order_(order), dim_(dim), domain_(domain), values_(std::move(values)) {
  check_shape(order, dim);
  if (values_.size() != canonical_count(order, dim)) {
    fail(ErrorKind::invalid_argument, "value array does not match canonical storage size");
  }
  check_domain(values_, domain_);
}

const Rational& SymmetricTensor::at(std::span<const int> raw_index) const {
  MultiIndex index = MultiIndex::canonicalize(raw_index, dim_);
  if (index.order() != order_) {
    fail(ErrorKind::order_mismatch, "subscript length does not match tensor order");
  }
  return values_[colex_rank(index.entries())];
}

const Rational& SymmetricTensor::at(std::initializer_list<int> raw_index) const {
  return at(std::span<const int>(raw_index.begin(), raw_index.size()));
}

const Rational& SymmetricTensor::at(const MultiIndex& index) const {
  if (index.order() != order_ || index.dim() != dim_) {
    fail(ErrorKind::order_mismatch, "multi-index shape does not match tensor");
  }
  return values_[colex_rank(index.entries())];
}

const Rational& SymmetricTensor::diagonal_entry(int i) const {
  std::vector<int> index(static_cast<std::size_t>(order_), i);
  return at(index);
}

SymmetricTensor SymmetricTensor::with_domain(Domain domain) const {
  return SymmetricTensor(order_, dim_, values_, domain);
}

bool SymmetricTensor::all_values_binary() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return is_binary_value(v); });
}

bool SymmetricTensor::all_values_nonneg_integer() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return is_nonneg_integer(v); });
}

bool SymmetricTensor::operator==(const SymmetricTensor& other) const {
  return order_ == other.order_ && dim_ == other.dim_ && values_ == other.values_;
}

std::optional<MultiIndex> first_difference(const SymmetricTensor& a,
                                           const SymmetricTensor& b) {
  if (a.order() != b.order()) fail(ErrorKind::order_mismatch, "comparing tensors of different order");
  if (a.dim() != b.dim()) fail(ErrorKind::dimension_mismatch, "comparing tensors of different dimension");
  std::optional<MultiIndex> result;
  for_each_canonical(a.order(), a.dim(), [&](const std::vector<int>& entries, std::size_t rank) {
    if (!result && a.at_rank(rank) != b.at_rank(rank)) {
      result = MultiIndex(entries, a.dim());
    }
  });
  return result;
}

}  // namespace cpt
