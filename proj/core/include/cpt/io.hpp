#pragma once

#include <iosfwd>
#include <string>

#include "cpt/gramian.hpp"
#include "cpt/hypergraph.hpp"
#include "cpt/symmetric_tensor.hpp"

namespace cpt {

// Text formats. All three are line oriented, exact, and canonical: writers
// produce a unique byte representation and reading it back is lossless.
//
// tensor:        "order M dim N domain {binary|integer|rational}" then one
//                line "i1,i2,...,im VALUE" per nonzero canonical entry in
//                storage order; omitted indices are zero; values printed as
//                integers or "p/q".
// factor matrix: "dim D cols N" then one column per line as comma-separated
//                rationals.
// hypergraph:    "order M vertices N" then one edge per line as
//                comma-separated sorted vertices.

SymmetricTensor read_tensor(std::istream& input);
SymmetricTensor read_tensor(const std::string& text);
void write_tensor(std::ostream& output, const SymmetricTensor& tensor);
std::string to_text(const SymmetricTensor& tensor);

FactorMatrix read_factor_matrix(std::istream& input);
FactorMatrix read_factor_matrix(const std::string& text);
void write_factor_matrix(std::ostream& output, const FactorMatrix& matrix);
std::string to_text(const FactorMatrix& matrix);

MultiHypergraph read_hypergraph(std::istream& input);
MultiHypergraph read_hypergraph(const std::string& text);
void write_hypergraph(std::ostream& output, const MultiHypergraph& graph);
std::string to_text(const MultiHypergraph& graph);

}  // namespace cpt
