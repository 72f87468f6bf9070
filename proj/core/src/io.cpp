#include "cpt/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace cpt {

namespace {

// Splits one line into tokens and remembers each token's 1-based column.
struct Line {
  std::size_t number = 0;
  std::string text;

  struct Token {
    std::string_view text;
    std::size_t column;
  };

  std::vector<Token> split(char separator) const {
    std::vector<Token> tokens;
    std::size_t start = 0;
    while (true) {
      std::size_t end = text.find(separator, start);
      std::string_view piece(text.data() + start,
                             (end == std::string::npos ? text.size() : end) - start);
      tokens.push_back({piece, start + 1});
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return tokens;
  }

  [[noreturn]] void error(const std::string& message, std::size_t column = 1) const {
    throw ParseError(message, number, column);
  }
};

struct Reader {
  std::istream& input;
  std::size_t line_number = 0;

  std::optional<Line> next() {
    std::string text;
    if (!std::getline(input, text)) return std::nullopt;
    ++line_number;
    return Line{line_number, std::move(text)};
  }
};

int parse_int_token(const Line& line, const Line::Token& token, const char* what) {
  if (token.text.empty()) line.error(std::string("expected ") + what, token.column);
  int value = 0;
  for (char c : token.text) {
    if (c < '0' || c > '9') {
      line.error(std::string("malformed ") + what + " '" + std::string(token.text) + "'",
                 token.column);
    }
    if (value > 100'000'000) line.error(std::string(what) + " too large", token.column);
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_value_token(const Line& line, const Line::Token& token) {
  auto value = parse_rational(token.text);
  if (!value) {
    line.error("malformed value '" + std::string(token.text) + "'", token.column);
  }
  return *value;
}

// Header of the form "key1 V1 key2 V2 key3 WORD".
std::vector<Line::Token> header_tokens(const Line& line, std::initializer_list<const char*> keys) {
  auto tokens = line.split(' ');
  if (tokens.size() != keys.size() * 2) {
    line.error("malformed header; expected " + std::to_string(keys.size() * 2) + " fields");
  }
  std::size_t k = 0;
  std::vector<Line::Token> values;
  for (const char* key : keys) {
    if (tokens[2 * k].text != key) {
      line.error(std::string("expected '") + key + "'", tokens[2 * k].column);
    }
    values.push_back(tokens[2 * k + 1]);
    ++k;
  }
  return values;
}

std::vector<int> parse_index_tokens(const Line& line, const Line::Token& token, int dim,
                                    const char* what) {
  Line sub{line.number, std::string(token.text)};
  std::vector<int> entries;
  for (const auto& piece : sub.split(',')) {
    Line::Token shifted{piece.text, token.column + piece.column - 1};
    int v = parse_int_token(line, shifted, what);
    if (v < 1 || v > dim) {
      line.error(std::string(what) + " " + std::to_string(v) + " outside [1.." +
                     std::to_string(dim) + "]",
                 shifted.column);
    }
    entries.push_back(v);
  }
  if (!std::is_sorted(entries.begin(), entries.end())) {
    line.error(std::string(what) + " list must be sorted", token.column);
  }
  return entries;
}

}  // namespace

SymmetricTensor read_tensor(std::istream& input) {
  Reader reader{input};
  auto header = reader.next();
  if (!header) throw ParseError("missing tensor header", 1, 1);
  auto fields = header_tokens(*header, {"order", "dim", "domain"});
  int order = parse_int_token(*header, fields[0], "order");
  int dim = parse_int_token(*header, fields[1], "dim");
  if (order < 2) header->error("order must be at least 2", fields[0].column);
  auto domain = parse_domain(fields[2].text);
  if (!domain) header->error("unknown domain '" + std::string(fields[2].text) + "'", fields[2].column);

  SymmetricTensor::Builder builder(order, dim);
  std::vector<bool> assigned(canonical_count(order, dim), false);
  while (auto line = reader.next()) {
    auto tokens = line->split(' ');
    if (tokens.size() != 2) line->error("expected 'i1,...,im value'");
    std::vector<int> entries = parse_index_tokens(*line, tokens[0], dim, "index entry");
    if (static_cast<int>(entries.size()) != order) {
      line->error("expected " + std::to_string(order) + " index entries", tokens[0].column);
    }
    std::size_t rank = colex_rank(entries);
    if (assigned[rank]) line->error("duplicate canonical index", tokens[0].column);
    assigned[rank] = true;
    Rational value = parse_value_token(*line, tokens[1]);
    bool in_domain = *domain == Domain::rational ||
                     (*domain == Domain::integer && is_nonneg_integer(value)) ||
                     (*domain == Domain::binary && is_binary_value(value));
    if (!in_domain) {
      line->error("value outside declared domain '" + std::string(fields[2].text) + "'",
                  tokens[1].column);
    }
    builder.set(entries, std::move(value));
  }
  return std::move(builder).build(*domain);
}

SymmetricTensor read_tensor(const std::string& text) {
  std::istringstream stream(text);
  return read_tensor(stream);
}

void write_tensor(std::ostream& output, const SymmetricTensor& tensor) {
  output << "order " << tensor.order() << " dim " << tensor.dim() << " domain "
         << to_string(tensor.domain()) << "\n";
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       const Rational& value = tensor.at_rank(rank);
                       if (value == 0) return;
                       for (std::size_t k = 0; k < entries.size(); ++k) {
                         if (k > 0) output << ',';
                         output << entries[k];
                       }
                       output << ' ' << to_string(value) << "\n";
                     });
}

std::string to_text(const SymmetricTensor& tensor) {
  std::ostringstream stream;
  write_tensor(stream, tensor);
  return stream.str();
}

FactorMatrix read_factor_matrix(std::istream& input) {
  Reader reader{input};
  auto header = reader.next();
  if (!header) throw ParseError("missing factor matrix header", 1, 1);
  auto fields = header_tokens(*header, {"dim", "cols"});
  int dim = parse_int_token(*header, fields[0], "dim");
  int cols = parse_int_token(*header, fields[1], "cols");

  std::vector<std::vector<Rational>> columns;
  while (auto line = reader.next()) {
    std::vector<Rational> column;
    if (dim > 0) {
      for (const auto& token : line->split(',')) {
        column.push_back(parse_value_token(*line, token));
      }
    } else if (!line->text.empty()) {
      line->error("expected an empty line for a dimension-0 column");
    }
    if (static_cast<int>(column.size()) != dim) {
      line->error("expected " + std::to_string(dim) + " entries");
    }
    columns.push_back(std::move(column));
  }
  if (static_cast<int>(columns.size()) != cols) {
    throw ParseError("expected " + std::to_string(cols) + " columns, found " +
                         std::to_string(columns.size()),
                     reader.line_number + 1, 1);
  }
  return FactorMatrix(std::move(columns));
}

FactorMatrix read_factor_matrix(const std::string& text) {
  std::istringstream stream(text);
  return read_factor_matrix(stream);
}

void write_factor_matrix(std::ostream& output, const FactorMatrix& matrix) {
  output << "dim " << matrix.vector_dim() << " cols " << matrix.column_count() << "\n";
  for (const auto& column : matrix.columns()) {
    for (std::size_t k = 0; k < column.size(); ++k) {
      if (k > 0) output << ',';
      output << to_string(column[k]);
    }
    output << "\n";
  }
}

std::string to_text(const FactorMatrix& matrix) {
  std::ostringstream stream;
  write_factor_matrix(stream, matrix);
  return stream.str();
}

MultiHypergraph read_hypergraph(std::istream& input) {
  Reader reader{input};
  auto header = reader.next();
  if (!header) throw ParseError("missing hypergraph header", 1, 1);
  auto fields = header_tokens(*header, {"order", "vertices"});
  int order = parse_int_token(*header, fields[0], "order");
  int vertices = parse_int_token(*header, fields[1], "vertices");
  if (order < 2) header->error("order must be at least 2", fields[0].column);

  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> seen;
  while (auto line = reader.next()) {
    auto tokens = line->split(' ');
    if (tokens.size() != 1) line->error("expected one edge per line");
    std::vector<int> edge = parse_index_tokens(*line, tokens[0], vertices, "vertex");
    if (static_cast<int>(edge.size()) != order) {
      line->error("expected " + std::to_string(order) + " vertices", tokens[0].column);
    }
    if (!seen.insert(edge).second) line->error("duplicate edge", tokens[0].column);
    edges.push_back(std::move(edge));
  }
  return MultiHypergraph(order, vertices, edges);
}

MultiHypergraph read_hypergraph(const std::string& text) {
  std::istringstream stream(text);
  return read_hypergraph(stream);
}

void write_hypergraph(std::ostream& output, const MultiHypergraph& graph) {
  output << "order " << graph.order() << " vertices " << graph.vertex_count() << "\n";
  for (const auto& edge : graph.edges()) {
    for (std::size_t k = 0; k < edge.size(); ++k) {
      if (k > 0) output << ',';
      output << edge[k];
    }
    output << "\n";
  }
}

std::string to_text(const MultiHypergraph& graph) {
  std::ostringstream stream;
  write_hypergraph(stream, graph);
  return stream.str();
}

}  // namespace cpt
