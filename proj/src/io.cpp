#include "tropical/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>

namespace tropical {

FileParseError::FileParseError(std::string msg, int line, int column)
    : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line(line),
      column(column) {}

namespace {

/// Line-oriented reader skipping blank lines and `#` comments.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next significant line split into whitespace tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg, int column = 1) const {
    throw FileParseError(msg, line_no_, column);
  }

  void expect(const std::vector<std::string>& tokens) {
    std::vector<std::string> got;
    if (!next(got)) fail("unexpected end of file");
    if (got != tokens) {
      std::string want;
      for (const auto& t : tokens) want += t + " ";
      fail("expected '" + want + "'");
    }
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

Scalar scalar_at(LineReader& r, const std::vector<std::string>& tokens,
                 std::size_t i) {
  try {
    return parse_scalar(tokens[i]);
  } catch (const std::invalid_argument& e) {
    r.fail(e.what(), static_cast<int>(i) + 1);
  }
}

std::vector<Scalar> read_scalar_row(LineReader& r, int d) {
  std::vector<std::string> tokens;
  if (!r.next(tokens)) r.fail("unexpected end of file, expected a row");
  if (static_cast<int>(tokens.size()) != d)
    r.fail("expected " + std::to_string(d) + " scalars, got " +
           std::to_string(tokens.size()));
  std::vector<Scalar> row;
  row.reserve(d);
  for (std::size_t i = 0; i < tokens.size(); ++i)
    row.push_back(scalar_at(r, tokens, i));
  return row;
}

Vector read_row(LineReader& r, int d) {
  return Vector(read_scalar_row(r, d));
}

long read_count(LineReader& r, const std::vector<std::string>& tokens,
                const std::string& key, long lo) {
  if (tokens.size() != 2 || tokens[0] != key)
    r.fail("expected '" + key + " <count>'");
  try {
    long v = std::stol(tokens[1]);
    if (v < lo) r.fail(key + " out of range");
    return v;
  } catch (const std::logic_error&) {
    r.fail("malformed count '" + tokens[1] + "'");
  }
}

Matrix read_matrix(LineReader& r, int n, int d, const std::string& marker) {
  r.expect({marker});
  Matrix m(n, d);
  for (int k = 0; k < n; ++k) {
    Vector row = read_row(r, d);
    for (int j = 0; j < d; ++j) m.at(k, j) = row[j];
  }
  return m;
}

void write_row(std::ostream& out, std::span<const Scalar> row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ' ';
    out << row[i];
  }
  out << '\n';
}

void write_row(std::ostream& out, const Vector& v) {
  write_row(out, v.entries());
}

}  // namespace

HrepFile read_hrep(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tokens;
  if (!r.next(tokens) || tokens != std::vector<std::string>{"tropical-hrep", "1"})
    r.fail("expected header 'tropical-hrep 1'");
  if (!r.next(tokens)) r.fail("unexpected end of file");
  int d = static_cast<int>(read_count(r, tokens, "d", 1));
  if (!r.next(tokens)) r.fail("unexpected end of file");
  int n = static_cast<int>(read_count(r, tokens, "n", 0));

  Matrix a = read_matrix(r, n, d, "A");
  std::optional<std::vector<Scalar>> c;
  if (!r.next(tokens)) r.fail("unexpected end of file, expected 'B'");
  if (tokens == std::vector<std::string>{"c"}) {
    if (n == 0) r.fail("affine sections need n >= 1");
    c = read_scalar_row(r, n);
    if (!r.next(tokens)) r.fail("unexpected end of file, expected 'B'");
  }
  if (tokens != std::vector<std::string>{"B"}) r.fail("expected 'B'");
  Matrix b(n, d);
  for (int k = 0; k < n; ++k) {
    Vector row = read_row(r, d);
    for (int j = 0; j < d; ++j) b.at(k, j) = row[j];
  }
  std::optional<std::vector<Scalar>> e;
  if (r.next(tokens)) {
    if (tokens != std::vector<std::string>{"e"}) r.fail("expected 'e' or end of file");
    if (n == 0) r.fail("affine sections need n >= 1");
    e = read_scalar_row(r, n);
    if (r.next(tokens)) r.fail("trailing content");
  }

  if (c.has_value() != e.has_value())
    r.fail("affine files need both 'c' and 'e' sections");
  HrepFile out{IneqSystem(a, b), std::nullopt};
  if (c) out.affine = AffineSystem(std::move(a), std::move(*c), std::move(b),
                                   std::move(*e));
  return out;
}

void write_hrep(std::ostream& out, const IneqSystem& s) {
  out << "tropical-hrep 1\n"
      << "d " << s.dim() << "\nn " << s.rows() << "\nA\n";
  for (int k = 0; k < s.rows(); ++k) write_row(out, s.A.row_vector(k));
  out << "B\n";
  for (int k = 0; k < s.rows(); ++k) write_row(out, s.B.row_vector(k));
}

void write_hrep(std::ostream& out, const AffineSystem& s) {
  out << "tropical-hrep 1\n"
      << "d " << s.dim() << "\nn " << s.rows() << "\nA\n";
  for (int k = 0; k < s.rows(); ++k) write_row(out, s.A.row_vector(k));
  out << "c\n";
  write_row(out, s.c);
  out << "B\n";
  for (int k = 0; k < s.rows(); ++k) write_row(out, s.B.row_vector(k));
  out << "e\n";
  write_row(out, s.e);
}

VrepFile read_vrep(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tokens;
  if (!r.next(tokens) || tokens != std::vector<std::string>{"tropical-vrep", "1"})
    r.fail("expected header 'tropical-vrep 1'");
  if (!r.next(tokens)) r.fail("unexpected end of file");
  VrepFile out;
  out.d = static_cast<int>(read_count(r, tokens, "d", 1));
  if (!r.next(tokens)) r.fail("unexpected end of file");
  long count = read_count(r, tokens, "count", 0);

  if (!r.next(tokens)) {
    if (count != 0) r.fail("unexpected end of file");
    return out;
  }
  if (tokens[0] == "points") {
    out.affine = true;
    long np = read_count(r, tokens, "points", 0);
    for (long i = 0; i < np; ++i) out.points.push_back(read_row(r, out.d));
    if (!r.next(tokens)) r.fail("expected 'rays' section");
    long nr = read_count(r, tokens, "rays", 0);
    for (long i = 0; i < nr; ++i) out.rays.push_back(read_row(r, out.d));
    if (np + nr != count) r.fail("section sizes do not add up to count");
  } else {
    // flat list; the line in hand is the first row
    if (static_cast<int>(tokens.size()) != out.d) r.fail("expected a row");
    std::vector<Scalar> row;
    for (std::size_t i = 0; i < tokens.size(); ++i)
      row.push_back(scalar_at(r, tokens, i));
    out.rays.push_back(Vector(std::move(row)));
    for (long i = 1; i < count; ++i) out.rays.push_back(read_row(r, out.d));
  }
  if (r.next(tokens)) r.fail("trailing content");
  return out;
}

void write_vrep(std::ostream& out, const GeneratorSet& g) {
  out << "tropical-vrep 1\n"
      << "d " << g.dim() << "\ncount " << g.size() << "\n";
  for (const Vector& v : g.vectors()) write_row(out, v);
}

void write_vrep(std::ostream& out, const std::vector<Vector>& points,
                const std::vector<Vector>& rays, int d) {
  out << "tropical-vrep 1\n"
      << "d " << d << "\ncount " << points.size() + rays.size() << "\n"
      << "points " << points.size() << "\n";
  for (const Vector& v : points) write_row(out, v);
  out << "rays " << rays.size() << "\n";
  for (const Vector& v : rays) write_row(out, v);
}

LabeledHypergraph read_hypergraph(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tokens;
  if (!r.next(tokens) || tokens != std::vector<std::string>{"hypergraph", "1"})
    r.fail("expected header 'hypergraph 1'");
  if (!r.next(tokens) || tokens.size() < 2 || tokens[0] != "nodes")
    r.fail("expected 'nodes <count or labels>'");

  LabeledHypergraph out;
  std::map<std::string, int> intern;
  if (tokens.size() == 2 &&
      tokens[1].find_first_not_of("0123456789") == std::string::npos) {
    long n = std::stol(tokens[1]);
    for (long i = 1; i <= n; ++i) out.labels.push_back(std::to_string(i));
  } else {
    out.labels.assign(tokens.begin() + 1, tokens.end());
  }
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    if (!intern.emplace(out.labels[i], static_cast<int>(i)).second)
      r.fail("duplicate node label '" + out.labels[i] + "'");
  }

  auto node_of = [&](const std::string& label) {
    auto it = intern.find(label);
    if (it == intern.end()) r.fail("unknown node label '" + label + "'");
    return it->second;
  };

  std::vector<Hypergraph::Edge> edges;
  while (r.next(tokens)) {
    auto arrow = std::find(tokens.begin(), tokens.end(), "->");
    if (arrow == tokens.begin() || arrow == tokens.end() ||
        arrow + 1 == tokens.end())
      r.fail("expected '<tail labels> -> <head labels>'");
    Hypergraph::Edge e;
    for (auto it = tokens.begin(); it != arrow; ++it)
      e.tail.push_back(node_of(*it));
    for (auto it = arrow + 1; it != tokens.end(); ++it)
      e.head.push_back(node_of(*it));
    edges.push_back(std::move(e));
  }
  out.hypergraph =
      Hypergraph(static_cast<int>(out.labels.size()), std::move(edges));
  return out;
}

void write_hypergraph(std::ostream& out, const LabeledHypergraph& h) {
  out << "hypergraph 1\nnodes";
  for (const auto& l : h.labels) out << ' ' << l;
  out << '\n';
  for (const auto& e : h.hypergraph.edges()) {
    for (std::size_t i = 0; i < e.tail.size(); ++i)
      out << (i ? " " : "") << h.labels[e.tail[i]];
    out << " ->";
    for (int v : e.head) out << ' ' << h.labels[v];
    out << '\n';
  }
}

Vector parse_vector_literal(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), '(', ' ');
  std::replace(cleaned.begin(), cleaned.end(), ')', ' ');
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream ss(cleaned);
  std::vector<Scalar> entries;
  std::string tok;
  while (ss >> tok) entries.push_back(parse_scalar(tok));
  if (entries.empty())
    throw std::invalid_argument("empty vector literal");
  return Vector(std::move(entries));
}

}  // namespace tropical
