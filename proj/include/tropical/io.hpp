#pragma once

#include "tropical/cone.hpp"
#include "tropical/hypergraph.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

/// Parse failure with 1-based source position.
struct FileParseError : std::runtime_error {
  FileParseError(std::string msg, int line, int column);
  int line;
  int column;
};

/// `tropical-hrep 1` file: an inequality system, optionally with affine
/// offset sections `c` and `e`.
struct HrepFile {
  IneqSystem cone;
  std::optional<AffineSystem> affine;
};

HrepFile read_hrep(std::istream& in);
void write_hrep(std::ostream& out, const IneqSystem& s);
void write_hrep(std::ostream& out, const AffineSystem& s);

/// `tropical-vrep 1` file: normalized generators, either one flat list or
/// `points` / `rays` sections in affine mode.
struct VrepFile {
  int d = 0;
  bool affine = false;
  std::vector<Vector> rays;    // flat list in cone mode
  std::vector<Vector> points;  // affine mode only
};

VrepFile read_vrep(std::istream& in);
void write_vrep(std::ostream& out, const GeneratorSet& g);
void write_vrep(std::ostream& out, const std::vector<Vector>& points,
                const std::vector<Vector>& rays, int d);

/// `hypergraph 1` file; node labels are interned in first-appearance
/// order (declaration line first, then edge lines).
struct LabeledHypergraph {
  Hypergraph hypergraph{0};
  std::vector<std::string> labels;
};

LabeledHypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const LabeledHypergraph& h);

/// Vector literal such as "2,2,0", "(2, 2.5, 0)" or "-inf,0,-inf".
Vector parse_vector_literal(std::string_view text);

}  // namespace tropical
