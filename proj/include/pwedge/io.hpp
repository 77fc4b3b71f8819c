#pragma once

#include "pwedge/polytope.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace pwedge {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// Plain-text exact-rational polytope file:
//
//   # comments and blank lines are skipped
//   dim 3
//   facets 6
//   1 -1 0 0            <- n rows "a0 a1 ... ad" encoding a0 + a.x >= 0
//   ...
//   labels              <- optional block, exactly n label lines
//   Original(0)
//   ...
//   vertices 8          <- optional block, that many rows of d rationals
//   1 1 1
//   ...
//
// Rationals are written "p/q" or as plain integers; serialize/parse
// round-trips are bit-exact.
struct PolytopeFileData {
  HRepresentation hrep;
  std::optional<VRepresentation> vrep;
};

PolytopeFileData parse_polytope_text(const std::string& text);
PolytopeFileData parse_polytope_file(const std::string& path);

std::string serialize_polytope(const HRepresentation& h,
                               const VRepresentation* v = nullptr);
std::string serialize_polytope(const Polytope& p);
void write_polytope_file(const std::string& path, const std::string& bytes);

// Assembles a Polytope from file data: canonicalizes when requested or when
// the rows are not already canonical, carries a supplied vertex block along
// (translated by the canonicalization shift), and enumerates otherwise.
Polytope load_polytope(const PolytopeFileData& data, bool force_canonicalize = false,
                       const std::optional<QVector>& interior_hint = std::nullopt);

}  // namespace pwedge
