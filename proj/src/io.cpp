#include "pwedge/io.hpp"

#include <fstream>
#include <sstream>

namespace pwedge {

namespace {

struct LineReader {
  std::istringstream stream;
  int line_number = 0;

  explicit LineReader(const std::string& text) : stream(text) {}

  // Next non-blank, non-comment line; nullopt at end of input.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(stream, line)) {
      ++line_number;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      return line.substr(first, last - first + 1);
    }
    return std::nullopt;
  }
};

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

int parse_count(LineReader& reader, const std::string& key) {
  auto line = reader.next();
  if (!line) throw ParseError(reader.line_number, "expected '" + key + " <count>'");
  const auto tokens = split_tokens(*line);
  if (tokens.size() != 2 || tokens[0] != key)
    throw ParseError(reader.line_number, "expected '" + key + " <count>'");
  try {
    const int value = std::stoi(tokens[1]);
    if (value < 0) throw std::out_of_range("negative");
    return value;
  } catch (const std::exception&) {
    throw ParseError(reader.line_number, "malformed count in '" + key + "'");
  }
}

QVector parse_rational_row(LineReader& reader, const std::string& line, std::size_t arity) {
  const auto tokens = split_tokens(line);
  if (tokens.size() != arity)
    throw DimensionMismatch("line " + std::to_string(reader.line_number) + ": expected " +
                            std::to_string(arity) + " rationals, got " +
                            std::to_string(tokens.size()));
  QVector row;
  row.reserve(arity);
  for (const std::string& token : tokens) {
    auto value = parse_rational(token);
    if (!value) throw ParseError(reader.line_number, "malformed rational '" + token + "'");
    row.push_back(*value);
  }
  return row;
}

}  // namespace

PolytopeFileData parse_polytope_text(const std::string& text) {
  LineReader reader(text);
  PolytopeFileData data;
  data.hrep.dim = parse_count(reader, "dim");
  if (data.hrep.dim < 1) throw ParseError(reader.line_number, "dim must be positive");
  const int n = parse_count(reader, "facets");
  if (n < 1) throw ParseError(reader.line_number, "need at least one facet");

  for (int i = 0; i < n; ++i) {
    auto line = reader.next();
    if (!line) throw ParseError(reader.line_number, "missing facet row");
    QVector row = parse_rational_row(reader, *line, data.hrep.dim + 1);
    // A row a0 a1 ... ad encodes a0 + a.x >= 0, i.e. -a0 - a.x <= 0.
    Facet facet;
    facet.offset = -row[0];
    facet.normal.assign(row.begin() + 1, row.end());
    for (Rational& c : facet.normal) c = -c;
    facet.label = FacetLabel::original(i);
    data.hrep.facets.push_back(std::move(facet));
  }

  auto line = reader.next();
  if (line && *line == "labels") {
    for (int i = 0; i < n; ++i) {
      auto label_line = reader.next();
      if (!label_line) throw ParseError(reader.line_number, "missing label row");
      auto label = FacetLabel::parse(*label_line);
      if (!label) throw ParseError(reader.line_number, "malformed label '" + *label_line + "'");
      data.hrep.facets[i].label = *label;
    }
    line = reader.next();
  }

  if (line) {
    const auto tokens = split_tokens(*line);
    if (tokens.size() != 2 || tokens[0] != "vertices")
      throw ParseError(reader.line_number, "expected 'vertices <count>' or end of file");
    int count = 0;
    try {
      count = std::stoi(tokens[1]);
    } catch (const std::exception&) {
      throw ParseError(reader.line_number, "malformed vertex count");
    }
    VRepresentation v;
    v.dim = data.hrep.dim;
    for (int j = 0; j < count; ++j) {
      auto vertex_line = reader.next();
      if (!vertex_line) throw ParseError(reader.line_number, "missing vertex row");
      v.vertices.push_back(parse_rational_row(reader, *vertex_line, data.hrep.dim));
    }
    data.vrep = std::move(v);
    line = reader.next();
  }
  if (line) throw ParseError(reader.line_number, "unexpected trailing content");

  data.hrep.canonical = std::all_of(data.hrep.facets.begin(), data.hrep.facets.end(),
                                    [](const Facet& f) { return f.offset == -1; });
  return data;
}

PolytopeFileData parse_polytope_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_polytope_text(buffer.str());
}

std::string serialize_polytope(const HRepresentation& h, const VRepresentation* v) {
  std::ostringstream out;
  out << "dim " << h.dim << "\n";
  out << "facets " << h.facet_count() << "\n";
  for (const Facet& f : h.facets) {
    out << format_rational(-f.offset);
    for (const Rational& c : f.normal) out << " " << format_rational(-c);
    out << "\n";
  }
  out << "labels\n";
  for (const Facet& f : h.facets) out << f.label.str() << "\n";
  if (v) {
    out << "vertices " << v->vertex_count() << "\n";
    for (const QVector& x : v->vertices) {
      for (std::size_t c = 0; c < x.size(); ++c) out << (c ? " " : "") << format_rational(x[c]);
      out << "\n";
    }
  }
  return out.str();
}

std::string serialize_polytope(const Polytope& p) {
  return serialize_polytope(p.hrep, &p.vrep);
}

void write_polytope_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << bytes;
}

Polytope load_polytope(const PolytopeFileData& data, bool force_canonicalize,
                       const std::optional<QVector>& interior_hint) {
  if (!data.hrep.canonical || force_canonicalize || interior_hint) {
    const CanonicalizeResult canon = canonicalize_with_shift(data.hrep, interior_hint);
    if (data.vrep) {
      VRepresentation shifted = *data.vrep;
      for (QVector& x : shifted.vertices) x = subtract(x, canon.shift);
      return Polytope::assemble(canon.hrep, std::move(shifted));
    }
    return polytope_from_h(canon.hrep);
  }
  if (data.vrep) return Polytope::assemble(data.hrep, *data.vrep);
  return polytope_from_h(data.hrep);
}

}  // namespace pwedge
