#pragma once

#include "pwedge/labels.hpp"
#include "pwedge/linalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pwedge {

// Domain errors.  Library operations throw these; the CLI maps them to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoInteriorPoint : public Error { public: using Error::Error; };
class Unbounded : public Error { public: using Error::Error; };
class DuplicateFacet : public Error { public: using Error::Error; };
class VertexInfeasible : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class ConsistencyError : public Error { public: using Error::Error; };
class InvalidSelection : public Error { public: using Error::Error; };

// One closed half-space, offset + normal.x <= 0.  Canonical form fixes
// offset = -1, i.e. normal.x <= 1 with the origin strictly interior.
struct Facet {
  Rational offset;
  QVector normal;
  FacetLabel label;
};

struct HRepresentation {
  int dim = 0;
  std::vector<Facet> facets;
  bool canonical = false;

  int facet_count() const { return static_cast<int>(facets.size()); }
  // Exact slack of facet i at x: offset + normal.x (<= 0 inside, = 0 on the facet).
  Rational row_value(int i, const QVector& x) const;
  bool contains(const QVector& x) const;       // all slacks <= 0
  bool strictly_contains(const QVector& x) const;  // all slacks < 0
  // Normals of the chosen facets as a |set| x dim matrix (rows in set order).
  QMatrix normal_matrix(const std::vector<int>& facet_set) const;
  int find_label(const FacetLabel& label) const;  // -1 if absent; throws on duplicates
};

struct VRepresentation {
  int dim = 0;
  std::vector<QVector> vertices;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int find(const QVector& v) const;  // -1 if absent
};

// {0,1} facet x vertex matrix M = IsZero(H^T V), computed by exact zero tests.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(int facet_count, int vertex_count);

  int facet_count() const { return n_; }
  int vertex_count() const { return m_; }
  bool at(int facet, int vertex) const { return bits_[index(facet, vertex)] != 0; }
  void set(int facet, int vertex, bool value) { bits_[index(facet, vertex)] = value ? 1 : 0; }

  std::vector<int> facets_of_vertex(int vertex) const;
  std::vector<int> vertices_of_facet(int facet) const;
  int column_ones(int vertex) const;
  int row_ones(int facet) const;

 private:
  std::size_t index(int facet, int vertex) const {
    return static_cast<std::size_t>(facet) * m_ + vertex;
  }
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> bits_;
};

// An H-representation, its vertex set, and their incidence matrix, kept
// mutually consistent.  construction_step counts wedge/perturbation steps
// applied since the base polytope and feeds facet-label lineage.
struct Polytope {
  HRepresentation hrep;
  VRepresentation vrep;
  IncidenceMatrix incidence;
  int construction_step = 0;

  int dim() const { return hrep.dim; }
  int facet_count() const { return hrep.facet_count(); }
  int vertex_count() const { return vrep.vertex_count(); }

  // Builds the incidence matrix and validates mutual consistency: every
  // vertex feasible, incident to >= dim facets whose normals have rank dim,
  // and no duplicate vertices.
  static Polytope assemble(HRepresentation h, VRepresentation v, int construction_step = 0);
};

struct CanonicalizeResult {
  HRepresentation hrep;
  QVector shift;  // canonical x = input x - shift
};

// Translates the polytope so the origin is strictly interior and rescales
// every facet row to the canonical normal.x <= 1 form.  Combinatorics are
// unchanged.  Uses the hint when given (must be strictly interior), the
// origin when it already qualifies, and otherwise the average of dim+1
// affinely independent vertices found by a preliminary enumeration sweep.
CanonicalizeResult canonicalize_with_shift(const HRepresentation& h,
                                           const std::optional<QVector>& interior_hint = std::nullopt);
HRepresentation canonicalize(const HRepresentation& h,
                             const std::optional<QVector>& interior_hint = std::nullopt);

// Throws Unbounded if the recession cone {r : normal_i.r <= 0 for all i}
// contains a nonzero ray.
void ensure_bounded(const HRepresentation& h);

// Exact vertex enumeration: solves every dim-subset of facet hyperplanes of
// full rank, keeps the feasible solutions, deduplicates.  Correct on
// nonsimple polytopes; subsets are visited in lexicographic order so the
// output order is reproducible.
VRepresentation enumerate_vertices(const HRepresentation& h);

IncidenceMatrix incidence_matrix(const HRepresentation& h, const VRepresentation& v);

// Dimension of the intersection of the chosen facet hyperplanes, provided
// that intersection meets the polytope in a nonempty face (i.e. some vertex
// lies on every chosen facet); nullopt otherwise.
std::optional<int> face_dimension(const Polytope& p, const std::vector<int>& facet_set);

struct EdgeGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;       // u < v
  std::vector<std::vector<int>> adjacency;      // sorted neighbor lists

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  bool adjacent(int u, int v) const;
};

// u ~ v iff the vertices incident to every facet common to u and v are
// exactly {u, v} and the common facets' hyperplanes intersect in a line.
EdgeGraph edge_graph(const Polytope& p);

// Enumerates vertices of a canonical H-representation and assembles the
// consistent triple.
Polytope polytope_from_h(const HRepresentation& h, int construction_step = 0);

}  // namespace pwedge
