#pragma once

#include "pwedge/polytope.hpp"

#include <map>
#include <vector>

namespace pwedge {

class FootNotFound : public Error { public: using Error::Error; };
class InputNotCanonical : public Error { public: using Error::Error; };
class GIsTopOrBase : public Error { public: using Error::Error; };
class InvalidEpsilon : public Error { public: using Error::Error; };
class EpsilonTooLarge : public Error { public: using Error::Error; };
class NoStableEpsilon : public Error { public: using Error::Error; };

// Wedge over a facet.  Facet order in the output: the foot's two children
// first (top with last normal coordinate +1, then base with -1), then the
// remaining facets in parent order as vertical facets (last coordinate 0).
// Vertex order: foot vertices, then top images, then base images, each block
// in parent order.
struct WedgeResult {
  Polytope polytope;  // dimension d+1, n+1 facets, 2m - f0(foot) vertices
  int top_index = 0;
  int base_index = 1;
  std::map<int, int> foot_vertex_map;  // parent vertex -> child vertex
  std::map<int, int> top_vertex_map;
  std::map<int, int> base_vertex_map;
  std::vector<int> facet_image;  // parent facet -> child facet (foot -> top_index)
  int foot = -1;                 // parent foot index
};

WedgeResult wedge(const Polytope& p, int foot);

// Partition of the wedge vertices incident to a vertical facet g by the sign
// of the last coordinate, each member sub-tagged by whether g terminates
// exactly one edge there (removing g from the vertex's facet set leaves an
// intersection of dimension exactly 1) or more.
struct VertexClass {
  struct Member {
    int vertex = -1;
    bool single_edge = false;
  };
  int facet = -1;
  std::vector<Member> foot;       // last coordinate 0
  std::vector<Member> top_only;   // last coordinate > 0
  std::vector<Member> base_only;  // last coordinate < 0
};

VertexClass classify_vertices(const WedgeResult& w, int g);

struct PerturbedWedgeResult {
  Polytope polytope;
  Rational epsilon;
  int g_tilde_index = -1;
  // Wedge vertex -> new vertex.  Vertices off g, foot-class vertices, and
  // base-only multi-edge vertices map to bitwise-identical coordinates;
  // single-edge vertices map to their image displaced along the unique
  // g-terminated edge.
  std::map<int, int> survivors;
  std::vector<int> created;  // new vertices, all incident to the perturbed facet
  std::vector<int> removed;  // wedge vertices truncated away
  VertexClass classification;
};

// Replaces the last normal coordinate of vertical facet g by eps > 0,
// re-enumerates, and validates the three-type classification: foot-class
// vertices survive unchanged, top-only multi-edge vertices are truncated
// away, base-only multi-edge vertices survive, single-edge vertices are
// displaced along their g-terminated edge.  Throws EpsilonTooLarge when the
// validation fails, signalling the caller to shrink eps.
PerturbedWedgeResult perturb(const WedgeResult& w, int g, const Rational& eps);

// Smallest exponent t such that eps = 1/2^t passes perturb's validation and
// the combinatorial structure is identical to the one at 1/2^(t+1).
Rational choose_epsilon(const WedgeResult& w, int g, int exponent_cap = 64);

// wedge over foot, then perturb the image of g with a stabilized epsilon.
PerturbedWedgeResult perturbed_wedge(const Polytope& p, int foot, int g);

}  // namespace pwedge
