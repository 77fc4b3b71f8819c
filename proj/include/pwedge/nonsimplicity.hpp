#pragma once

#include "pwedge/polytope.hpp"

#include <vector>

namespace pwedge {

// A maximal facet collection whose common hyperplane intersection supports a
// k-face with more members than a simple intersection would need, and where
// no single member can be dropped without raising the intersection
// dimension (affine support).
struct Nonsimplicity {
  std::vector<int> facet_set;    // sorted
  int face_dim = 0;              // k
  int ambient_dim = 0;           // d
  int excess = 0;                // |facet_set| - (d - k), always >= 1
  std::vector<int> witness_face; // vertices incident to every facet in the set
};

// A simple vertex is incident to exactly dim facets.
bool is_simple_vertex(const Polytope& p, int vertex);

// Candidate supporting spaces come from incidence patterns: the facet sets
// of whole faces, generated as the intersection closure of the vertex
// columns.  Maximality then holds by construction, and for each candidate
// the nonsimple-intersection and affine-support conditions are tested by
// exact rank computations.  Results are deduplicated by facet set.
std::vector<Nonsimplicity> find_nonsimplicities(const Polytope& p);

int excess_of(const Nonsimplicity& ns);

struct SimplicityReport {
  std::vector<bool> vertex_simple;
  std::vector<Nonsimplicity> nonsimplicities;
  int max_excess = 0;
};

SimplicityReport simplicity_report(const Polytope& p);

}  // namespace pwedge
