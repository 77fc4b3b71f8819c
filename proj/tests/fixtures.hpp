#pragma once

#include "pwedge/polytope.hpp"

#include <string>
#include <vector>

namespace pwedge::fixtures {

inline Facet make_facet(Rational offset, QVector normal, int label_index) {
  return Facet{std::move(offset), std::move(normal), FacetLabel::original(label_index)};
}

inline HRepresentation canonical_h(int dim, const std::vector<QVector>& normals) {
  HRepresentation h;
  h.dim = dim;
  h.canonical = true;
  for (std::size_t i = 0; i < normals.size(); ++i)
    h.facets.push_back(make_facet(Rational(-1), normals[i], static_cast<int>(i)));
  return h;
}

// [-1,1]^d with facet order +x, -x, +y, -y, ...
inline HRepresentation cube_h(int dim) {
  std::vector<QVector> normals;
  for (int axis = 0; axis < dim; ++axis) {
    QVector plus(dim, Rational(0)), minus(dim, Rational(0));
    plus[axis] = 1;
    minus[axis] = -1;
    normals.push_back(plus);
    normals.push_back(minus);
  }
  return canonical_h(dim, normals);
}

// Pyramid over the lattice hexagon (2,0),(1,2),(-1,2),(-2,0),(-1,-2),(1,-2)
// at height z=-1, apex (0,0,3).  Facets 0..5 are the slanted ones in hexagon
// edge order, facet 6 is the base; the apex lies on all six slants.
inline HRepresentation hexagonal_pyramid_h() {
  return canonical_h(3, {
                            {Rational(2, 3), Rational(1, 3), Rational(1, 3)},
                            {Rational(0), Rational(2, 3), Rational(1, 3)},
                            {Rational(-2, 3), Rational(1, 3), Rational(1, 3)},
                            {Rational(-2, 3), Rational(-1, 3), Rational(1, 3)},
                            {Rational(0), Rational(-2, 3), Rational(1, 3)},
                            {Rational(2, 3), Rational(-1, 3), Rational(1, 3)},
                            {Rational(0), Rational(0), Rational(-1)},
                        });
}

inline QVector hexagonal_pyramid_apex() {
  return {Rational(0), Rational(0), Rational(3)};
}

// Square base at z=-1 with vertices (+-1,+-1,-1), apex (0,0,1).
inline HRepresentation square_pyramid_h() {
  return canonical_h(3, {
                            {Rational(2), Rational(0), Rational(1)},
                            {Rational(0), Rational(2), Rational(1)},
                            {Rational(-2), Rational(0), Rational(1)},
                            {Rational(0), Rational(-2), Rational(1)},
                            {Rational(0), Rational(0), Rational(-1)},
                        });
}

// Bipyramid over the same lattice hexagon, apexes (0,0,+-4).  Facets come in
// upper/lower pairs per hexagon edge.
inline HRepresentation hexagonal_bipyramid_h() {
  std::vector<QVector> normals;
  const std::vector<QVector> slants = {
      {Rational(1, 2), Rational(1, 4)},  {Rational(0), Rational(1, 2)},
      {Rational(-1, 2), Rational(1, 4)}, {Rational(-1, 2), Rational(-1, 4)},
      {Rational(0), Rational(-1, 2)},    {Rational(1, 2), Rational(-1, 4)},
  };
  for (const QVector& s : slants) {
    normals.push_back({s[0], s[1], Rational(1, 4)});
    normals.push_back({s[0], s[1], Rational(-1, 4)});
  }
  return canonical_h(3, normals);
}

// d-simplex in the non-canonical file form x_i >= 0, sum x_i <= 1.
inline HRepresentation simplex_h(int dim) {
  HRepresentation h;
  h.dim = dim;
  h.canonical = false;
  for (int i = 0; i < dim; ++i) {
    QVector normal(dim, Rational(0));
    normal[i] = -1;  // -x_i <= 0
    h.facets.push_back(make_facet(Rational(0), std::move(normal), i));
  }
  h.facets.push_back(make_facet(Rational(-1), QVector(dim, Rational(1)), dim));
  return h;
}

// Prism Q x [-1,1]: every facet of Q lifted vertically, then the two caps.
inline HRepresentation prism_h(const HRepresentation& q) {
  HRepresentation h;
  h.dim = q.dim + 1;
  h.canonical = true;
  for (std::size_t i = 0; i < q.facets.size(); ++i) {
    QVector normal = q.facets[i].normal;
    normal.push_back(Rational(0));
    h.facets.push_back(make_facet(Rational(-1), std::move(normal), static_cast<int>(i)));
  }
  QVector up(q.dim + 1, Rational(0)), down(q.dim + 1, Rational(0));
  up.back() = 1;
  down.back() = -1;
  h.facets.push_back(make_facet(Rational(-1), up, static_cast<int>(q.facets.size())));
  h.facets.push_back(make_facet(Rational(-1), down, static_cast<int>(q.facets.size()) + 1));
  return h;
}

// Pentagon with a vertex at distance 2^-40 below the top edge y <= 1:
// vertices (-1,-1), (1,-1), (1, 1 - 2^-40), (0,1), (-1,1).  Facet order:
// bottom, right, cut, top, left.
inline HRepresentation near_degenerate_pentagon_h() {
  const Rational delta(Integer(1), Integer(1) << 40);
  return canonical_h(2, {
                            {Rational(0), Rational(-1)},
                            {Rational(1), Rational(0)},
                            {delta, Rational(1)},
                            {Rational(0), Rational(1)},
                            {Rational(-1), Rational(0)},
                        });
}

inline QVector qvec(std::initializer_list<int> values) {
  QVector out;
  for (int v : values) out.push_back(Rational(v));
  return out;
}

}  // namespace pwedge::fixtures
