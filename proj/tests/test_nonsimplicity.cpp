#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pwedge/nonsimplicity.hpp"
#include "pwedge/wedge.hpp"

#include "fixtures.hpp"

#include <algorithm>

using namespace pwedge;
using namespace pwedge::fixtures;

namespace {

// Independent re-verification of the three defining conditions.
void verify_conditions(const Polytope& p, const Nonsimplicity& ns) {
  const int r = static_cast<int>(rank(p.hrep.normal_matrix(ns.facet_set)));
  const int members = static_cast<int>(ns.facet_set.size());
  CHECK(ns.face_dim == p.dim() - r);
  CHECK(members > p.dim() - ns.face_dim);  // nonsimple intersection
  CHECK(ns.excess == members - (p.dim() - ns.face_dim));

  // Maximality: every facet outside the set must miss some witness vertex.
  for (int f = 0; f < p.facet_count(); ++f) {
    if (std::binary_search(ns.facet_set.begin(), ns.facet_set.end(), f)) continue;
    bool contains_all = true;
    for (int v : ns.witness_face)
      if (!p.incidence.at(f, v)) contains_all = false;
    CHECK(!contains_all);
  }

  // Affine support: dropping any one facet keeps the intersection dimension.
  for (int skip = 0; skip < members; ++skip) {
    std::vector<int> rest = ns.facet_set;
    rest.erase(rest.begin() + skip);
    CHECK(static_cast<int>(rank(p.hrep.normal_matrix(rest))) == r);
  }
}

}  // namespace

TEST_CASE("simple vertex predicate") {
  const Polytope cube = polytope_from_h(cube_h(3));
  for (int j = 0; j < cube.vertex_count(); ++j) CHECK(is_simple_vertex(cube, j));

  const Polytope pyramid = polytope_from_h(hexagonal_pyramid_h());
  const int apex = pyramid.vrep.find(hexagonal_pyramid_apex());
  CHECK(!is_simple_vertex(pyramid, apex));

  const Polytope square_pyr = polytope_from_h(square_pyramid_h());
  const int base_vertex = square_pyr.vrep.find({Rational(1), Rational(1), Rational(-1)});
  CHECK(is_simple_vertex(square_pyr, base_vertex));
}

TEST_CASE("the 3-cube has no nonsimplicities") {
  CHECK(find_nonsimplicities(polytope_from_h(cube_h(3))).empty());
}

TEST_CASE("hexagonal pyramid: one nonsimplicity of excess 3 at the apex") {
  const Polytope pyramid = polytope_from_h(hexagonal_pyramid_h());
  const auto found = find_nonsimplicities(pyramid);
  REQUIRE(found.size() == 1);
  const Nonsimplicity& ns = found.front();
  CHECK(ns.facet_set == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(ns.face_dim == 0);
  CHECK(ns.excess == 3);  // 6 - (3 - 0)
  CHECK(excess_of(ns) == 3);
  const int apex = pyramid.vrep.find(hexagonal_pyramid_apex());
  CHECK(ns.witness_face == std::vector<int>{apex});
  verify_conditions(pyramid, ns);
}

TEST_CASE("prism over the hexagonal pyramid: only the vertical edge is nonsimple") {
  const Polytope prism = polytope_from_h(prism_h(hexagonal_pyramid_h()));
  REQUIRE(prism.facet_count() == 9);
  REQUIRE(prism.vertex_count() == 14);

  const auto found = find_nonsimplicities(prism);
  REQUIRE(found.size() == 1);
  const Nonsimplicity& ns = found.front();
  CHECK(ns.face_dim == 1);
  CHECK(ns.ambient_dim == 4);
  CHECK(ns.facet_set == std::vector<int>{0, 1, 2, 3, 4, 5});  // the slant images
  CHECK(ns.excess == 3);  // 6 - (4 - 1)
  CHECK(ns.witness_face.size() == 2);
  verify_conditions(prism, ns);

  // The apex images are nonsimple vertices, but their full facet sets fail
  // affine support: dropping the cap facet raises the intersection dimension.
  QVector top_apex = hexagonal_pyramid_apex();
  top_apex.push_back(Rational(1));
  const int v_top = prism.vrep.find(top_apex);
  REQUIRE(v_top >= 0);
  CHECK(!is_simple_vertex(prism, v_top));
  const std::vector<int> at_vertex = prism.incidence.facets_of_vertex(v_top);
  const int full_rank = static_cast<int>(rank(prism.hrep.normal_matrix(at_vertex)));
  bool affine_support = true;
  for (std::size_t skip = 0; skip < at_vertex.size(); ++skip) {
    std::vector<int> rest = at_vertex;
    rest.erase(rest.begin() + skip);
    if (static_cast<int>(rank(prism.hrep.normal_matrix(rest))) != full_rank)
      affine_support = false;
  }
  CHECK(!affine_support);
}

TEST_CASE("no nonsimplicities iff every vertex is simple") {
  for (const HRepresentation& h : {cube_h(3), square_pyramid_h(), hexagonal_pyramid_h(),
                                   hexagonal_bipyramid_h(), prism_h(square_pyramid_h())}) {
    const Polytope p = polytope_from_h(h);
    bool all_simple = true;
    for (int j = 0; j < p.vertex_count(); ++j)
      if (!is_simple_vertex(p, j)) all_simple = false;
    CHECK(find_nonsimplicities(p).empty() == all_simple);
    for (const Nonsimplicity& ns : find_nonsimplicities(p)) verify_conditions(p, ns);
  }
}

TEST_CASE("the wedge preserves dimension-k nonsimplicities off the foot with the same excess") {
  const Polytope pyramid = polytope_from_h(hexagonal_pyramid_h());
  const auto before = find_nonsimplicities(pyramid);
  REQUIRE(before.size() == 1);

  const WedgeResult w = wedge(pyramid, 6);  // apex is off the foot
  const auto after = find_nonsimplicities(w.polytope);
  REQUIRE(after.size() == 1);
  CHECK(after.front().face_dim == before.front().face_dim + 1);
  CHECK(after.front().excess == before.front().excess);
  CHECK(after.front().facet_set.size() == before.front().facet_set.size());
  verify_conditions(w.polytope, after.front());

  // Iterating once more lifts the edge to a 2-face, still with excess 3.
  const WedgeResult w2 = wedge(w.polytope, w.top_index);
  const auto third = find_nonsimplicities(w2.polytope);
  REQUIRE(third.size() == 1);
  CHECK(third.front().face_dim == 2);
  CHECK(third.front().excess == 3);
}

TEST_CASE("simplicity report aggregates") {
  const Polytope cube = polytope_from_h(cube_h(3));
  const SimplicityReport cube_report = simplicity_report(cube);
  CHECK(std::all_of(cube_report.vertex_simple.begin(), cube_report.vertex_simple.end(),
                    [](bool simple) { return simple; }));
  CHECK(cube_report.nonsimplicities.empty());
  CHECK(cube_report.max_excess == 0);

  const Polytope pyramid = polytope_from_h(hexagonal_pyramid_h());
  const SimplicityReport report = simplicity_report(pyramid);
  CHECK(std::count(report.vertex_simple.begin(), report.vertex_simple.end(), false) == 1);
  CHECK(report.max_excess == 3);

  // Wedge of the pyramid over the base: the nonsimple pair and the edge
  // nonsimplicity between them.
  const WedgeResult w = wedge(pyramid, 6);
  const SimplicityReport wedge_report = simplicity_report(w.polytope);
  CHECK(std::count(wedge_report.vertex_simple.begin(), wedge_report.vertex_simple.end(), false) ==
        2);
  REQUIRE(wedge_report.nonsimplicities.size() == 1);
  CHECK(wedge_report.nonsimplicities.front().face_dim == 1);
  CHECK(wedge_report.max_excess == 3);
}
