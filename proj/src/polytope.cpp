#include "pwedge/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pwedge {

Rational HRepresentation::row_value(int i, const QVector& x) const {
  return facets[i].offset + dot(facets[i].normal, x);
}

bool HRepresentation::contains(const QVector& x) const {
  for (int i = 0; i < facet_count(); ++i)
    if (row_value(i, x) > 0) return false;
  return true;
}

bool HRepresentation::strictly_contains(const QVector& x) const {
  for (int i = 0; i < facet_count(); ++i)
    if (row_value(i, x) >= 0) return false;
  return true;
}

QMatrix HRepresentation::normal_matrix(const std::vector<int>& facet_set) const {
  QMatrix m(facet_set.size(), dim);
  for (std::size_t r = 0; r < facet_set.size(); ++r)
    for (int c = 0; c < dim; ++c) m.at(r, c) = facets[facet_set[r]].normal[c];
  return m;
}

int HRepresentation::find_label(const FacetLabel& label) const {
  int found = -1;
  for (int i = 0; i < facet_count(); ++i) {
    if (facets[i].label == label) {
      if (found >= 0) throw InvalidSelection("facet label is ambiguous: " + label.str());
      found = i;
    }
  }
  return found;
}

int VRepresentation::find(const QVector& v) const {
  for (int j = 0; j < vertex_count(); ++j)
    if (vertices[j] == v) return j;
  return -1;
}

IncidenceMatrix::IncidenceMatrix(int facet_count, int vertex_count)
    : n_(facet_count), m_(vertex_count),
      bits_(static_cast<std::size_t>(facet_count) * vertex_count, 0) {}

std::vector<int> IncidenceMatrix::facets_of_vertex(int vertex) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (at(i, vertex)) out.push_back(i);
  return out;
}

std::vector<int> IncidenceMatrix::vertices_of_facet(int facet) const {
  std::vector<int> out;
  for (int j = 0; j < m_; ++j)
    if (at(facet, j)) out.push_back(j);
  return out;
}

int IncidenceMatrix::column_ones(int vertex) const {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    if (at(i, vertex)) ++count;
  return count;
}

int IncidenceMatrix::row_ones(int facet) const {
  int count = 0;
  for (int j = 0; j < m_; ++j)
    if (at(facet, j)) ++count;
  return count;
}

IncidenceMatrix incidence_matrix(const HRepresentation& h, const VRepresentation& v) {
  if (h.dim != v.dim) throw DimensionMismatch("incidence_matrix: dimension mismatch");
  IncidenceMatrix inc(h.facet_count(), v.vertex_count());
  for (int i = 0; i < h.facet_count(); ++i) {
    for (int j = 0; j < v.vertex_count(); ++j) {
      const Rational value = h.row_value(i, v.vertices[j]);
      if (value > 0)
        throw VertexInfeasible("vertex " + std::to_string(j) + " lies outside facet " +
                               std::to_string(i));
      inc.set(i, j, value == 0);
    }
  }
  return inc;
}

Polytope Polytope::assemble(HRepresentation h, VRepresentation v, int construction_step) {
  IncidenceMatrix inc = incidence_matrix(h, v);
  std::set<QVector> seen;
  for (int j = 0; j < v.vertex_count(); ++j) {
    if (!seen.insert(v.vertices[j]).second)
      throw ConsistencyError("duplicate vertex " + std::to_string(j));
    const std::vector<int> active = inc.facets_of_vertex(j);
    if (static_cast<int>(active.size()) < h.dim)
      throw ConsistencyError("vertex " + std::to_string(j) + " lies on fewer than dim facets");
    if (static_cast<int>(rank(h.normal_matrix(active))) != h.dim)
      throw ConsistencyError("vertex " + std::to_string(j) + " active normals are rank-deficient");
  }
  return Polytope{std::move(h), std::move(v), std::move(inc), construction_step};
}

namespace {

// Visits all k-subsets of [0, n) in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(const_cast<const std::vector<int>&>(pick));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool ray_feasible(const HRepresentation& h, const QVector& ray) {
  for (int i = 0; i < h.facet_count(); ++i)
    if (dot(h.facets[i].normal, ray) > 0) return false;
  return true;
}

}  // namespace

void ensure_bounded(const HRepresentation& h) {
  const int d = h.dim;
  std::vector<int> all(h.facet_count());
  for (int i = 0; i < h.facet_count(); ++i) all[i] = i;
  if (static_cast<int>(rank(h.normal_matrix(all))) < d)
    throw Unbounded("facet normals do not span the ambient space");

  // The recession cone is pointed once the normals span, so it is nontrivial
  // iff it has an extreme ray, and every extreme ray lies in the nullspace of
  // some (d-1)-subset of normals of rank d-1.
  bool unbounded = false;
  for_each_subset(h.facet_count(), d - 1, [&](const std::vector<int>& subset) {
    if (unbounded) return;
    const QMatrix normals = h.normal_matrix(subset);
    const std::vector<QVector> kernel = nullspace(normals);
    if (kernel.size() != 1) return;
    if (ray_feasible(h, kernel.front()) || ray_feasible(h, scale(kernel.front(), Rational(-1))))
      unbounded = true;
  });
  if (unbounded) throw Unbounded("recession cone contains a feasible ray");
}

VRepresentation enumerate_vertices(const HRepresentation& h) {
  ensure_bounded(h);
  const int d = h.dim;
  const int n = h.facet_count();

  VRepresentation result;
  result.dim = d;
  std::set<QVector> seen;
  for_each_subset(n, d, [&](const std::vector<int>& subset) {
    const QMatrix a = h.normal_matrix(subset);
    QVector b(subset.size());
    for (std::size_t r = 0; r < subset.size(); ++r) b[r] = -h.facets[subset[r]].offset;
    const SolveResult sol = solve_affine(a, b);
    if (!sol.unique()) return;
    if (!h.contains(sol.solution)) return;
    if (seen.insert(sol.solution).second) result.vertices.push_back(sol.solution);
  });
  return result;
}

CanonicalizeResult canonicalize_with_shift(const HRepresentation& h,
                                           const std::optional<QVector>& interior_hint) {
  if (h.facet_count() == 0) throw NoInteriorPoint("no facets");
  for (const Facet& f : h.facets)
    if (static_cast<int>(f.normal.size()) != h.dim)
      throw DimensionMismatch("facet normal length differs from dim");
  ensure_bounded(h);

  const int d = h.dim;
  QVector z;
  if (interior_hint) {
    if (static_cast<int>(interior_hint->size()) != d)
      throw DimensionMismatch("interior hint has wrong length");
    if (!h.strictly_contains(*interior_hint))
      throw NoInteriorPoint("interior hint is not strictly interior");
    z = *interior_hint;
  } else if (h.strictly_contains(QVector(d, Rational(0)))) {
    z = QVector(d, Rational(0));
  } else {
    // Preliminary sweep: average dim+1 affinely independent vertices.  The
    // barycenter of the simplex they span is strictly interior.
    const VRepresentation verts = enumerate_vertices(h);
    std::vector<QVector> lifted;
    std::vector<QVector> chosen;
    for (const QVector& v : verts.vertices) {
      QVector lift = v;
      lift.insert(lift.begin(), Rational(1));
      lifted.push_back(lift);
      if (rank(QMatrix::from_rows(lifted, d + 1)) == lifted.size()) {
        chosen.push_back(v);
        if (static_cast<int>(chosen.size()) == d + 1) break;
      } else {
        lifted.pop_back();
      }
    }
    if (static_cast<int>(chosen.size()) < d + 1)
      throw NoInteriorPoint("polytope is not full-dimensional");
    z = QVector(d, Rational(0));
    for (const QVector& v : chosen) z = add(z, v);
    z = scale(z, Rational(1, d + 1));
    if (!h.strictly_contains(z)) throw NoInteriorPoint("failed to certify an interior point");
  }

  HRepresentation out;
  out.dim = d;
  out.canonical = true;
  out.facets.reserve(h.facets.size());
  for (int i = 0; i < h.facet_count(); ++i) {
    const Rational slack = -h.row_value(i, z);  // > 0 by the strict interior check
    Facet f;
    f.offset = -1;
    f.normal = scale(h.facets[i].normal, Rational(1) / slack);
    f.label = h.facets[i].label;
    out.facets.push_back(std::move(f));
  }
  for (int i = 0; i < out.facet_count(); ++i)
    for (int j = i + 1; j < out.facet_count(); ++j)
      if (out.facets[i].normal == out.facets[j].normal)
        throw DuplicateFacet("facets " + std::to_string(i) + " and " + std::to_string(j) +
                             " coincide");
  return CanonicalizeResult{std::move(out), std::move(z)};
}

HRepresentation canonicalize(const HRepresentation& h,
                             const std::optional<QVector>& interior_hint) {
  return canonicalize_with_shift(h, interior_hint).hrep;
}

std::optional<int> face_dimension(const Polytope& p, const std::vector<int>& facet_set) {
  if (facet_set.empty()) throw InvalidSelection("face_dimension: empty facet set");
  bool witnessed = false;
  for (int j = 0; j < p.vertex_count() && !witnessed; ++j) {
    witnessed = std::all_of(facet_set.begin(), facet_set.end(),
                            [&](int i) { return p.incidence.at(i, j); });
  }
  if (!witnessed) return std::nullopt;
  return p.dim() - static_cast<int>(rank(p.hrep.normal_matrix(facet_set)));
}

bool EdgeGraph::adjacent(int u, int v) const {
  return std::binary_search(adjacency[u].begin(), adjacency[u].end(), v);
}

EdgeGraph edge_graph(const Polytope& p) {
  const int m = p.vertex_count();
  EdgeGraph g;
  g.vertex_count = m;
  g.adjacency.resize(m);

  std::vector<std::vector<int>> facet_sets(m);
  for (int j = 0; j < m; ++j) facet_sets[j] = p.incidence.facets_of_vertex(j);

  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      std::vector<int> common;
      std::set_intersection(facet_sets[u].begin(), facet_sets[u].end(), facet_sets[v].begin(),
                            facet_sets[v].end(), std::back_inserter(common));
      // Vertices incident to every common facet must be exactly {u, v}.
      bool exact = true;
      for (int j = 0; j < m && exact; ++j) {
        const bool covers = std::all_of(common.begin(), common.end(),
                                        [&](int i) { return p.incidence.at(i, j); });
        if (covers != (j == u || j == v)) exact = false;
      }
      if (!exact) continue;
      if (p.dim() - static_cast<int>(rank(p.hrep.normal_matrix(common))) != 1) continue;
      g.edges.emplace_back(u, v);
      g.adjacency[u].push_back(v);
      g.adjacency[v].push_back(u);
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Polytope polytope_from_h(const HRepresentation& h, int construction_step) {
  return Polytope::assemble(h, enumerate_vertices(h), construction_step);
}

}  // namespace pwedge
