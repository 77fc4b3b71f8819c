#include "pwedge/wedge.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pwedge {

WedgeResult wedge(const Polytope& p, int foot) {
  if (!p.hrep.canonical) throw InputNotCanonical("wedge requires a canonical H-representation");
  if (foot < 0 || foot >= p.facet_count())
    throw FootNotFound("foot index " + std::to_string(foot) + " out of range");

  const int d = p.dim();
  const int step = p.construction_step + 1;
  const Facet& foot_facet = p.hrep.facets[foot];

  WedgeResult result;
  result.foot = foot;
  result.top_index = 0;
  result.base_index = 1;

  HRepresentation h;
  h.dim = d + 1;
  h.canonical = true;
  auto lifted = [&](const QVector& normal, const Rational& last) {
    QVector out = normal;
    out.push_back(last);
    return out;
  };
  h.facets.push_back({Rational(-1), lifted(foot_facet.normal, 1),
                      FacetLabel::top(foot_facet.label, step)});
  h.facets.push_back({Rational(-1), lifted(foot_facet.normal, -1),
                      FacetLabel::base(foot_facet.label, step)});
  result.facet_image.assign(p.facet_count(), -1);
  result.facet_image[foot] = result.top_index;
  for (int i = 0; i < p.facet_count(); ++i) {
    if (i == foot) continue;
    result.facet_image[i] = h.facet_count();
    h.facets.push_back({Rational(-1), lifted(p.hrep.facets[i].normal, 0), p.hrep.facets[i].label});
  }

  // Vertex blocks per the canonical embedding: foot vertices keep a single
  // image with last coordinate 0; every other vertex gets a top image with
  // last coordinate -slack and a base image with +slack, where slack is the
  // (negative) value of the foot row at the vertex.
  VRepresentation v;
  v.dim = d + 1;
  for (int j = 0; j < p.vertex_count(); ++j) {
    if (p.hrep.row_value(foot, p.vrep.vertices[j]) != 0) continue;
    result.foot_vertex_map[j] = v.vertex_count();
    v.vertices.push_back(lifted(p.vrep.vertices[j], 0));
  }
  for (int j = 0; j < p.vertex_count(); ++j) {
    const Rational slack = p.hrep.row_value(foot, p.vrep.vertices[j]);
    if (slack == 0) continue;
    result.top_vertex_map[j] = v.vertex_count();
    v.vertices.push_back(lifted(p.vrep.vertices[j], -slack));
  }
  for (int j = 0; j < p.vertex_count(); ++j) {
    const Rational slack = p.hrep.row_value(foot, p.vrep.vertices[j]);
    if (slack == 0) continue;
    result.base_vertex_map[j] = v.vertex_count();
    v.vertices.push_back(lifted(p.vrep.vertices[j], slack));
  }

  result.polytope = Polytope::assemble(std::move(h), std::move(v), step);
  return result;
}

namespace {

bool is_vertical(const WedgeResult& w, int g) {
  if (g < 0 || g >= w.polytope.facet_count())
    throw InvalidSelection("facet index " + std::to_string(g) + " out of range");
  return g != w.top_index && g != w.base_index &&
         w.polytope.hrep.facets[g].normal.back() == 0;
}

}  // namespace

VertexClass classify_vertices(const WedgeResult& w, int g) {
  if (!is_vertical(w, g))
    throw GIsTopOrBase("facet " + std::to_string(g) + " is not a vertical facet");
  const Polytope& p = w.polytope;
  const int d = p.dim();

  VertexClass cls;
  cls.facet = g;
  for (int j : p.incidence.vertices_of_facet(g)) {
    std::vector<int> others = p.incidence.facets_of_vertex(j);
    others.erase(std::remove(others.begin(), others.end(), g), others.end());
    // The facets at a vertex have full rank; dropping g leaves rank d-1
    // (g terminated a single edge) or rank d (it terminated several).
    const bool single = static_cast<int>(rank(p.hrep.normal_matrix(others))) == d - 1;
    const Rational& last = p.vrep.vertices[j].back();
    VertexClass::Member member{j, single};
    if (last == 0)
      cls.foot.push_back(member);
    else if (last > 0)
      cls.top_only.push_back(member);
    else
      cls.base_only.push_back(member);
  }
  return cls;
}

PerturbedWedgeResult perturb(const WedgeResult& w, int g, const Rational& eps) {
  if (eps <= 0) throw InvalidEpsilon("epsilon must be positive");
  if (!is_vertical(w, g))
    throw GIsTopOrBase("facet " + std::to_string(g) + " is not a vertical facet");

  const Polytope& parent = w.polytope;
  const int step = parent.construction_step + 1;

  HRepresentation h = parent.hrep;
  h.facets[g].normal.back() = eps;
  h.facets[g].label = FacetLabel::perturbed(parent.hrep.facets[g].label, step);

  const VRepresentation verts = enumerate_vertices(h);

  PerturbedWedgeResult result;
  result.epsilon = eps;
  result.g_tilde_index = g;
  result.classification = classify_vertices(w, g);

  enum class Fate { Keep, Remove, Displace };
  std::vector<Fate> fate(parent.vertex_count(), Fate::Keep);
  for (const auto& member : result.classification.top_only)
    fate[member.vertex] = member.single_edge ? Fate::Displace : Fate::Remove;
  for (const auto& member : result.classification.base_only)
    if (member.single_edge) fate[member.vertex] = Fate::Displace;

  std::set<int> claimed;
  for (int j = 0; j < parent.vertex_count(); ++j) {
    switch (fate[j]) {
      case Fate::Keep: {
        const int idx = verts.find(parent.vrep.vertices[j]);
        if (idx < 0 || claimed.count(idx))
          throw EpsilonTooLarge("vertex " + std::to_string(j) +
                                " should survive the perturbation unchanged");
        result.survivors[j] = idx;
        claimed.insert(idx);
        break;
      }
      case Fate::Remove: {
        if (verts.find(parent.vrep.vertices[j]) >= 0)
          throw EpsilonTooLarge("top multi-edge vertex " + std::to_string(j) +
                                " should be truncated away");
        result.removed.push_back(j);
        break;
      }
      case Fate::Displace: {
        // The natural image slides along the unique edge terminated by g:
        // intersect that edge's supporting line with the perturbed facet.
        std::vector<int> active = parent.incidence.facets_of_vertex(j);
        active.erase(std::remove(active.begin(), active.end(), g), active.end());
        active.push_back(g);  // row g now carries the perturbed normal
        QMatrix a(active.size(), h.dim);
        QVector b(active.size());
        for (std::size_t r = 0; r < active.size(); ++r) {
          for (int c = 0; c < h.dim; ++c) a.at(r, c) = h.facets[active[r]].normal[c];
          b[r] = -h.facets[active[r]].offset;
        }
        const SolveResult sol = solve_affine(a, b);
        if (!sol.unique())
          throw EpsilonTooLarge("single-edge vertex " + std::to_string(j) +
                                " has no unique displaced image");
        const int idx = verts.find(sol.solution);
        if (idx < 0 || claimed.count(idx))
          throw EpsilonTooLarge("displaced image of vertex " + std::to_string(j) +
                                " is not a vertex of the perturbed wedge");
        result.survivors[j] = idx;
        claimed.insert(idx);
        break;
      }
    }
  }

  for (int idx = 0; idx < verts.vertex_count(); ++idx) {
    if (claimed.count(idx)) continue;
    if (h.row_value(g, verts.vertices[idx]) != 0)
      throw EpsilonTooLarge("created vertex " + std::to_string(idx) +
                            " does not lie on the perturbed facet");
    result.created.push_back(idx);
  }

  result.polytope = Polytope::assemble(std::move(h), verts, step);
  return result;
}

namespace {

// Combinatorial fingerprint: the set of facet sets of all vertices.  Facet
// indices are position-stable across epsilon trials, and vertices of a
// polytope are uniquely determined by their facet sets.
std::set<std::vector<int>> structure_of(const Polytope& p) {
  std::set<std::vector<int>> sig;
  for (int j = 0; j < p.vertex_count(); ++j) sig.insert(p.incidence.facets_of_vertex(j));
  return sig;
}

}  // namespace

Rational choose_epsilon(const WedgeResult& w, int g, int exponent_cap) {
  std::optional<std::set<std::vector<int>>> previous;
  Rational previous_eps;
  for (int t = 1; t <= exponent_cap; ++t) {
    const Rational eps(Integer(1), Integer(1) << t);
    std::optional<std::set<std::vector<int>>> current;
    try {
      current = structure_of(perturb(w, g, eps).polytope);
    } catch (const EpsilonTooLarge&) {
      previous.reset();
      continue;
    }
    if (previous && *previous == *current) return previous_eps;
    previous = std::move(current);
    previous_eps = eps;
  }
  throw NoStableEpsilon("no stable epsilon up to exponent " + std::to_string(exponent_cap));
}

PerturbedWedgeResult perturbed_wedge(const Polytope& p, int foot, int g) {
  if (g < 0 || g >= p.facet_count())
    throw InvalidSelection("facet index " + std::to_string(g) + " out of range");
  if (foot == g) throw InvalidSelection("foot and perturbed facet must differ");
  const WedgeResult w = wedge(p, foot);
  const int g_image = w.facet_image[g];
  const Rational eps = choose_epsilon(w, g_image);
  return perturb(w, g_image, eps);
}

}  // namespace pwedge
