#include "pwedge/nonsimplicity.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pwedge {

bool is_simple_vertex(const Polytope& p, int vertex) {
  if (vertex < 0 || vertex >= p.vertex_count())
    throw InvalidSelection("vertex index " + std::to_string(vertex) + " out of range");
  return p.incidence.column_ones(vertex) == p.dim();
}

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Nonsimplicity> find_nonsimplicities(const Polytope& p) {
  const int d = p.dim();

  std::vector<std::vector<int>> columns(p.vertex_count());
  for (int j = 0; j < p.vertex_count(); ++j) columns[j] = p.incidence.facets_of_vertex(j);

  // Intersection closure of the vertex columns.  Each nonempty closed set is
  // the collection of facets containing some face's supporting space.
  std::set<std::vector<int>> closed(columns.begin(), columns.end());
  std::deque<std::vector<int>> queue(closed.begin(), closed.end());
  while (!queue.empty()) {
    const std::vector<int> current = std::move(queue.front());
    queue.pop_front();
    for (const std::vector<int>& column : columns) {
      std::vector<int> meet = intersect(current, column);
      if (meet.empty()) continue;
      if (closed.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  std::vector<Nonsimplicity> result;
  for (const std::vector<int>& facet_set : closed) {
    const int members = static_cast<int>(facet_set.size());
    const int r = static_cast<int>(rank(p.hrep.normal_matrix(facet_set)));
    if (members <= r) continue;  // simple intersection: exactly d-k facets

    // Affine support: dropping any one facet must keep the rank, otherwise
    // that facet does not contribute to the intersection's dimension.
    bool supported = true;
    for (int skip = 0; skip < members && supported; ++skip) {
      std::vector<int> rest = facet_set;
      rest.erase(rest.begin() + skip);
      if (static_cast<int>(rank(p.hrep.normal_matrix(rest))) != r) supported = false;
    }
    if (!supported) continue;

    Nonsimplicity ns;
    ns.facet_set = facet_set;
    ns.face_dim = d - r;
    ns.ambient_dim = d;
    ns.excess = members - r;
    for (int j = 0; j < p.vertex_count(); ++j) {
      if (std::includes(columns[j].begin(), columns[j].end(), facet_set.begin(),
                        facet_set.end()))
        ns.witness_face.push_back(j);
    }
    result.push_back(std::move(ns));
  }
  return result;
}

int excess_of(const Nonsimplicity& ns) {
  return ns.excess;
}

SimplicityReport simplicity_report(const Polytope& p) {
  SimplicityReport report;
  report.vertex_simple.resize(p.vertex_count());
  for (int j = 0; j < p.vertex_count(); ++j) report.vertex_simple[j] = is_simple_vertex(p, j);
  report.nonsimplicities = find_nonsimplicities(p);
  report.max_excess = 0;
  for (const Nonsimplicity& ns : report.nonsimplicities)
    report.max_excess = std::max(report.max_excess, ns.excess);
  return report;
}

}  // namespace pwedge
