#include "pwedge/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <string>

namespace pwedge {

bool is_spindle(const Polytope& p, int x, int y) {
  if (x == y) return false;
  for (int i = 0; i < p.facet_count(); ++i)
    if (!p.incidence.at(i, x) && !p.incidence.at(i, y)) return false;
  return true;
}

Spindle make_spindle(Polytope p, int x, int y) {
  if (x < 0 || x >= p.vertex_count() || y < 0 || y >= p.vertex_count())
    throw InvalidSelection("spindle vertex index out of range");
  if (x == y) throw NotASpindle("distinguished vertices must differ");
  if (!is_spindle(p, x, y))
    throw NotASpindle("some facet is incident to neither distinguished vertex");
  Spindle s;
  s.x = x;
  s.y = y;
  s.x_facets = p.incidence.facets_of_vertex(x);
  s.y_facets = p.incidence.facets_of_vertex(y);
  s.polytope = std::move(p);
  return s;
}

bool is_all_but_simple_spindle(const Polytope& p, int x, int y) {
  if (!is_spindle(p, x, y)) return false;
  for (int j = 0; j < p.vertex_count(); ++j) {
    if (j == x || j == y) continue;
    if (p.incidence.column_ones(j) != p.dim()) return false;
  }
  return true;
}

int distance(const Polytope& p, int a, int b) {
  if (a < 0 || a >= p.vertex_count() || b < 0 || b >= p.vertex_count())
    throw InvalidSelection("vertex index out of range");
  const EdgeGraph graph = edge_graph(p);
  std::vector<int> dist(p.vertex_count(), -1);
  std::queue<int> queue;
  dist[a] = 0;
  queue.push(a);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    if (u == b) return dist[u];
    for (int w : graph.adjacency[u]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push(w);
    }
  }
  throw ConsistencyError("vertex " + std::to_string(b) + " unreachable in the edge graph");
}

int spindle_length(const Spindle& s) {
  return distance(s.polytope, s.x, s.y);
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }

void set_bit(Bits& b, int i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

Bits unite_departures(const Bits& departed, const Bits& from, const Bits& to) {
  Bits out = departed;
  for (std::size_t w = 0; w < out.size(); ++w) out[w] |= from[w] & ~to[w];
  return out;
}

void validate_path(const Polytope& p, const Path& path, const EdgeGraph& graph) {
  if (path.vertices.empty()) throw InvalidPath("empty path");
  std::vector<bool> seen(p.vertex_count(), false);
  for (std::size_t t = 0; t < path.vertices.size(); ++t) {
    const int v = path.vertices[t];
    if (v < 0 || v >= p.vertex_count()) throw InvalidPath("path vertex out of range");
    if (seen[v]) throw InvalidPath("path repeats vertex " + std::to_string(v));
    seen[v] = true;
    if (t > 0 && !graph.adjacent(path.vertices[t - 1], v))
      throw InvalidPath("consecutive path vertices are not adjacent");
  }
}

}  // namespace

std::optional<Path> find_nonrevisiting_path(const Polytope& p, int a, int b,
                                            std::size_t state_budget) {
  if (a < 0 || a >= p.vertex_count() || b < 0 || b >= p.vertex_count())
    throw InvalidSelection("vertex index out of range");
  if (a == b) return Path{{a}};

  const EdgeGraph graph = edge_graph(p);
  std::vector<Bits> facet_bits(p.vertex_count(), make_bits(p.facet_count()));
  for (int j = 0; j < p.vertex_count(); ++j)
    for (int i : p.incidence.facets_of_vertex(j)) set_bit(facet_bits[j], i);

  struct State {
    int vertex;
    Bits departed;
    int parent;  // index into the state arena
  };
  std::vector<State> arena;
  std::map<std::pair<int, Bits>, bool> visited;
  std::deque<std::size_t> queue;

  arena.push_back({a, make_bits(p.facet_count()), -1});
  visited[{a, arena[0].departed}] = true;
  queue.push_back(0);

  while (!queue.empty()) {
    const std::size_t index = queue.front();
    queue.pop_front();
    const State state = arena[index];  // copy: the arena may reallocate below
    if (state.vertex == b) {
      Path path;
      for (int at = static_cast<int>(index); at >= 0; at = arena[at].parent)
        path.vertices.push_back(arena[at].vertex);
      std::reverse(path.vertices.begin(), path.vertices.end());
      return path;
    }
    for (int next : graph.adjacency[state.vertex]) {
      if (intersects(facet_bits[next], state.departed)) continue;  // revisit
      Bits departed = unite_departures(state.departed, facet_bits[state.vertex],
                                       facet_bits[next]);
      auto [it, inserted] = visited.try_emplace({next, departed}, true);
      if (!inserted) continue;
      if (visited.size() > state_budget)
        throw SearchBudgetExceeded(visited.size(), "nonrevisiting search exceeded its state budget");
      arena.push_back({next, std::move(departed), static_cast<int>(index)});
      queue.push_back(arena.size() - 1);
    }
  }
  return std::nullopt;
}

std::vector<RevisitCertificate> revisits_of(const Polytope& p, const Path& path) {
  validate_path(p, path, edge_graph(p));
  std::vector<RevisitCertificate> certificates;
  for (int f = 0; f < p.facet_count(); ++f) {
    int last_on = -1;
    bool gap = false;
    for (std::size_t t = 0; t < path.vertices.size(); ++t) {
      if (p.incidence.at(f, path.vertices[t])) {
        if (gap && last_on >= 0)
          certificates.push_back({f, last_on, static_cast<int>(t)});
        last_on = static_cast<int>(t);
        gap = false;
      } else if (last_on >= 0) {
        gap = true;
      }
    }
  }
  return certificates;
}

IncidenceTable incidence_table(const Spindle& s, const Path& path) {
  const Polytope& p = s.polytope;
  validate_path(p, path, edge_graph(p));
  if (path.vertices.front() != s.x || path.vertices.back() != s.y)
    throw InvalidPath("path must run from x to y");

  IncidenceTable table;
  table.x_group = s.x_facets;
  for (int f : s.y_facets)
    if (!std::binary_search(s.x_facets.begin(), s.x_facets.end(), f))
      table.y_group.push_back(f);

  std::vector<int> column_order = table.x_group;
  column_order.insert(column_order.end(), table.y_group.begin(), table.y_group.end());

  for (int v : path.vertices) {
    std::vector<std::uint8_t> row;
    row.reserve(column_order.size());
    for (int f : column_order) row.push_back(p.incidence.at(f, v) ? 1 : 0);
    table.cells.push_back(std::move(row));
  }

  for (std::size_t t = 1; t < path.vertices.size(); ++t) {
    std::vector<int> departures, arrivals;
    for (int f : s.x_facets)
      if (p.incidence.at(f, path.vertices[t - 1]) && !p.incidence.at(f, path.vertices[t]))
        departures.push_back(f);
    for (int f : s.y_facets)
      if (!p.incidence.at(f, path.vertices[t - 1]) && p.incidence.at(f, path.vertices[t]))
        arrivals.push_back(f);
    table.departures_from_x.push_back(std::move(departures));
    table.arrivals_in_y.push_back(std::move(arrivals));
  }

  // Counting bound from the departure argument: a simple interior vertex at
  // position j can lie on at most d - j facets of X.
  for (std::size_t j = 1; j + 1 < path.vertices.size(); ++j) {
    IncidenceTable::BoundCheck check;
    check.position = static_cast<int>(j);
    check.simple = p.incidence.column_ones(path.vertices[j]) == p.dim();
    check.x_incident = 0;
    for (int f : s.x_facets)
      if (p.incidence.at(f, path.vertices[j])) ++check.x_incident;
    check.bound = p.dim() - static_cast<int>(j);
    check.holds = !check.simple || check.x_incident <= check.bound;
    table.bounds.push_back(check);
  }
  return table;
}

}  // namespace pwedge
