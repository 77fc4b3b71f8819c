#pragma once

#include "pwedge/polytope.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pwedge {

class NotASpindle : public Error { public: using Error::Error; };
class InvalidPath : public Error { public: using Error::Error; };

class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(std::size_t explored, const std::string& what)
      : Error(what), explored_states(explored) {}
  std::size_t explored_states;
};

// Polytope with two distinguished vertices covering all facets.
struct Spindle {
  Polytope polytope;
  int x = -1;
  int y = -1;
  std::vector<int> x_facets;  // facets incident to x
  std::vector<int> y_facets;  // facets incident to y
};

// Validates the facet cover (every facet incident to x or y) and x != y.
Spindle make_spindle(Polytope p, int x, int y);
bool is_spindle(const Polytope& p, int x, int y);

// Spindle in which every vertex other than x and y is simple.
bool is_all_but_simple_spindle(const Polytope& p, int x, int y);

// Shortest-path length in the edge graph (breadth-first).
int distance(const Polytope& p, int a, int b);
int spindle_length(const Spindle& s);

struct Path {
  std::vector<int> vertices;  // consecutive entries adjacent, no repeats
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// A facet left at position last_on and incident again at position return_at,
// with a non-incident position strictly between.
struct RevisitCertificate {
  int facet = -1;
  int last_on = -1;
  int return_at = -1;
};

// Searches for a path on which no facet is ever revisited: a facet incident
// to vertex t-1 but not to vertex t is departed at step t, and arriving at
// any departed facet is a revisit.  The search is exhaustive over states
// (current vertex, set of departed facets), memoized, and capped by
// state_budget (throws SearchBudgetExceeded with the explored-state count).
std::optional<Path> find_nonrevisiting_path(const Polytope& p, int a, int b,
                                            std::size_t state_budget = 10'000'000);

// Scans incidence along the path and emits one certificate per
// (leave, return) pair of every facet.
std::vector<RevisitCertificate> revisits_of(const Polytope& p, const Path& path);

// Incidence table for a path across a spindle, in the shape used for the
// counting argument: columns grouped by the facets at x and the remaining
// facets at y, plus per-step departures/arrivals and, for each simple
// interior vertex u_j, the check that it lies on at most d - j facets of X.
struct IncidenceTable {
  std::vector<int> x_group;  // facets incident to x, sorted
  std::vector<int> y_group;  // facets incident to y but not to x, sorted
  std::vector<std::vector<std::uint8_t>> cells;  // path position x (x_group|y_group)
  std::vector<std::vector<int>> departures_from_x;  // index t-1 = move into position t
  std::vector<std::vector<int>> arrivals_in_y;
  struct BoundCheck {
    int position = 0;
    bool simple = false;
    int x_incident = 0;
    int bound = 0;
    bool holds = false;
  };
  std::vector<BoundCheck> bounds;  // interior positions
};

IncidenceTable incidence_table(const Spindle& s, const Path& path);

}  // namespace pwedge
