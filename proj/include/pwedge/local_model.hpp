#pragma once

#include "pwedge/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pwedge {

class InvalidCounts : public Error { public: using Error::Error; };
class ModelDegenerate : public Error { public: using Error::Error; };
class RowAlreadyPerturbed : public Error { public: using Error::Error; };
class RowIsWedgeChild : public Error { public: using Error::Error; };
class RowNotPerturbed : public Error { public: using Error::Error; };
class RowNotWedgeChild : public Error { public: using Error::Error; };
class ExcessExhausted : public Error { public: using Error::Error; };

// Facet-level view of a nonsimplicity tracked by the local model.
// excess = n_facets - (dim_p - dim_s); vertex_excess = (rows incident to the
// tracked vertex, i.e. all of them) - dim_p, meaningful when nonnegative.
struct NonsimplicityStats {
  int dim_p = 0;
  int dim_s = 0;
  int n_facets = 0;
  int excess = 0;
  bool degenerate = false;
  int vertex_excess = 0;

  bool operator==(const NonsimplicityStats&) const = default;
};

// Symbolic tracker for the facet rows incident to a nonsimple vertex under
// iterated wedges and perturbations.  Each step appends one coordinate:
// a perturbation writes a positive symbol eps_k into the chosen row and adds
// a direction column with -1 there; a wedge duplicates the chosen row with
// entries -1/+1 and adds a direction column with +1.  Base normals are never
// materialized; only the sign pattern of the extra coordinates matters.
class LocalModel {
 public:
  struct Entry {
    enum class Kind { Zero, Plus, Minus, Eps };
    Kind kind = Kind::Zero;
    int eps_index = 0;  // iteration number of the introducing perturbation
  };
  struct Row {
    int base = 0;  // 1-based original hyperplane tag
    std::vector<Entry> extras;

    bool vertical() const;
    bool perturbed() const;   // carries an eps symbol
    bool wedge_child() const; // carries a +-1 entry
  };
  struct Direction {
    int coordinate = 0;  // extra-coordinate index
    int sign = 0;        // +-1
  };

  // m rows over a d-dimensional base, no extra coordinates yet; requires
  // m > d (otherwise there is no nonsimplicity to track).
  static LocalModel create(int d, int m);

  int base_dim() const { return d_; }
  int base_facet_count() const { return m_; }
  int iteration() const { return iteration_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<Direction>& directions() const { return directions_; }

  LocalModel step_perturb(int row) const;
  LocalModel step_wedge(int row) const;
  LocalModel step_wedge_over_perturbed(int row) const;
  LocalModel step_perturb_again(int row) const;
  LocalModel step_perturb_wedge_child(int row) const;

  // Reads the right-hand-side columns: a direction contributes iff its
  // products against all rows are nonpositive (eps symbols count positive),
  // and is pinched when signs of both kinds appear.  n_facets counts the
  // rows vanishing on every contributing direction.  Degeneracy is rank
  // deficiency of the instantiated rows against dim P.  An explicit eps
  // assignment may be supplied; verdicts are invariant in it.
  NonsimplicityStats evaluate(
      const std::optional<std::map<int, Rational>>& eps_values = std::nullopt) const;

  // Row lookup helpers for schedules phrased in original hyperplane tags.
  int find_vertical_row(int base) const;
  int find_perturbed_row(int base) const;
  int find_wedge_child_row(int base) const;

 private:
  LocalModel() = default;
  void check_row(int row) const;
  void require_not_degenerate() const;
  LocalModel with_new_coordinate() const;

  int d_ = 0;
  int m_ = 0;
  int iteration_ = 0;
  std::vector<Row> rows_;
  std::vector<Direction> directions_;
};

struct ScheduleStep {
  enum class Kind { Perturb, Wedge, WedgeOverPerturbed, PerturbAgain, PerturbWedgeChild };
  Kind kind = Kind::Perturb;
  int base = 0;  // 1-based original hyperplane tag
};

// Stats before any step, then after each step in order.
std::vector<NonsimplicityStats> run_schedule(int d, int m,
                                             const std::vector<ScheduleStep>& schedule);

// Alternating schedule on the original hyperplanes in order: perturb h1,
// wedge h2, perturb h3, ... up to iteration 2(m-d)-1, where the excess
// reaches 0.  Requires m <= 2d+1 so the schedule does not run out of rows.
std::vector<ScheduleStep> standard_schedule(int d, int m);

// "standard", "eps-omega-at-K", "eps-eps-at-K", "wedge-eps-at-K", or an
// explicit comma-separated list of steps: p<i> perturb, w<i> wedge,
// pw<i> wedge over the perturbed row, pp<i> perturb again, pc<i> perturb a
// wedge child (all <i> are original hyperplane tags).
std::vector<ScheduleStep> parse_schedule(const std::string& text, int d, int m);

}  // namespace pwedge
