#include "pwedge/local_model.hpp"

#include <algorithm>
#include <sstream>

namespace pwedge {

bool LocalModel::Row::vertical() const {
  return std::all_of(extras.begin(), extras.end(),
                     [](const Entry& e) { return e.kind == Entry::Kind::Zero; });
}

bool LocalModel::Row::perturbed() const {
  return std::any_of(extras.begin(), extras.end(),
                     [](const Entry& e) { return e.kind == Entry::Kind::Eps; });
}

bool LocalModel::Row::wedge_child() const {
  return std::any_of(extras.begin(), extras.end(), [](const Entry& e) {
    return e.kind == Entry::Kind::Plus || e.kind == Entry::Kind::Minus;
  });
}

LocalModel LocalModel::create(int d, int m) {
  if (d < 1) throw InvalidCounts("dimension must be positive");
  if (m <= d) throw InvalidCounts("need more than d facets at a nonsimple vertex");
  LocalModel model;
  model.d_ = d;
  model.m_ = m;
  for (int i = 1; i <= m; ++i) model.rows_.push_back(Row{i, {}});
  return model;
}

void LocalModel::check_row(int row) const {
  if (row < 0 || row >= static_cast<int>(rows_.size()))
    throw InvalidSelection("model row " + std::to_string(row) + " out of range");
}

void LocalModel::require_not_degenerate() const {
  if (evaluate().degenerate) throw ModelDegenerate("the tracked facets no longer pin a vertex");
}

LocalModel LocalModel::with_new_coordinate() const {
  LocalModel next = *this;
  ++next.iteration_;
  for (Row& row : next.rows_) row.extras.push_back({});
  return next;
}

LocalModel LocalModel::step_perturb(int row) const {
  check_row(row);
  require_not_degenerate();
  if (rows_[row].perturbed())
    throw RowAlreadyPerturbed("row already carries an eps symbol; use step_perturb_again");
  if (rows_[row].wedge_child())
    throw RowIsWedgeChild("row is a wedge child; use step_perturb_wedge_child");
  if (evaluate().excess == 0) throw ExcessExhausted("excess is already 0; nothing to split");

  LocalModel next = with_new_coordinate();
  next.rows_[row].extras.back() = {Entry::Kind::Eps, next.iteration_};
  next.directions_.push_back({next.iteration_ - 1, -1});
  return next;
}

LocalModel LocalModel::step_wedge(int row) const {
  check_row(row);
  require_not_degenerate();
  if (rows_[row].perturbed())
    throw RowAlreadyPerturbed("row carries an eps symbol; use step_wedge_over_perturbed");
  if (rows_[row].wedge_child()) throw RowIsWedgeChild("row is already a wedge child");

  LocalModel next = with_new_coordinate();
  next.rows_[row].extras.back() = {Entry::Kind::Minus, 0};
  Row sibling = next.rows_[row];
  sibling.extras.back() = {Entry::Kind::Plus, 0};
  next.rows_.insert(next.rows_.begin() + row + 1, std::move(sibling));
  next.directions_.push_back({next.iteration_ - 1, +1});
  return next;
}

LocalModel LocalModel::step_wedge_over_perturbed(int row) const {
  check_row(row);
  require_not_degenerate();
  if (!rows_[row].perturbed())
    throw RowNotPerturbed("row carries no eps symbol; use step_wedge");

  LocalModel next = with_new_coordinate();
  next.rows_[row].extras.back() = {Entry::Kind::Minus, 0};
  Row sibling = next.rows_[row];  // keeps the eps entries
  sibling.extras.back() = {Entry::Kind::Plus, 0};
  next.rows_.insert(next.rows_.begin() + row + 1, std::move(sibling));
  next.directions_.push_back({next.iteration_ - 1, +1});
  return next;
}

LocalModel LocalModel::step_perturb_again(int row) const {
  check_row(row);
  require_not_degenerate();
  if (!rows_[row].perturbed())
    throw RowNotPerturbed("row carries no eps symbol; use step_perturb");

  LocalModel next = with_new_coordinate();
  next.rows_[row].extras.back() = {Entry::Kind::Eps, next.iteration_};
  next.directions_.push_back({next.iteration_ - 1, -1});
  return next;
}

LocalModel LocalModel::step_perturb_wedge_child(int row) const {
  check_row(row);
  require_not_degenerate();
  if (rows_[row].perturbed())
    throw RowAlreadyPerturbed("row already carries an eps symbol; use step_perturb_again");
  if (!rows_[row].wedge_child())
    throw RowNotWedgeChild("row is not a wedge child; use step_perturb");
  if (evaluate().excess == 0) throw ExcessExhausted("excess is already 0; nothing to split");

  LocalModel next = with_new_coordinate();
  next.rows_[row].extras.back() = {Entry::Kind::Eps, next.iteration_};
  next.directions_.push_back({next.iteration_ - 1, -1});
  return next;
}

namespace {

// Generic instantiation of the base block: hyperplanes through a common
// point with any d of them independent (a Vandermonde family).  Row i maps
// to [-1, 1, i, i^2, ..., i^(d-1)].
QVector instantiate_row(const LocalModel::Row& row, int d,
                        const std::map<int, Rational>& eps_values) {
  QVector out;
  out.reserve(1 + d + row.extras.size());
  out.push_back(-1);
  Rational power = 1;
  for (int c = 0; c < d; ++c) {
    out.push_back(power);
    power *= row.base;
  }
  for (const LocalModel::Entry& entry : row.extras) {
    switch (entry.kind) {
      case LocalModel::Entry::Kind::Zero:
        out.push_back(0);
        break;
      case LocalModel::Entry::Kind::Plus:
        out.push_back(1);
        break;
      case LocalModel::Entry::Kind::Minus:
        out.push_back(-1);
        break;
      case LocalModel::Entry::Kind::Eps:
        out.push_back(eps_values.at(entry.eps_index));
        break;
    }
  }
  return out;
}

}  // namespace

NonsimplicityStats LocalModel::evaluate(
    const std::optional<std::map<int, Rational>>& eps_values) const {
  std::map<int, Rational> eps;
  if (eps_values) {
    eps = *eps_values;
    for (const auto& [k, v] : eps)
      if (v <= 0) throw InvalidSelection("eps symbols must be instantiated positive");
  }
  for (const Row& row : rows_)
    for (const Entry& entry : row.extras)
      if (entry.kind == Entry::Kind::Eps && !eps.count(entry.eps_index))
        eps[entry.eps_index] = Rational(1, Integer(1) << (entry.eps_index + 1));

  NonsimplicityStats stats;
  stats.dim_p = d_ + iteration_;

  // Sign of the product of each direction column against each row; eps
  // symbols only ever contribute their (positive) sign.
  auto product_sign = [&](const Row& row, const Direction& dir) -> int {
    const Entry& entry = row.extras[dir.coordinate];
    switch (entry.kind) {
      case Entry::Kind::Zero:
        return 0;
      case Entry::Kind::Plus:
        return dir.sign;
      case Entry::Kind::Minus:
        return -dir.sign;
      case Entry::Kind::Eps:
        return dir.sign;
    }
    return 0;
  };

  std::vector<const Direction*> contributing;
  for (const Direction& dir : directions_) {
    bool nonpositive = true;
    for (const Row& row : rows_)
      if (product_sign(row, dir) > 0) {
        nonpositive = false;
        break;
      }
    if (nonpositive) contributing.push_back(&dir);
  }
  stats.dim_s = static_cast<int>(contributing.size());

  stats.n_facets = 0;
  for (const Row& row : rows_) {
    bool vanishes = true;
    for (const Direction* dir : contributing)
      if (product_sign(row, *dir) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) ++stats.n_facets;
  }

  stats.excess = stats.n_facets - (stats.dim_p - stats.dim_s);
  stats.vertex_excess = static_cast<int>(rows_.size()) - stats.dim_p;

  std::vector<QVector> instantiated;
  instantiated.reserve(rows_.size());
  for (const Row& row : rows_) instantiated.push_back(instantiate_row(row, d_, eps));
  const std::size_t r = rank(QMatrix::from_rows(instantiated, 1 + d_ + iteration_));
  stats.degenerate = static_cast<int>(r) < stats.dim_p;
  return stats;
}

int LocalModel::find_vertical_row(int base) const {
  for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
    if (rows_[r].base == base && rows_[r].vertical()) return r;
  throw InvalidSelection("no vertical row for hyperplane " + std::to_string(base));
}

int LocalModel::find_perturbed_row(int base) const {
  for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
    if (rows_[r].base == base && rows_[r].perturbed()) return r;
  throw InvalidSelection("no perturbed row for hyperplane " + std::to_string(base));
}

int LocalModel::find_wedge_child_row(int base) const {
  for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
    if (rows_[r].base == base && rows_[r].wedge_child() && !rows_[r].perturbed()) return r;
  throw InvalidSelection("no wedge-child row for hyperplane " + std::to_string(base));
}

std::vector<NonsimplicityStats> run_schedule(int d, int m,
                                             const std::vector<ScheduleStep>& schedule) {
  LocalModel model = LocalModel::create(d, m);
  std::vector<NonsimplicityStats> stats;
  stats.push_back(model.evaluate());
  for (const ScheduleStep& step : schedule) {
    switch (step.kind) {
      case ScheduleStep::Kind::Perturb:
        model = model.step_perturb(model.find_vertical_row(step.base));
        break;
      case ScheduleStep::Kind::Wedge:
        model = model.step_wedge(model.find_vertical_row(step.base));
        break;
      case ScheduleStep::Kind::WedgeOverPerturbed:
        model = model.step_wedge_over_perturbed(model.find_perturbed_row(step.base));
        break;
      case ScheduleStep::Kind::PerturbAgain:
        model = model.step_perturb_again(model.find_perturbed_row(step.base));
        break;
      case ScheduleStep::Kind::PerturbWedgeChild:
        model = model.step_perturb_wedge_child(model.find_wedge_child_row(step.base));
        break;
    }
    stats.push_back(model.evaluate());
  }
  return stats;
}

std::vector<ScheduleStep> standard_schedule(int d, int m) {
  if (m <= d) throw InvalidCounts("need m > d");
  const int last = 2 * (m - d) - 1;
  if (last > m)
    throw InvalidCounts("standard schedule needs m <= 2d+1 to stay on fresh hyperplanes");
  std::vector<ScheduleStep> schedule;
  for (int i = 1; i <= last; ++i) {
    schedule.push_back({i % 2 == 1 ? ScheduleStep::Kind::Perturb : ScheduleStep::Kind::Wedge, i});
  }
  return schedule;
}

namespace {

int last_base_of(const std::vector<ScheduleStep>& prefix, ScheduleStep::Kind kind) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    if (it->kind == kind) return it->base;
  throw InvalidSelection("variant schedule has no earlier step of the required kind");
}

}  // namespace

std::vector<ScheduleStep> parse_schedule(const std::string& text, int d, int m) {
  if (text.empty() || text == "standard") return standard_schedule(d, m);

  for (const auto& [prefix, kind] :
       {std::pair<std::string, ScheduleStep::Kind>{"eps-omega-at-",
                                                   ScheduleStep::Kind::WedgeOverPerturbed},
        {"eps-eps-at-", ScheduleStep::Kind::PerturbAgain},
        {"wedge-eps-at-", ScheduleStep::Kind::PerturbWedgeChild}}) {
    if (text.rfind(prefix, 0) != 0) continue;
    const int at = std::stoi(text.substr(prefix.size()));
    std::vector<ScheduleStep> standard = standard_schedule(d, m);
    if (at < 2 || at > static_cast<int>(standard.size()))
      throw InvalidSelection("variant iteration out of range");
    std::vector<ScheduleStep> schedule(standard.begin(), standard.begin() + (at - 1));
    const ScheduleStep::Kind anchor = kind == ScheduleStep::Kind::PerturbWedgeChild
                                          ? ScheduleStep::Kind::Wedge
                                          : ScheduleStep::Kind::Perturb;
    schedule.push_back({kind, last_base_of(schedule, anchor)});
    return schedule;
  }

  // Explicit comma-separated steps.
  std::vector<ScheduleStep> schedule;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) throw InvalidSelection("empty schedule token");
    ScheduleStep step;
    std::size_t digits = 0;
    if (token.rfind("pp", 0) == 0) {
      step.kind = ScheduleStep::Kind::PerturbAgain;
      digits = 2;
    } else if (token.rfind("pw", 0) == 0) {
      step.kind = ScheduleStep::Kind::WedgeOverPerturbed;
      digits = 2;
    } else if (token.rfind("pc", 0) == 0) {
      step.kind = ScheduleStep::Kind::PerturbWedgeChild;
      digits = 2;
    } else if (token[0] == 'p') {
      step.kind = ScheduleStep::Kind::Perturb;
      digits = 1;
    } else if (token[0] == 'w') {
      step.kind = ScheduleStep::Kind::Wedge;
      digits = 1;
    } else {
      throw InvalidSelection("unknown schedule token: " + token);
    }
    try {
      step.base = std::stoi(token.substr(digits));
    } catch (const std::exception&) {
      throw InvalidSelection("schedule token needs a hyperplane number: " + token);
    }
    if (step.base < 1 || step.base > m)
      throw InvalidSelection("hyperplane number out of range in token: " + token);
    schedule.push_back(step);
  }
  if (schedule.empty()) throw InvalidSelection("empty schedule");
  return schedule;
}

}  // namespace pwedge
