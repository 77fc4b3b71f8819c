#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pwedge/local_model.hpp"

#include <cstdint>

using namespace pwedge;

namespace {

NonsimplicityStats stats_of(int dim_p, int dim_s, int n_facets, int excess) {
  NonsimplicityStats s;
  s.dim_p = dim_p;
  s.dim_s = dim_s;
  s.n_facets = n_facets;
  s.excess = excess;
  return s;
}

bool matches(const NonsimplicityStats& got, const NonsimplicityStats& want) {
  return got.dim_p == want.dim_p && got.dim_s == want.dim_s && got.n_facets == want.n_facets &&
         got.excess == want.excess && !got.degenerate;
}

struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  int next(int lo, int hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<int>((state >> 33) % (hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("new model stats") {
  const LocalModel m36 = LocalModel::create(3, 6);
  CHECK(matches(m36.evaluate(), stats_of(3, 0, 6, 3)));
  CHECK(m36.evaluate().vertex_excess == 3);

  CHECK(LocalModel::create(5, 8).evaluate().excess == 3);
  CHECK_THROWS_AS(LocalModel::create(3, 3), InvalidCounts);
  CHECK_THROWS_AS(LocalModel::create(4, 3), InvalidCounts);
}

TEST_CASE("single steps reproduce the tabulated stats") {
  for (const auto [d, m] : {std::pair{3, 6}, {5, 8}, {4, 7}}) {
    const LocalModel start = LocalModel::create(d, m);
    const LocalModel it1 = start.step_perturb(0);
    CHECK(matches(it1.evaluate(), stats_of(d + 1, 1, m - 1, m - d - 1)));

    const LocalModel it2 = it1.step_wedge(it1.find_vertical_row(2));
    CHECK(matches(it2.evaluate(), stats_of(d + 2, 1, m, m - d - 1)));

    const LocalModel it3 = it2.step_perturb(it2.find_vertical_row(3));
    CHECK(matches(it3.evaluate(), stats_of(d + 3, 2, m - 1, m - d - 2)));

    const LocalModel it4 = it3.step_wedge(it3.find_vertical_row(4));
    CHECK(matches(it4.evaluate(), stats_of(d + 4, 2, m, m - d - 2)));
  }
}

TEST_CASE("wedge before any perturbation tracks only the vertex") {
  const LocalModel m = LocalModel::create(3, 6).step_wedge(0);
  const NonsimplicityStats stats = m.evaluate();
  CHECK(stats.dim_p == 4);
  CHECK(stats.dim_s == 0);
  CHECK(stats.n_facets == 7);  // m + 1: the pinched direction leaves all rows
  CHECK(stats.vertex_excess == 3);
  CHECK(!stats.degenerate);
}

TEST_CASE("case eps->omega: wedging over the perturbed facet reports both levels") {
  for (const auto [d, m] : {std::pair{3, 6}, {5, 8}}) {
    const LocalModel it1 = LocalModel::create(d, m).step_perturb(0);
    const LocalModel variant = it1.step_wedge_over_perturbed(0);
    const NonsimplicityStats stats = variant.evaluate();
    CHECK(stats.dim_p == d + 2);
    CHECK(stats.dim_s == 1);
    CHECK(stats.n_facets == m - 1);
    CHECK(stats.excess == m - d - 2);        // the edge-level nonsimplicity
    CHECK(stats.vertex_excess == m - d - 1); // the vertex-level one: m+1 rows
    CHECK(!stats.degenerate);
  }
  // With m - d = 2 the edge-level excess m-d-2 resolves to 0.
  const LocalModel tight = LocalModel::create(3, 5).step_perturb(0).step_wedge_over_perturbed(0);
  CHECK(tight.evaluate().excess == 0);
  CHECK(tight.evaluate().dim_s == 1);
}

TEST_CASE("case eps->eps: perturbing the perturbed facet degenerates") {
  const LocalModel it2 = LocalModel::create(3, 6).step_perturb(0).step_wedge(1);
  const LocalModel degen = it2.step_perturb_again(0);
  const NonsimplicityStats stats = degen.evaluate();
  CHECK(stats.degenerate);
  CHECK(stats.dim_s == 2);
  // The computed facet count is m (both images of h2 vanish on the
  // contributing directions); the display annotates m-1.  We report the
  // computed count and surface the discrepancy in the docs.
  CHECK(stats.n_facets == 6);

  CHECK_THROWS_AS(degen.step_perturb(degen.find_vertical_row(3)), ModelDegenerate);
  CHECK_THROWS_AS(degen.step_wedge(degen.find_vertical_row(3)), ModelDegenerate);
  CHECK_THROWS_AS(degen.step_perturb_again(0), ModelDegenerate);
}

TEST_CASE("case wedge->eps: perturbing a wedge child") {
  for (const auto [d, m] : {std::pair{3, 6}, {5, 8}}) {
    const LocalModel it2 = LocalModel::create(d, m).step_perturb(0).step_wedge(1);
    const LocalModel variant = it2.step_perturb_wedge_child(it2.find_wedge_child_row(2));
    CHECK(matches(variant.evaluate(), stats_of(d + 3, 2, m - 1, m - d - 2)));
  }
  const LocalModel it2 = LocalModel::create(3, 6).step_perturb(0).step_wedge(1);
  const LocalModel variant = it2.step_perturb_wedge_child(it2.find_wedge_child_row(2));
  const NonsimplicityStats stats = variant.evaluate();
  CHECK(stats.dim_p == 6);
  CHECK(stats.dim_s == 2);
  CHECK(stats.n_facets == 5);
  CHECK(stats.excess == 1);
}

TEST_CASE("step routing errors") {
  const LocalModel it1 = LocalModel::create(3, 6).step_perturb(0);
  CHECK_THROWS_AS(it1.step_perturb(0), RowAlreadyPerturbed);
  CHECK_THROWS_AS(it1.step_wedge(0), RowAlreadyPerturbed);
  CHECK_THROWS_AS(it1.step_wedge_over_perturbed(1), RowNotPerturbed);
  CHECK_THROWS_AS(it1.step_perturb_again(1), RowNotPerturbed);
  CHECK_THROWS_AS(it1.step_perturb_wedge_child(1), RowNotWedgeChild);

  const LocalModel it2 = it1.step_wedge(1);
  const int child = it2.find_wedge_child_row(2);
  CHECK_THROWS_AS(it2.step_perturb(child), RowIsWedgeChild);
  CHECK_THROWS_AS(it2.step_wedge(child), RowIsWedgeChild);
}

TEST_CASE("perturbing with excess zero is rejected") {
  // (3,4): excess 1 is exhausted after one perturbation.
  const LocalModel done = LocalModel::create(3, 4).step_perturb(0);
  CHECK(done.evaluate().excess == 0);
  CHECK_THROWS_AS(done.step_perturb(done.find_vertical_row(2)), ExcessExhausted);
}

TEST_CASE("standard schedule reproduces the iteration table") {
  const auto stats36 = run_schedule(3, 6, standard_schedule(3, 6));
  REQUIRE(stats36.size() == 6);  // iterations 0..5
  CHECK(matches(stats36[0], stats_of(3, 0, 6, 3)));
  CHECK(matches(stats36[1], stats_of(4, 1, 5, 2)));
  CHECK(matches(stats36[2], stats_of(5, 1, 6, 2)));
  CHECK(matches(stats36[3], stats_of(6, 2, 5, 1)));
  CHECK(matches(stats36[4], stats_of(7, 2, 6, 1)));
  CHECK(matches(stats36[5], stats_of(8, 3, 5, 0)));  // 2(m-d)-1 = 5, dim P = 2m-d-1

  const auto stats58 = run_schedule(5, 8, standard_schedule(5, 8));
  REQUIRE(stats58.size() == 6);
  CHECK(matches(stats58[5], stats_of(10, 3, 7, 0)));

  // Excess drops by one on perturb steps and is preserved on wedge steps.
  for (const auto [d, m] : {std::pair{3, 6}, {5, 8}, {5, 9}}) {
    const auto schedule = standard_schedule(d, m);
    const auto stats = run_schedule(d, m, schedule);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      const int delta = stats[i].excess - stats[i + 1].excess;
      CHECK(delta == (schedule[i].kind == ScheduleStep::Kind::Perturb ? 1 : 0));
      CHECK(stats[i + 1].dim_s <= m - d);
    }
  }
}

TEST_CASE("empty schedule yields the initial row") {
  const auto stats = run_schedule(3, 6, {});
  REQUIRE(stats.size() == 1);
  CHECK(matches(stats[0], stats_of(3, 0, 6, 3)));
}

TEST_CASE("schedule parsing") {
  CHECK(parse_schedule("standard", 3, 6).size() == 5);

  const auto explicit_steps = parse_schedule("p1,w2,pp1", 3, 6);
  REQUIRE(explicit_steps.size() == 3);
  CHECK(explicit_steps[2].kind == ScheduleStep::Kind::PerturbAgain);
  CHECK(explicit_steps[2].base == 1);

  const auto eps_eps = parse_schedule("eps-eps-at-3", 3, 6);
  REQUIRE(eps_eps.size() == 3);
  CHECK(eps_eps[2].kind == ScheduleStep::Kind::PerturbAgain);
  CHECK(eps_eps[2].base == 1);
  CHECK(run_schedule(3, 6, eps_eps).back().degenerate);

  const auto eps_omega = parse_schedule("eps-omega-at-2", 3, 6);
  REQUIRE(eps_omega.size() == 2);
  CHECK(eps_omega[1].kind == ScheduleStep::Kind::WedgeOverPerturbed);

  const auto wedge_eps = parse_schedule("wedge-eps-at-3", 3, 6);
  REQUIRE(wedge_eps.size() == 3);
  CHECK(wedge_eps[2].kind == ScheduleStep::Kind::PerturbWedgeChild);
  CHECK(wedge_eps[2].base == 2);

  CHECK_THROWS_AS(parse_schedule("x5", 3, 6), InvalidSelection);
  CHECK_THROWS_AS(parse_schedule("p9", 3, 6), InvalidSelection);
  CHECK_THROWS_AS(standard_schedule(3, 10), InvalidCounts);  // runs out of fresh rows
}

TEST_CASE("evaluate is invariant under positive eps instantiation") {
  Lcg rng(4213);
  const LocalModel it3 =
      LocalModel::create(3, 6).step_perturb(0).step_wedge(1).step_perturb(3);
  const LocalModel degen = LocalModel::create(3, 6).step_perturb(0).step_perturb_again(0);
  for (int trial = 0; trial < 25; ++trial) {
    std::map<int, Rational> eps;
    for (int k = 1; k <= 4; ++k) eps[k] = Rational(rng.next(1, 50), rng.next(1, 50));
    CHECK(it3.evaluate(eps) == it3.evaluate());
    CHECK(degen.evaluate(eps) == degen.evaluate());
  }
  CHECK_THROWS_AS(it3.evaluate(std::map<int, Rational>{{1, Rational(-1)}}), InvalidSelection);
}
