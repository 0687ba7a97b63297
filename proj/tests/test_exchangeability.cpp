// Pair estimators, exact measures on explicit distributions, the uniform
// null, and the all-pairs matrix. Estimator values are cross-checked against
// the brute-force implementations in refimpl.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "exchlist/error.hpp"
#include "exchlist/exchangeability.hpp"
#include "exchlist/kde.hpp"
#include "exchlist/metric.hpp"
#include "exchlist/pair_samples.hpp"
#include "refimpl.hpp"

using namespace exchlist;

namespace {

Metric metric_of(MetricKind k) {
  Metric m;
  m.kind = k;
  return m;
}

const MetricKind kKinds[3] = {MetricKind::euclidean, MetricKind::manhattan,
                              MetricKind::chebyshev};

refimpl::Metric ref_metric(MetricKind k) {
  switch (k) {
    case MetricKind::euclidean: return refimpl::kEuclid;
    case MetricKind::manhattan: return refimpl::kManhattan;
    default: return refimpl::kChebyshev;
  }
}

PairSamples random_samples(std::mt19937& gen, int grid_m, int rounds) {
  std::uniform_int_distribution<int> coord(1, grid_m);
  std::vector<Point2> fwd(rounds);
  for (auto& p : fwd) p = {coord(gen), coord(gen)};
  return PairSamples::from_points(fwd, grid_m);
}

std::vector<std::pair<int, int>> as_pairs(const PairSamples& ps) {
  std::vector<std::pair<int, int>> out;
  for (const Point2& p : ps.forward) out.emplace_back(p.x, p.y);
  return out;
}

// Random pmf on {1..M}^arity with a fraction of cells zeroed; zero cells are
// omitted so the same map can feed both implementations.
std::map<std::vector<int>, double> random_pmf(std::mt19937& gen, int arity,
                                              int grid_m, double keep = 0.8) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::map<std::vector<int>, double> pmf;
  std::vector<int> tuple(arity, 1);
  double total = 0.0;
  while (true) {
    if (unif(gen) < keep) {
      double w = 0.05 + unif(gen);
      pmf[tuple] = w;
      total += w;
    }
    int d = arity - 1;
    while (d >= 0 && tuple[d] == grid_m) tuple[d--] = 1;
    if (d < 0) break;
    ++tuple[d];
  }
  if (pmf.empty()) pmf[std::vector<int>(arity, 1)] = total = 1.0;
  for (auto& [k, v] : pmf) v /= total;
  return pmf;
}

// Symmetrizes a pmf: every tuple gets the weight of its sorted class, making
// the distribution exchangeable by construction.
std::map<std::vector<int>, double> symmetrize(
    const std::map<std::vector<int>, double>& pmf) {
  std::map<std::vector<int>, double> cls;
  for (const auto& [k, v] : pmf) {
    std::vector<int> s = k;
    std::sort(s.begin(), s.end());
    cls[s] += v;
  }
  std::map<std::vector<int>, double> out;
  for (const auto& [s, v] : cls) {
    std::vector<int> perm = s;
    int count = 0;
    do ++count; while (std::next_permutation(perm.begin(), perm.end()));
    perm = s;
    do out[perm] = v / count; while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("set distance: nearest point, zero for members, empty rejected") {
  Metric eu = metric_of(MetricKind::euclidean);
  CHECK(set_distance({1, 2}, {{2, 1}, {3, 1}}, eu) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(set_distance({1, 1}, {{4, 5}}, eu) == doctest::Approx(5.0));
  CHECK(set_distance({3, 1}, {{2, 1}, {3, 1}}, eu) == 0.0);
  CHECK(set_distance({1, 2}, {{2, 1}, {3, 1}}, metric_of(MetricKind::manhattan)) ==
        2.0);
  CHECK_THROWS_AS(set_distance({1, 1}, {}, eu), ConfigError);
}

TEST_CASE("hausdorff distance: hand value, symmetry, identity") {
  Metric eu = metric_of(MetricKind::euclidean);
  std::vector<Point2> a = {{1, 2}, {3, 4}};
  std::vector<Point2> b = {{2, 1}};
  // sup of {sqrt(2), sqrt(10)} forward, sqrt(2) backward.
  CHECK(hausdorff_distance(a, b, eu) ==
        doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
  CHECK(hausdorff_distance(b, a, eu) == hausdorff_distance(a, b, eu));
  CHECK(hausdorff_distance(a, a, eu) == 0.0);
  CHECK_THROWS_AS(hausdorff_distance(a, {}, eu), ConfigError);
  CHECK_THROWS_AS(hausdorff_distance({}, b, eu), ConfigError);

  std::mt19937 gen(11);
  std::uniform_int_distribution<int> coord(1, 8);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point2> u, v;
    for (int i = 0; i < 5; ++i) u.push_back({coord(gen), coord(gen)});
    for (int i = 0; i < 7; ++i) v.push_back({coord(gen), coord(gen)});
    for (MetricKind k : kKinds) {
      Metric m = metric_of(k);
      CHECK(hausdorff_distance(u, v, m) == hausdorff_distance(v, u, m));
    }
  }
}

TEST_CASE("estimate_pair: mutually reflected rounds give zero everywhere") {
  PairSamples ps = PairSamples::from_rows(std::vector<int>{1, 2},
                                          std::vector<int>{2, 1}, 3);
  Metric eu = metric_of(MetricKind::euclidean);
  CHECK(estimate_pair(ps, PairMeasure::ed_mean, eu) == 0.0);
  CHECK(estimate_pair(ps, PairMeasure::ed_max, eu) == 0.0);
  CHECK(estimate_pair(ps, PairMeasure::oed_mean, eu) == 0.0);
  CHECK(estimate_pair(ps, PairMeasure::oed_max, eu) == 0.0);
}

TEST_CASE("estimate_pair: worked two-round example on the 3-grid") {
  PairSamples ps = PairSamples::from_rows(std::vector<int>{1, 1},
                                          std::vector<int>{2, 3}, 3);
  Metric eu = metric_of(MetricKind::euclidean);
  // Forward {(1,2),(1,3)}, reflected {(2,1),(3,1)}; nearest distances
  // sqrt(2) and sqrt(5); normalizer 2*sqrt(2).
  CHECK(estimate_pair(ps, PairMeasure::ed_mean, eu) ==
        doctest::Approx((std::sqrt(2.0) + std::sqrt(5.0)) / (4.0 * std::sqrt(2.0)))
            .epsilon(1e-12));
  CHECK(estimate_pair(ps, PairMeasure::ed_max, eu) ==
        doctest::Approx(std::sqrt(5.0) / (2.0 * std::sqrt(2.0))).epsilon(1e-12));
  // All forward points sit below the diagonal while every reflected point is
  // above it, so each sign region is empty.
  CHECK(estimate_pair(ps, PairMeasure::oed_mean, eu) == 1.0);
  CHECK(estimate_pair(ps, PairMeasure::oed_max, eu) == 1.0);

  CHECK(estimate_pair(ps, PairMeasure::ed_mean,
                      metric_of(MetricKind::manhattan)) == 0.625);
  CHECK(estimate_pair(ps, PairMeasure::ed_mean,
                      metric_of(MetricKind::chebyshev)) == 0.75);
}

TEST_CASE("estimate_pair: single round at the extreme corner scores 1") {
  PairSamples ps = PairSamples::from_points({{1, 2}}, 2);
  CHECK(estimate_pair(ps, PairMeasure::ed_mean,
                      metric_of(MetricKind::euclidean)) == 1.0);
  CHECK(estimate_pair(ps, PairMeasure::ed_max,
                      metric_of(MetricKind::euclidean)) == 1.0);
}

TEST_CASE("estimate_pair rejects pvar and small grids for one-sided") {
  PairSamples ps = PairSamples::from_points({{1, 2}, {2, 1}}, 3);
  Metric eu = metric_of(MetricKind::euclidean);
  CHECK_THROWS_AS(estimate_pair(ps, PairMeasure::pvar, eu), ConfigError);
  PairSamples tiny = PairSamples::from_points({{1, 2}}, 2);
  CHECK_THROWS_AS(estimate_pair(tiny, PairMeasure::oed_mean, eu), ConfigError);
  CHECK_THROWS_AS(estimate_pair(tiny, PairMeasure::oed_max, eu), ConfigError);
}

TEST_CASE("estimate_pair matches the brute-force reference") {
  std::mt19937 gen(20260814);
  const PairMeasure measures[4] = {PairMeasure::ed_mean, PairMeasure::ed_max,
                                   PairMeasure::oed_mean, PairMeasure::oed_max};
  std::uniform_int_distribution<int> grid(3, 30);
  std::uniform_int_distribution<int> rounds(1, 15);
  for (int t = 0; t < 120; ++t) {
    int m = grid(gen);
    PairSamples ps = random_samples(gen, m, rounds(gen));
    auto pts = as_pairs(ps);
    for (MetricKind k : kKinds) {
      Metric mk = metric_of(k);
      for (int w = 0; w < 4; ++w) {
        double got = estimate_pair(ps, measures[w], mk);
        double want = refimpl::pair_estimate(pts, m, ref_metric(k), w);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);
      }
    }
  }
}

TEST_CASE("estimate_pair is symmetric under swapping the gene pair") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coord(1, 9);
  const PairMeasure measures[4] = {PairMeasure::ed_mean, PairMeasure::ed_max,
                                   PairMeasure::oed_mean, PairMeasure::oed_max};
  for (int t = 0; t < 60; ++t) {
    std::vector<int> ri(6), rj(6);
    for (int k = 0; k < 6; ++k) {
      ri[k] = coord(gen);
      rj[k] = coord(gen);
    }
    PairSamples ij = PairSamples::from_rows(ri, rj, 9);
    PairSamples ji = PairSamples::from_rows(rj, ri, 9);
    for (MetricKind k : kKinds) {
      Metric mk = metric_of(k);
      for (PairMeasure w : measures)
        CHECK(estimate_pair(ij, w, mk) == estimate_pair(ji, w, mk));
    }
  }
}

TEST_CASE("estimate_pair: orderings and round-permutation invariance") {
  std::mt19937 gen(13);
  for (int t = 0; t < 80; ++t) {
    PairSamples ps = random_samples(gen, 7, 8);
    for (MetricKind k : kKinds) {
      Metric mk = metric_of(k);
      double ed_mean = estimate_pair(ps, PairMeasure::ed_mean, mk);
      double ed_max = estimate_pair(ps, PairMeasure::ed_max, mk);
      double oed_mean = estimate_pair(ps, PairMeasure::oed_mean, mk);
      double oed_max = estimate_pair(ps, PairMeasure::oed_max, mk);
      CHECK(ed_mean <= ed_max + 1e-12);
      CHECK(ed_mean <= oed_mean + 1e-12);
      CHECK(oed_mean <= oed_max + 1e-12);

      std::vector<Point2> shuffled = ps.forward;
      std::shuffle(shuffled.begin(), shuffled.end(), gen);
      PairSamples ps2 = PairSamples::from_points(shuffled, ps.grid_m);
      CHECK(estimate_pair(ps2, PairMeasure::ed_mean, mk) ==
            doctest::Approx(ed_mean).epsilon(1e-12));
      CHECK(estimate_pair(ps2, PairMeasure::ed_max, mk) == ed_max);
      CHECK(estimate_pair(ps2, PairMeasure::oed_mean, mk) ==
            doctest::Approx(oed_mean).epsilon(1e-12));
      CHECK(estimate_pair(ps2, PairMeasure::oed_max, mk) == oed_max);
    }
  }
}

TEST_CASE("ed_mean vanishes exactly when the sample is reflection closed") {
  std::mt19937 gen(29);
  Metric eu = metric_of(MetricKind::euclidean);
  auto contains = [](const std::vector<Point2>& set, Point2 p) {
    return std::find(set.begin(), set.end(), p) != set.end();
  };
  int zeros = 0;
  for (int t = 0; t < 300; ++t) {
    PairSamples ps = random_samples(gen, 4, 5);
    if (t % 3 == 0) {
      // Force closure: append the swap of every point.
      std::vector<Point2> closed = ps.forward;
      for (Point2 p : ps.forward) closed.push_back({p.y, p.x});
      ps = PairSamples::from_points(closed, 4);
    }
    bool subset = true;
    for (Point2 p : ps.forward)
      if (!contains(ps.reflected, p)) subset = false;
    double est = estimate_pair(ps, PairMeasure::ed_mean, eu);
    CHECK((est == 0.0) == subset);
    if (est == 0.0) ++zeros;
  }
  CHECK(zeros >= 100);  // the closure branch must actually fire
}

TEST_CASE("pair measure names round-trip") {
  for (PairMeasure m : {PairMeasure::ed_max, PairMeasure::ed_mean,
                        PairMeasure::oed_max, PairMeasure::oed_mean,
                        PairMeasure::pvar})
    CHECK(pair_measure_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(pair_measure_from_string("ed_median"), ConfigError);
}

TEST_CASE("PairSamples construction and validation") {
  std::vector<int> ri = {1, 3, 2};
  std::vector<int> rj = {2, 1, 3};
  PairSamples ps = PairSamples::from_rows(ri, rj, 3);
  REQUIRE(ps.rounds() == 3);
  CHECK(ps.grid_m == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(ps.forward[k] == Point2{ri[k], rj[k]});
    CHECK(ps.reflected[k] == Point2{rj[k], ri[k]});
  }

  CHECK_THROWS_AS(PairSamples::from_rows(std::vector<int>{1, 2},
                                         std::vector<int>{1}, 3),
                  ConfigError);
  CHECK_THROWS_AS(PairSamples::from_rows(std::vector<int>{},
                                         std::vector<int>{}, 3),
                  ConfigError);
  CHECK_THROWS_AS(PairSamples::from_rows(ri, rj, 1), ConfigError);
  CHECK_THROWS_AS(PairSamples::from_rows(std::vector<int>{0, 1, 2}, rj, 3),
                  DataError);
  CHECK_THROWS_AS(PairSamples::from_rows(ri, std::vector<int>{2, 4, 3}, 3),
                  DataError);

  CHECK_THROWS_AS(PairSamples::from_points({}, 3), ConfigError);
  CHECK_THROWS_AS(PairSamples::from_points({{1, 1}}, 1), ConfigError);
  CHECK_THROWS_AS(PairSamples::from_points({{1, 4}}, 3), DataError);

  PositionVectors pv(3, 3);
  const int cols[3][3] = {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}};
  for (int r = 0; r < 3; ++r)
    for (int g = 0; g < 3; ++g) pv.set(g, r, cols[r][g]);
  pv.validate();
  PairSamples a = PairSamples::from_position_vectors(pv, 0, 2);
  std::vector<int> r0 = {1, 3, 2};  // row 0 across rounds
  std::vector<int> r2 = {3, 2, 1};
  PairSamples b = PairSamples::from_rows(r0, r2, 3);
  CHECK(a.forward == b.forward);
  CHECK(a.reflected == b.reflected);
  CHECK(a.grid_m == 3);
}

TEST_CASE("plot data lists forward then reflected points by round") {
  PairSamples ps = PairSamples::from_rows(std::vector<int>{1, 1},
                                          std::vector<int>{2, 3}, 3);
  auto pts = exchangeability_plot_data(ps);
  REQUIRE(pts.size() == 4);
  CHECK(!pts[0].reflected);
  CHECK(pts[0].round == 0);
  CHECK(pts[0].x == 1);
  CHECK(pts[0].y == 2);
  CHECK(!pts[1].reflected);
  CHECK(pts[1].round == 1);
  CHECK(pts[1].x == 1);
  CHECK(pts[1].y == 3);
  CHECK(pts[2].reflected);
  CHECK(pts[2].round == 0);
  CHECK(pts[2].x == 2);
  CHECK(pts[2].y == 1);
  CHECK(pts[3].reflected);
  CHECK(pts[3].round == 1);
  CHECK(pts[3].x == 3);
  CHECK(pts[3].y == 1);
}

// ---------------------------------------------------------------------------
// Exact measures.

TEST_CASE("joint distribution validation") {
  std::map<std::vector<int>, double> ok = {{{1, 1}, 0.5}, {{2, 2}, 0.5}};
  CHECK_NOTHROW(DiscreteJointDistribution(2, 2, ok));
  CHECK_THROWS_AS(DiscreteJointDistribution(1, 2, ok), ConfigError);
  CHECK_THROWS_AS(DiscreteJointDistribution(6, 2, ok), ConfigError);
  CHECK_THROWS_AS(DiscreteJointDistribution(2, 1, ok), ConfigError);
  CHECK_THROWS_AS(DiscreteJointDistribution(2, 2,
                                            {{{1, 1, 1}, 1.0}}),
                  DataError);
  CHECK_THROWS_AS(DiscreteJointDistribution(2, 2, {{{0, 1}, 1.0}}), DataError);
  CHECK_THROWS_AS(DiscreteJointDistribution(2, 2, {{{1, 3}, 1.0}}), DataError);
  CHECK_THROWS_AS(DiscreteJointDistribution(
                      2, 2, {{{1, 1}, 1.2}, {{2, 2}, -0.2}}),
                  DataError);
  CHECK_THROWS_AS(DiscreteJointDistribution(2, 2,
                                            {{{1, 1}, 0.7}, {{2, 2}, 0.2}}),
                  DataError);
  CHECK_THROWS_AS(DiscreteJointDistribution(2, 2, {}), DataError);

  // Zero-probability cells are dropped from the stored support.
  DiscreteJointDistribution d(2, 2, {{{1, 1}, 1.0}, {{1, 2}, 0.0}});
  CHECK(d.pmf().size() == 1);
  CHECK(d.pmf().count({1, 2}) == 0);
}

TEST_CASE("exact measures: point mass at (1,2) is maximally asymmetric") {
  DiscreteJointDistribution d(2, 2, {{{1, 2}, 1.0}});
  Metric eu = metric_of(MetricKind::euclidean);
  CHECK(exact_measure(d, ExactMeasure::epvar, eu) == 1.0);
  CHECK(exact_measure(d, ExactMeasure::eed_max, eu) == 1.0);
  CHECK(exact_measure(d, ExactMeasure::eed_mean, eu) == 1.0);
}

TEST_CASE("exact measures vanish on exchangeable distributions") {
  std::mt19937 gen(31);
  Metric eu = metric_of(MetricKind::euclidean);
  for (int arity = 2; arity <= 3; ++arity) {
    for (int t = 0; t < 40; ++t) {
      auto pmf = symmetrize(random_pmf(gen, arity, 3));
      DiscreteJointDistribution d(arity, 3, pmf);
      // The distance measures compare identical supports, so they are zero
      // bit for bit. The variation measure averages arity! equal values;
      // that average is exact only when arity! is a power of two, so at
      // arity 3 a rounding residue of a few ulp remains.
      CHECK(exact_measure(d, ExactMeasure::eed_max, eu) == 0.0);
      CHECK(exact_measure(d, ExactMeasure::eed_mean, eu) == 0.0);
      const double pvar = exact_measure(d, ExactMeasure::epvar, eu);
      if (arity == 2)
        CHECK(pvar == 0.0);
      else
        CHECK(pvar <= 1e-15);
    }
  }
}

TEST_CASE("exact measures detect asymmetry") {
  Metric eu = metric_of(MetricKind::euclidean);
  // Probability asymmetry on a symmetric support: only epvar sees it.
  std::map<std::vector<int>, double> tilted;
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y) tilted[{x, y}] = 1.0 / 9.0;
  tilted[{1, 2}] -= 0.05;
  tilted[{2, 1}] += 0.05;
  DiscreteJointDistribution dt(2, 3, tilted);
  CHECK(exact_measure(dt, ExactMeasure::epvar, eu) > 0.0);
  CHECK(exact_measure(dt, ExactMeasure::eed_max, eu) == 0.0);
  CHECK(exact_measure(dt, ExactMeasure::eed_mean, eu) == 0.0);

  // Support asymmetry: all three fire.
  DiscreteJointDistribution ds(2, 3, {{{1, 1}, 0.5}, {{1, 2}, 0.5}});
  for (ExactMeasure w :
       {ExactMeasure::epvar, ExactMeasure::eed_max, ExactMeasure::eed_mean})
    CHECK(exact_measure(ds, w, eu) > 0.0);
}

TEST_CASE("exact measures match the brute-force reference") {
  std::mt19937 gen(37);
  struct Cfg {
    int arity, grid_m, trials;
  };
  for (Cfg cfg : {Cfg{2, 3, 25}, Cfg{2, 4, 25}, Cfg{2, 5, 10}, Cfg{3, 3, 10},
                  Cfg{4, 2, 5}, Cfg{5, 2, 3}}) {
    for (int t = 0; t < cfg.trials; ++t) {
      auto pmf = random_pmf(gen, cfg.arity, cfg.grid_m);
      DiscreteJointDistribution d(cfg.arity, cfg.grid_m, pmf);
      CHECK(exact_measure(d, ExactMeasure::epvar,
                          metric_of(MetricKind::euclidean)) ==
            doctest::Approx(refimpl::exact_pvar(cfg.arity, pmf))
                .epsilon(1e-12));
      for (MetricKind k : kKinds) {
        CHECK(exact_measure(d, ExactMeasure::eed_mean, metric_of(k)) ==
              doctest::Approx(refimpl::exact_ed(cfg.arity, cfg.grid_m, pmf,
                                                ref_metric(k), true))
                  .epsilon(1e-12));
        CHECK(exact_measure(d, ExactMeasure::eed_max, metric_of(k)) ==
              doctest::Approx(refimpl::exact_ed(cfg.arity, cfg.grid_m, pmf,
                                                ref_metric(k), false))
                  .epsilon(1e-12));
      }
      CHECK(exact_measure(d, ExactMeasure::epvar,
                          metric_of(MetricKind::euclidean)) >= 0.0);
      CHECK(exact_measure(d, ExactMeasure::epvar,
                          metric_of(MetricKind::euclidean)) <= 1.0);
    }
  }
}

TEST_CASE("estimator shrinks on iid draws from an exchangeable law") {
  std::mt19937 gen(41);
  std::uniform_int_distribution<int> coord(1, 10);
  std::vector<Point2> pts(500);
  for (auto& p : pts) p = {coord(gen), coord(gen)};
  PairSamples ps = PairSamples::from_points(pts, 10);
  double est =
      estimate_pair(ps, PairMeasure::ed_mean, metric_of(MetricKind::euclidean));
  CHECK(est <= 0.05);
}

// ---------------------------------------------------------------------------
// Null scores and normalization.

TEST_CASE("null score: one-round one-sided null is the diagonal frequency") {
  // With a single uniform point, the one-sided estimate is 0 when x == y and
  // 1 otherwise, so the null is a Bernoulli(1/M) mean.
  NullConfig cfg{2000, 123};
  double null = null_score(10, 1, PairMeasure::oed_mean,
                           metric_of(MetricKind::euclidean), cfg);
  double sigma = std::sqrt(0.1 * 0.9 / cfg.repeats);
  CHECK(std::abs(null - 0.1) <= 3.0 * sigma);
}

TEST_CASE("null score: two-rank grid matches exact enumeration") {
  for (int which = 0; which <= 1; ++which) {
    PairMeasure measure = which == 0 ? PairMeasure::ed_mean : PairMeasure::ed_max;
    for (int b : {2, 3, 5}) {
      double mean, var;
      refimpl::null_moments_m2(b, refimpl::kEuclid, which, &mean, &var);
      NullConfig cfg{4000, 99};
      double null = null_score(2, b, measure,
                               metric_of(MetricKind::euclidean), cfg);
      double band = 3.0 * std::sqrt(var / cfg.repeats) + 1e-12;
      INFO("measure ", which, " b ", b, " null ", null, " exact ", mean);
      CHECK(std::abs(null - mean) <= band);
    }
  }
}

TEST_CASE("null score: deterministic, cached, seed sensitive") {
  Metric eu = metric_of(MetricKind::euclidean);
  double a = null_score(8, 5, PairMeasure::ed_mean, eu, {200, 17});
  double b = null_score(8, 5, PairMeasure::ed_mean, eu, {200, 17});
  CHECK(a == b);
  double c = null_score(8, 5, PairMeasure::ed_mean, eu, {200, 18});
  CHECK(a != c);
  CHECK(a > 0.0);
  CHECK(a < 1.0);

  KdeConfig kde;
  kde.bandwidth = 0.5;
  double p = null_score(5, 4, PairMeasure::pvar, eu, {10, 7}, kde);
  CHECK(p >= 0.0);
  CHECK(p <= 1.0);

  CHECK_THROWS_AS(null_score(1, 5, PairMeasure::ed_mean, eu, {10, 0}),
                  ConfigError);
  CHECK_THROWS_AS(null_score(8, 0, PairMeasure::ed_mean, eu, {10, 0}),
                  ConfigError);
  CHECK_THROWS_AS(null_score(8, 5, PairMeasure::ed_mean, eu, {0, 0}),
                  ConfigError);
}

TEST_CASE("normalize_score rescales against the null and clamps at zero") {
  CHECK(normalize_score(1.0, 0.6) == 1.0);
  CHECK(normalize_score(0.5, 0.6) == 0.0);
  CHECK(normalize_score(0.8, 0.6) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(normalize_score(0.6, 0.6) == 0.0);
  CHECK(normalize_score(0.3, 0.0) == 0.3);
  CHECK_THROWS_AS(normalize_score(0.5, 1.0), ConfigError);
  CHECK_THROWS_AS(normalize_score(0.5, 1.5), ConfigError);
  CHECK_THROWS_AS(normalize_score(0.5, -0.1), ConfigError);
}

// ---------------------------------------------------------------------------
// All-pairs matrix.

namespace {

PositionVectors random_position_vectors(std::mt19937& gen, int m, int b) {
  PositionVectors pv(m, b);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  for (int r = 0; r < b; ++r) {
    std::shuffle(perm.begin(), perm.end(), gen);
    for (int g = 0; g < m; ++g) pv.set(g, r, perm[g]);
  }
  pv.validate();
  return pv;
}

std::vector<std::tuple<int, int, double>> pairs_of(const SimilarityMatrix& m) {
  std::vector<std::tuple<int, int, double>> out;
  m.for_each_pair([&](int i, int j, double v) { out.emplace_back(i, j, v); });
  return out;
}

}  // namespace

TEST_CASE("matrix: a mutually reflected pair scores exactly 1") {
  PositionVectors pv(3, 2);
  // Columns are the permutations (1,2,3) and (2,1,3): genes 0 and 1 swap.
  pv.set(0, 0, 1); pv.set(1, 0, 2); pv.set(2, 0, 3);
  pv.set(0, 1, 2); pv.set(1, 1, 1); pv.set(2, 1, 3);
  pv.validate();

  ExchangeabilityOptions opt;
  opt.measure = PairMeasure::oed_mean;
  opt.null_config = {50, 9};
  ExchangeabilityMatrix xm = exchangeability_matrix(pv, opt);
  CHECK(xm.scores.at(0, 1) == 1.0);
  CHECK(xm.scores.at(1, 0) == 1.0);
  CHECK(xm.scores.at(0, 0) == 1.0);
  CHECK(xm.meta.rounds_b == 2);
  CHECK(xm.meta.measure == PairMeasure::oed_mean);
  CHECK(xm.meta.metric == MetricKind::euclidean);
  CHECK(xm.meta.seed == 9);
  CHECK(xm.meta.sparsity_threshold == 0.0);
}

TEST_CASE("matrix equals the per-pair computation") {
  std::mt19937 gen(51);
  PositionVectors pv = random_position_vectors(gen, 6, 4);
  for (PairMeasure measure : {PairMeasure::ed_mean, PairMeasure::oed_mean}) {
    ExchangeabilityOptions opt;
    opt.measure = measure;
    opt.metric = metric_of(MetricKind::manhattan);
    opt.null_config = {100, 5};
    ExchangeabilityMatrix xm = exchangeability_matrix(pv, opt);
    double null = null_score(6, 4, measure, opt.metric, opt.null_config);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        PairSamples ps = PairSamples::from_position_vectors(pv, i, j);
        double want =
            normalize_score(1.0 - estimate_pair(ps, measure, opt.metric), null);
        CHECK(xm.scores.at(i, j) == want);
      }
  }
}

TEST_CASE("matrix: worker count does not change the result") {
  std::mt19937 gen(53);
  PositionVectors pv = random_position_vectors(gen, 12, 6);
  ExchangeabilityOptions opt;
  opt.null_config = {100, 3};
  opt.workers = 1;
  ExchangeabilityMatrix one = exchangeability_matrix(pv, opt);
  opt.workers = 8;
  ExchangeabilityMatrix eight = exchangeability_matrix(pv, opt);
  auto a = pairs_of(one.scores);
  auto b = pairs_of(eight.scores);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("matrix: sparsity threshold drops weak entries") {
  std::mt19937 gen(57);
  PositionVectors pv = random_position_vectors(gen, 10, 5);
  ExchangeabilityOptions opt;
  opt.null_config = {100, 3};
  ExchangeabilityMatrix dense = exchangeability_matrix(pv, opt);
  opt.sparsity_threshold = 0.4;
  ExchangeabilityMatrix sparse = exchangeability_matrix(pv, opt);
  CHECK(sparse.meta.sparsity_threshold == 0.4);
  CHECK(sparse.scores.stored_pairs() <= dense.scores.stored_pairs());
  sparse.scores.for_each_pair(
      [&](int, int, double v) { CHECK(v >= 0.4); });
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      double full = dense.scores.at(i, j);
      double cut = sparse.scores.at(i, j);
      if (full >= 0.4)
        CHECK(cut == full);
      else
        CHECK(cut == 0.0);
    }

  opt.sparsity_threshold = -0.1;
  CHECK_THROWS_AS(exchangeability_matrix(pv, opt), ConfigError);
  opt.sparsity_threshold = 1.5;
  CHECK_THROWS_AS(exchangeability_matrix(pv, opt), ConfigError);
}

TEST_CASE("matrix supports the kde measure") {
  std::mt19937 gen(61);
  PositionVectors pv = random_position_vectors(gen, 6, 4);
  ExchangeabilityOptions opt;
  opt.measure = PairMeasure::pvar;
  opt.kde.bandwidth = 0.6;
  opt.kde.grid_resolution = 16;
  opt.null_config = {20, 4};
  ExchangeabilityMatrix xm = exchangeability_matrix(pv, opt);
  CHECK(xm.meta.measure == PairMeasure::pvar);
  xm.scores.for_each_pair([&](int, int, double v) {
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  });
}
