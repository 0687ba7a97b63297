// Experimental harness: concordance, overlaps, aggregation, the five-way
// ranking comparison, distance stability, centroid classification and the
// synthetic generators.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "exchlist/classic_methods.hpp"
#include "exchlist/error.hpp"
#include "exchlist/evaluation.hpp"
#include "exchlist/ranking.hpp"
#include "exchlist/universe.hpp"
#include "refimpl.hpp"

using namespace exchlist;

namespace {

Ranking from_positions(std::vector<int> positions) {
  Ranking r;
  r.positions = std::move(positions);
  validate_ranking(r);
  return r;
}

std::vector<std::vector<int>> position_table(
    const std::vector<Ranking>& rankings) {
  std::vector<std::vector<int>> t;
  for (const Ranking& r : rankings) t.push_back(r.positions);
  return t;
}

Ranking random_ranking(std::mt19937& gen, int m) {
  std::vector<int> pos(m);
  std::iota(pos.begin(), pos.end(), 1);
  std::shuffle(pos.begin(), pos.end(), gen);
  return from_positions(pos);
}

// Small config so the harness stays fast in unit tests.
ExperimentConfig small_config(std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.b_boot = 3;
  cfg.b_sub = 8;
  cfg.aggregation_rounds = 12;
  cfg.null_repeats = 25;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("concordance curve: hand examples") {
  Ranking id3 = from_positions({1, 2, 3});
  ConcordanceCurve same = concordance_curve({id3, id3, id3}, Direction::top);
  CHECK(same.f == std::vector<int>{1, 2, 3});

  ConcordanceCurve swap =
      concordance_curve({id3, from_positions({2, 1, 3})}, Direction::top);
  CHECK(swap.f == std::vector<int>{0, 2, 3});

  ConcordanceCurve blocks = concordance_curve(
      {from_positions({1, 2, 3, 4}), from_positions({3, 4, 1, 2})},
      Direction::top);
  CHECK(blocks.f == std::vector<int>{0, 0, 2, 4});
  CHECK(blocks.at_k(3) == 2);
  CHECK(blocks.mean_through(4) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK_THROWS_AS(blocks.mean_through(0), ConfigError);
  CHECK_THROWS_AS(blocks.mean_through(5), ConfigError);

  CHECK_THROWS_AS(concordance_curve({}, Direction::top), ConfigError);
  CHECK_THROWS_AS(
      concordance_curve({id3, from_positions({1, 2})}, Direction::top),
      ConfigError);
}

TEST_CASE("concordance curve matches the reference and its invariants") {
  std::mt19937 gen(3);
  for (int t = 0; t < 40; ++t) {
    int m = 2 + static_cast<int>(gen() % 20);
    int count = 1 + static_cast<int>(gen() % 4);
    std::vector<Ranking> rankings;
    for (int i = 0; i < count; ++i) rankings.push_back(random_ranking(gen, m));
    auto table = position_table(rankings);
    for (Direction dir : {Direction::top, Direction::bottom}) {
      ConcordanceCurve c = concordance_curve(rankings, dir);
      REQUIRE(c.f.size() == static_cast<std::size_t>(m));
      int prev = 0;
      for (int k = 1; k <= m; ++k) {
        CHECK(c.f[k - 1] ==
              refimpl::concordance_at_k(table, k, dir == Direction::top));
        CHECK(c.f[k - 1] >= prev);
        CHECK(c.f[k - 1] <= k);
        prev = c.f[k - 1];
      }
      CHECK(c.f[m - 1] == m);
    }
  }
}

TEST_CASE("pairwise overlap: hand examples and brute force") {
  Ranking a = from_positions({1, 2, 3, 4});
  PairwiseOverlap same = mean_pairwise_overlap({a, a}, 2, Direction::top);
  REQUIRE(same.rows.size() == 1);
  CHECK(same.rows[0].overlap == 2);
  CHECK(same.mean == 2.0);

  Ranking b = from_positions({3, 4, 1, 2});
  PairwiseOverlap disjoint = mean_pairwise_overlap({a, b}, 2, Direction::top);
  CHECK(disjoint.mean == 0.0);

  // Third ranking shares its top pair with neither: mean = (2+0+0)/3.
  PairwiseOverlap three = mean_pairwise_overlap({a, a, b}, 2, Direction::top);
  REQUIRE(three.rows.size() == 3);
  CHECK(three.mean == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(mean_pairwise_overlap({a}, 2, Direction::top), ConfigError);
  CHECK_THROWS_AS(mean_pairwise_overlap({a, b}, 0, Direction::top),
                  ConfigError);
  CHECK_THROWS_AS(mean_pairwise_overlap({a, b}, 5, Direction::top),
                  ConfigError);

  std::mt19937 gen(5);
  for (int t = 0; t < 30; ++t) {
    int m = 3 + static_cast<int>(gen() % 12);
    std::vector<Ranking> rankings;
    for (int i = 0; i < 3; ++i) rankings.push_back(random_ranking(gen, m));
    int k = 1 + static_cast<int>(gen() % m);
    for (Direction dir : {Direction::top, Direction::bottom}) {
      PairwiseOverlap po = mean_pairwise_overlap(rankings, k, dir);
      double total = 0.0;
      std::size_t idx = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j, ++idx) {
          auto ti = top_k(rankings[i], k, dir);
          auto tj = top_k(rankings[j], k, dir);
          std::vector<int> inter;
          std::set_intersection(ti.begin(), ti.end(), tj.begin(), tj.end(),
                                std::back_inserter(inter));
          REQUIRE(idx < po.rows.size());
          CHECK(po.rows[idx].a == i);
          CHECK(po.rows[idx].b == j);
          CHECK(po.rows[idx].overlap == static_cast<int>(inter.size()));
          total += inter.size();
        }
      CHECK(po.mean == doctest::Approx(total / 3.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("aggregation: median and rank product hand examples") {
  Ranking r1 = from_positions({1, 2, 3});
  CHECK(aggregate_rankings({r1}, AggregationMethod::median).positions ==
        r1.positions);

  // Per-gene positions across three rankings:
  //   g0: 1,1,3 (median 1), g1: 2,3,1 (median 2), g2: 3,2,2 (median 2).
  // The g1/g2 tie resolves to the smaller index.
  std::vector<Ranking> rs = {from_positions({1, 2, 3}),
                             from_positions({1, 3, 2}),
                             from_positions({3, 1, 2})};
  CHECK(aggregate_rankings(rs, AggregationMethod::median).positions ==
        std::vector<int>{1, 2, 3});

  // Even count: medians are midpoints. g0: (1,3) -> 2, g1: (2,1) -> 1.5,
  // g2: (3,2) -> 2.5.
  std::vector<Ranking> even = {from_positions({1, 2, 3}),
                               from_positions({3, 1, 2})};
  CHECK(aggregate_rankings(even, AggregationMethod::median).positions ==
        std::vector<int>{2, 1, 3});

  // Rank product: log-position sums log4, log2, 2*log3, log8.
  std::vector<Ranking> rp = {from_positions({1, 2, 3, 4}),
                             from_positions({4, 1, 3, 2})};
  CHECK(aggregate_rankings(rp, AggregationMethod::rank_product).positions ==
        std::vector<int>{2, 1, 4, 3});

  CHECK_THROWS_AS(aggregate_rankings({}, AggregationMethod::median),
                  ConfigError);
  CHECK_THROWS_AS(
      aggregate_rankings({r1, from_positions({1, 2})},
                         AggregationMethod::median),
      ConfigError);
}

TEST_CASE("aggregating positions equals aggregating rankings") {
  std::mt19937 gen(7);
  for (int t = 0; t < 20; ++t) {
    int m = 3 + static_cast<int>(gen() % 10);
    int b = 1 + static_cast<int>(gen() % 5);
    std::vector<Ranking> rankings;
    PositionVectors pv(m, b);
    for (int r = 0; r < b; ++r) {
      Ranking rk = random_ranking(gen, m);
      rankings.push_back(rk);
      for (int g = 0; g < m; ++g) pv.set(g, r, rk.positions[g]);
    }
    for (AggregationMethod method :
         {AggregationMethod::median, AggregationMethod::rank_product}) {
      CHECK(aggregate_positions(pv, method).positions ==
            aggregate_rankings(rankings, method).positions);
    }
  }
}

TEST_CASE("method tags: names, the five-tag list and by_tag") {
  for (MethodTag t :
       {MethodTag::non_extended, MethodTag::extended,
        MethodTag::median_aggregated, MethodTag::rank_product,
        MethodTag::correlation_extended, MethodTag::random_baseline})
    CHECK(method_tag_from_string(to_string(t)) == t);
  CHECK_THROWS_AS(method_tag_from_string("sixth_method"), ConfigError);

  const auto& five = five_method_tags();
  CHECK(five.size() == 5);
  CHECK(std::find(five.begin(), five.end(), MethodTag::random_baseline) ==
        five.end());
}

TEST_CASE("five rankings of the first synthetic example") {
  LabeledDataset ds = synth_example(1, 42);
  ExperimentConfig cfg = small_config(11);
  RankingSet set = run_five_rankings(ds, cfg);

  for (MethodTag t : five_method_tags()) {
    const Ranking& r = set.by_tag(t);
    CHECK(r.size() == 50);
    CHECK_NOTHROW(validate_ranking(r));
  }
  CHECK(&set.by_tag(MethodTag::extended) == &set.extended);
  CHECK_THROWS_AS(set.by_tag(MethodTag::random_baseline), ConfigError);

  // The shifted block (genes 0..9) dominates the plain ranking's top 10.
  auto top = top_k(set.non_extended, 10, Direction::top);
  int block = 0;
  for (int g : top) block += (g < 10) ? 1 : 0;
  CHECK(block >= 8);
}

TEST_CASE("an empty exchangeability matrix reduces extension to the plain "
          "ranking") {
  LabeledDataset ds = synth_example(1, 7);
  ExperimentConfig cfg = small_config(13);
  cfg.sparsity_threshold = 1.0;  // keeps only exact-1 scores: none in noise
  RankingSet set = run_five_rankings(ds, cfg);
  CHECK(set.extended.positions == set.non_extended.positions);
}

TEST_CASE("bootstrap rankings: shape, determinism, label permutation") {
  LabeledDataset ds = synth_example(1, 3);
  ExperimentConfig cfg = small_config(17);
  auto plain = bootstrap_rankings(ds, cfg);
  CHECK(plain.size() == 5);
  for (MethodTag t : five_method_tags()) {
    REQUIRE(plain.count(t) == 1);
    CHECK(plain.at(t).size() == static_cast<std::size_t>(cfg.b_boot));
    for (const Ranking& r : plain.at(t)) CHECK_NOTHROW(validate_ranking(r));
  }

  auto again = bootstrap_rankings(ds, cfg);
  for (MethodTag t : five_method_tags())
    for (int r = 0; r < cfg.b_boot; ++r)
      CHECK(again.at(t)[r].positions == plain.at(t)[r].positions);

  auto null = bootstrap_rankings(ds, cfg, true);
  bool any_difference = false;
  for (int r = 0; r < cfg.b_boot; ++r)
    if (null.at(MethodTag::non_extended)[r].positions !=
        plain.at(MethodTag::non_extended)[r].positions)
      any_difference = true;
  CHECK(any_difference);
}

TEST_CASE("extension raises bootstrap concordance on the block design") {
  // Seed-averaged top-k concordance across bootstrap replicates is higher
  // for extended rankings than for plain ones when the data carry a block
  // of co-ranked genes.
  double ext = 0.0, plain = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    LabeledDataset ds = synth_example(1, seed);
    ExperimentConfig cfg;
    cfg.aggregation_rounds = 20;
    cfg.null_repeats = 50;
    cfg.seed = seed;
    auto boots = bootstrap_rankings(ds, cfg);
    ext += concordance_curve(boots.at(MethodTag::extended), Direction::top)
               .mean_through(25);
    plain +=
        concordance_curve(boots.at(MethodTag::non_extended), Direction::top)
            .mean_through(25);
  }
  CHECK(ext / 5.0 > plain / 5.0);
}

TEST_CASE("per-round label permutation removes bootstrap concordance") {
  // With every replicate's labels shuffled independently the rankings share
  // no signal, so the all-replicate top-10 intersection stays within the
  // chance bound for every method.
  const int bound = hypergeometric_upper_bound(50, 10, 10, 0.001);
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    LabeledDataset ds = synth_example(1, seed);
    ExperimentConfig cfg;
    cfg.aggregation_rounds = 20;
    cfg.null_repeats = 50;
    cfg.seed = seed;
    auto boots = bootstrap_rankings(ds, cfg, true);
    for (MethodTag t : five_method_tags())
      CHECK(concordance_curve(boots.at(t), Direction::top).at_k(10) <= bound);
  }
}

TEST_CASE("identical replicates give identical vectors and zero distance") {
  LabeledDataset ds = synth_example(1, 9);
  ExperimentConfig cfg = small_config(19);
  SimilarityMatrix v(50);
  v.set(0, 1, 0.5);
  StabilityVectors sv = replicate_list_vectors({ds, ds}, v, cfg);
  REQUIRE(sv.extended.size() == 2);
  REQUIRE(sv.plain.size() == 2);
  CHECK(sv.extended[0].values == sv.extended[1].values);
  CHECK(sv.plain[0].values == sv.plain[1].values);
  CHECK(cosine_dissimilarity(sv.extended[0], sv.extended[1]) == 0.0);
  CHECK(cosine_dissimilarity(sv.plain[0], sv.plain[1]) == 0.0);
}

TEST_CASE("distance stability rows and means") {
  LabeledDataset a = synth_example(1, 21);
  LabeledDataset b = synth_example(1, 22);
  ExperimentConfig cfg = small_config(23);
  DistanceStabilityResult res = distance_stability(a, b, cfg);

  const int nb = cfg.b_boot;
  int within_a = 0, within_b = 0, cross = 0;
  for (const auto& row : res.rows) {
    CHECK(row.distance >= 0.0);
    CHECK(row.distance <= 2.0);
    switch (row.comparison) {
      case ComparisonGroup::within_a: ++within_a; break;
      case ComparisonGroup::within_b: ++within_b; break;
      case ComparisonGroup::cross: ++cross; break;
    }
  }
  CHECK(within_a == nb * (nb - 1));  // extended + plain per unordered pair
  CHECK(within_b == nb * (nb - 1));
  CHECK(cross == 2 * nb * nb);

  for (ComparisonGroup g :
       {ComparisonGroup::within_a, ComparisonGroup::within_b,
        ComparisonGroup::cross}) {
    for (bool ext : {false, true}) {
      double m = res.mean(g, ext);
      CHECK(m >= 0.0);
      CHECK(m <= 2.0);
    }
    CHECK(!to_string(g).empty());
  }

  ExperimentConfig single = cfg;
  single.b_boot = 1;
  DistanceStabilityResult one = distance_stability(a, b, single);
  CHECK_THROWS_AS(one.mean(ComparisonGroup::within_a, true), ConfigError);
  CHECK_NOTHROW(one.mean(ComparisonGroup::cross, true));
}

TEST_CASE("centroid scores: sign, symmetry and shift invariance") {
  // Only gene 0 is scored; gene 1 exists to satisfy the universe minimum.
  auto u = std::make_shared<Universe>(std::vector<std::string>{"g1", "g2"});
  LabeledDataset train(u, {0.0, 2.0, 4.0, 6.0, 1.0, 1.0, 1.0, 1.0},
                       {0, 0, 1, 1}, {"A", "B"});

  LabeledDataset test(u, {0.0, 3.0, 6.0, 3.0, 1.0, 1.0, 1.0, 1.0},
                      {0, 0, 1, 1}, {"A", "B"});
  std::vector<double> s = centroid_scores(train, test, {0}, "A");
  REQUIRE(s.size() == 4);
  CHECK(s[0] > 0.0);               // close to the A centroid
  CHECK(s[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(s[2] < 0.0);
  CHECK(s[3] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  // Swapping the positive class flips the sign.
  std::vector<double> flipped = centroid_scores(train, test, {0}, "B");
  for (int i = 0; i < 4; ++i)
    CHECK(flipped[i] == doctest::Approx(-s[i]).epsilon(1e-12));

  LabeledDataset train_shift(u, {10.0, 12.0, 14.0, 16.0, 1.0, 1.0, 1.0, 1.0},
                             {0, 0, 1, 1}, {"A", "B"});
  LabeledDataset test_shift(u, {10.0, 13.0, 16.0, 13.0, 1.0, 1.0, 1.0, 1.0},
                            {0, 0, 1, 1}, {"A", "B"});
  std::vector<double> s2 = centroid_scores(train_shift, test_shift, {0}, "A");
  for (int i = 0; i < 4; ++i)
    CHECK(s2[i] == doctest::Approx(s[i]).epsilon(1e-9));

  CHECK_THROWS_AS(centroid_scores(train, test, {}, "A"), ConfigError);
  CHECK_THROWS_AS(centroid_scores(train, test, {0}, "C"), DataError);
}

TEST_CASE("auc: hand values and reference equivalence") {
  CHECK(auc({3.0, 2.0, 1.0, 0.0}, {1, 1, 0, 0}, 1) == 1.0);
  CHECK(auc({1.0, 1.0, 1.0, 1.0}, {1, 1, 0, 0}, 1) == 0.5);
  CHECK(auc({2.0, 0.0, 1.0}, {1, 1, 0}, 1) == 0.5);
  CHECK(auc({1.0, 1.0}, {1, 0}, 1) == 0.5);

  std::mt19937 gen(27);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    int n = 4 + static_cast<int>(gen() % 12);
    std::vector<double> scores(n);
    std::vector<int> groups(n);
    for (int i = 0; i < n; ++i) {
      scores[i] = (gen() % 3 == 0) ? 0.5 : unif(gen);  // force some ties
      groups[i] = static_cast<int>(gen() % 2);
    }
    groups[0] = 0;
    groups[1] = 1;
    CHECK(auc(scores, groups, 1) ==
          doctest::Approx(refimpl::auc_direct(scores, groups, 1))
              .epsilon(1e-12));
  }

  CHECK_THROWS_AS(auc({1.0, 2.0}, {0, 1, 1}, 1), ConfigError);
  CHECK_THROWS_AS(auc({1.0, 2.0}, {0, 0}, 1), DataError);
}

TEST_CASE("cross-validated auc finds a perfectly separating gene") {
  // gene 0 separates the classes exactly; the rest is symmetric noise.
  const int m = 6, n = 12;
  std::vector<std::string> ids;
  for (int i = 0; i < m; ++i) ids.push_back("g" + std::to_string(i + 1));
  auto u = std::make_shared<Universe>(ids);
  std::mt19937 gen(33);
  std::normal_distribution<double> noise(0.0, 0.5);
  std::vector<double> values(static_cast<std::size_t>(m) * n);
  std::vector<int> groups(n);
  for (int s = 0; s < n; ++s) groups[s] = s < n / 2 ? 0 : 1;
  for (int g = 0; g < m; ++g)
    for (int s = 0; s < n; ++s) {
      double x = noise(gen);
      if (g == 0) x = (groups[s] == 0) ? 5.0 + 0.1 * s : -5.0 - 0.1 * s;
      values[static_cast<std::size_t>(g) * n + s] = x;
    }
  LabeledDataset ds(u, values, groups, {"A", "B"});

  ExperimentConfig cfg = small_config(35);
  double v = cross_validated_auc(ds, MethodTag::non_extended, 1, 3, cfg);
  CHECK(v == 1.0);
  CHECK(cross_validated_auc(ds, MethodTag::non_extended, 1, 3, cfg) == v);

  auto all = cross_validated_auc_all(ds, 1, 3, cfg);
  CHECK(all.size() == 6);
  REQUIRE(all.count(MethodTag::random_baseline) == 1);
  for (const auto& [tag, value] : all) {
    CHECK(value >= 0.0);
    CHECK(value <= 1.0);
  }
  CHECK(all.at(MethodTag::non_extended) == 1.0);

  CHECK_THROWS_AS(cross_validated_auc(ds, MethodTag::non_extended, 1, 1, cfg),
                  ConfigError);
  CHECK_THROWS_AS(cross_validated_auc(ds, MethodTag::non_extended, 4, 3, cfg),
                  ConfigError);
  CHECK_THROWS_AS(cross_validated_auc(ds, MethodTag::non_extended, 0, 3, cfg),
                  ConfigError);
}

TEST_CASE("synthetic examples: shapes, blocks and determinism") {
  LabeledDataset one = synth_example(1, 5);
  CHECK(one.gene_count() == 50);
  CHECK(one.sample_count() == 40);
  CHECK(one.group_size(0) == 20);
  CHECK(one.group_size(1) == 20);
  CHECK(one.class_names() == std::array<std::string, 2>{"A", "B"});
  CHECK(one.universe().id(0) == "g1");
  CHECK(one.universe().id(49) == "g50");

  // Block genes are shifted +1 in class A; everything else is centered noise.
  double block_a = 0.0, block_b = 0.0, rest = 0.0;
  for (int g = 0; g < 10; ++g)
    for (int s = 0; s < 40; ++s)
      (s < 20 ? block_a : block_b) += one.at(g, s);
  block_a /= 200.0;
  block_b /= 200.0;
  for (int g = 10; g < 50; ++g)
    for (int s = 0; s < 40; ++s) rest += one.at(g, s);
  rest /= 1600.0;
  CHECK(std::abs(block_a - 1.0) < 4.0 / std::sqrt(200.0));
  CHECK(std::abs(block_b) < 4.0 / std::sqrt(200.0));
  CHECK(std::abs(rest) < 4.0 / std::sqrt(1600.0));

  LabeledDataset same = synth_example(1, 5);
  CHECK(same.row(7)[3] == one.at(7, 3));
  LabeledDataset other = synth_example(1, 6);
  bool differs = false;
  for (int s = 0; s < 40 && !differs; ++s)
    differs = other.at(0, s) != one.at(0, s);
  CHECK(differs);

  LabeledDataset two = synth_example(2, 5);
  CHECK(two.gene_count() == 75);
  CHECK(two.sample_count() == 60);
  CHECK(two.group_size(0) == 30);
  double blk1 = 0.0, blk2 = 0.0;
  for (int g = 0; g < 8; ++g)
    for (int s = 0; s < 15; ++s) blk1 += two.at(g, s);
  for (int g = 8; g < 16; ++g)
    for (int s = 15; s < 30; ++s) blk2 += two.at(g, s);
  blk1 /= 120.0;
  blk2 /= 120.0;
  CHECK(std::abs(blk1 - 2.0) < 4.0 / std::sqrt(120.0));
  CHECK(std::abs(blk2 - 2.0) < 4.0 / std::sqrt(120.0));

  CHECK_THROWS_AS(synth_example(3, 5), ConfigError);
  CHECK_THROWS_AS(synth_example(0, 5), ConfigError);
}
