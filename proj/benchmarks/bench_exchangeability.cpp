// Microbenchmarks for the hot paths: per-pair measure estimation, the
// all-pairs exchangeability matrix, position-vector construction and the
// list-vector extension step.
#include <benchmark/benchmark.h>

#include <cstdint>

#include "exchlist/dataset.hpp"
#include "exchlist/evaluation.hpp"
#include "exchlist/exchangeability.hpp"
#include "exchlist/kde.hpp"
#include "exchlist/list_framework.hpp"
#include "exchlist/pair_samples.hpp"
#include "exchlist/ranking.hpp"
#include "exchlist/ranking_stats.hpp"

namespace {

using namespace exchlist;

const LabeledDataset& dataset() {
  static const LabeledDataset ds = synth_example(1, 17);
  return ds;
}

PositionVectors position_vectors(int rounds) {
  PositionVectorOptions opt;
  opt.rounds = rounds;
  opt.seed = 3;
  return build_position_vectors(dataset(), opt);
}

void bm_estimate_pair(benchmark::State& state, PairMeasure measure) {
  static const PositionVectors pv = position_vectors(20);
  const PairSamples ps = PairSamples::from_position_vectors(pv, 0, 1);
  const Metric metric{};
  for (auto _ : state) {
    double v = measure == PairMeasure::pvar
                   ? estimate_pvar(ps)
                   : estimate_pair(ps, measure, metric);
    benchmark::DoNotOptimize(v);
  }
}

void bm_matrix(benchmark::State& state) {
  const PositionVectors pv = position_vectors(static_cast<int>(state.range(0)));
  ExchangeabilityOptions opt;
  opt.null_config = {20, 5};
  for (auto _ : state) {
    ExchangeabilityMatrix m = exchangeability_matrix(pv, opt);
    benchmark::DoNotOptimize(m.scores);
  }
  state.SetComplexityN(dataset().gene_count());
}

void bm_position_vectors(benchmark::State& state) {
  for (auto _ : state) {
    PositionVectors pv = position_vectors(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(pv.rounds());
  }
}

void bm_extend(benchmark::State& state) {
  const LabeledDataset& ds = dataset();
  ExchangeabilityOptions opt;
  opt.null_config = {20, 5};
  const SimilarityMatrix v = exchangeability_matrix(position_vectors(20), opt).scores;
  const Ranking base = make_ranking(rank_scores(ds, RankStat::snr, ""));
  const PositionMatrix a = position_matrix_rank_based(base, 350.0);
  const WeightMatrix w = WeightMatrix::identity(ds.gene_count());
  for (auto _ : state) {
    ListVector lv = list_vector(a, v, w, Summarizer::max_magnitude);
    benchmark::DoNotOptimize(lv.values);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_estimate_pair, ed_max, PairMeasure::ed_max);
BENCHMARK_CAPTURE(bm_estimate_pair, ed_mean, PairMeasure::ed_mean);
BENCHMARK_CAPTURE(bm_estimate_pair, oed_max, PairMeasure::oed_max);
BENCHMARK_CAPTURE(bm_estimate_pair, oed_mean, PairMeasure::oed_mean);
BENCHMARK_CAPTURE(bm_estimate_pair, pvar, PairMeasure::pvar);
BENCHMARK(bm_matrix)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_position_vectors)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_extend);

BENCHMARK_MAIN();
