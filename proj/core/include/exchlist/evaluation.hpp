#ifndef EXCHLIST_EVALUATION_HPP
#define EXCHLIST_EVALUATION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exchlist/dataset.hpp"
#include "exchlist/exchangeability.hpp"
#include "exchlist/list_framework.hpp"
#include "exchlist/ranking.hpp"
#include "exchlist/ranking_stats.hpp"

namespace exchlist {

/// The ranking variants whose stability the harness compares.
enum class MethodTag {
  non_extended,
  extended,
  median_aggregated,
  rank_product,
  correlation_extended,
  random_baseline
};

MethodTag method_tag_from_string(const std::string& s);
std::string to_string(MethodTag t);

/// All five data-driven tags (random_baseline excluded).
const std::vector<MethodTag>& five_method_tags();

struct ExperimentConfig {
  int b_boot = 10;             // bootstrap replicates of the dataset
  int b_sub = 20;              // subsample rounds behind the matrix
  int aggregation_rounds = 100;
  double fraction = 2.0 / 3.0;
  double b_squared = 350.0;
  RankStat stat = RankStat::snr;
  std::string positive_class;  // empty: first class
  PairMeasure measure = PairMeasure::oed_mean;
  Metric metric{};
  int null_repeats = 100;
  double sparsity_threshold = 0.0;
  KdeConfig kde{};
  std::uint64_t seed = 0;
  int workers = 1;
};

/// The five rankings of one dataset.
struct RankingSet {
  Ranking non_extended;
  Ranking extended;
  Ranking median_aggregated;
  Ranking rank_product;
  Ranking correlation_extended;

  const Ranking& by_tag(MethodTag t) const;
};

/// Ranks ds five ways: plain statistic; exchangeability-extended (rank-based
/// position weights against the subsample exchangeability matrix); median and
/// rank-product aggregation over subsample rankings; correlation-extended
/// (positive-part correlation as the relatedness matrix).
RankingSet run_five_rankings(const LabeledDataset& ds,
                             const ExperimentConfig& cfg);

/// Same five rankings, but extending against caller-supplied exchangeability
/// and correlation matrices instead of matrices derived from ds itself. Used
/// when many related datasets (e.g. bootstrap replicates) share the matrices
/// of a common parent.
RankingSet run_five_rankings(const LabeledDataset& ds,
                             const ExperimentConfig& cfg,
                             const SimilarityView& exchangeability,
                             const SimilarityView& correlation);

// ---------------------------------------------------------------------------
// Concordance and overlap across rankings.

/// f[k-1] = number of genes inside the top-k (or bottom-k) of every ranking,
/// k = 1..M. Monotone non-decreasing with f[M-1] = M.
struct ConcordanceCurve {
  std::vector<int> f;

  int at_k(int k) const { return f.at(k - 1); }
  /// Mean of f over k = 1..k_max.
  double mean_through(int k_max) const;
};

ConcordanceCurve concordance_curve(const std::vector<Ranking>& rankings,
                                   Direction direction);

struct PairwiseOverlap {
  struct Row {
    int a;
    int b;
    int overlap;
  };
  std::vector<Row> rows;  // all pairs a < b
  double mean = 0.0;
};

/// Size of the top-k (or bottom-k) intersection for every pair of rankings.
PairwiseOverlap mean_pairwise_overlap(const std::vector<Ranking>& rankings,
                                      int k, Direction direction);

enum class AggregationMethod { median, rank_product };

/// One ranking from many: per-gene median position or sum of log positions,
/// re-ranked ascending (ties: universe index).
Ranking aggregate_rankings(const std::vector<Ranking>& rankings,
                           AggregationMethod method);
Ranking aggregate_positions(const PositionVectors& pv, AggregationMethod method);

/// Rankings of b_boot stratified bootstrap replicates under each method. The
/// exchangeability and correlation matrices are computed once from ds and
/// shared by every replicate; each replicate contributes only its own
/// statistic ranking, position matrix, and aggregation subsamples.
/// permute_labels_each_round additionally shuffles every replicate's labels
/// (the null experiment).
std::map<MethodTag, std::vector<Ranking>> bootstrap_rankings(
    const LabeledDataset& ds, const ExperimentConfig& cfg,
    bool permute_labels_each_round = false);

// ---------------------------------------------------------------------------
// Distance stability of list vectors across replicates.

enum class ComparisonGroup { within_a, within_b, cross };

std::string to_string(ComparisonGroup g);

struct DistanceStabilityResult {
  struct Row {
    ComparisonGroup comparison;
    bool extended;
    double distance;
  };
  std::vector<Row> rows;

  double mean(ComparisonGroup g, bool extended) const;
};

/// Extended and plain list vectors of each replicate against the replicate
/// source's own exchangeability matrix.
struct StabilityVectors {
  std::vector<ListVector> extended;
  std::vector<ListVector> plain;
};

StabilityVectors replicate_list_vectors(
    const std::vector<LabeledDataset>& replicates, const SimilarityView& v,
    const ExperimentConfig& cfg);

/// Cosine dissimilarities of extended and plain list vectors within and
/// across two datasets' bootstrap replicates. Universes must match.
DistanceStabilityResult distance_stability(const LabeledDataset& ds_a,
                                           const LabeledDataset& ds_b,
                                           const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Nearest-centroid classification.

/// Scores each test sample by ||x - c_neg||^2 - ||x - c_pos||^2 over the
/// given genes, after standardizing every gene by its training mean and sd
/// (sd floored at 1e-12). Centroids are class means of the standardized
/// training samples. Higher = more positive-class.
std::vector<double> centroid_scores(const LabeledDataset& train,
                                    const LabeledDataset& test,
                                    const std::vector<int>& genes,
                                    const std::string& positive_class);

/// Mann-Whitney AUC: P(score_pos > score_neg) + 0.5 P(equal). Needs both
/// classes present.
double auc(const std::vector<double>& scores, const std::vector<int>& groups,
           int positive_group);

/// Mean AUC of a nearest-centroid classifier on the top-k plus bottom-k genes
/// of the tag's ranking, over stratified folds (train-side ranking only).
double cross_validated_auc(const LabeledDataset& ds, MethodTag tag, int k,
                           int folds, const ExperimentConfig& cfg);
std::map<MethodTag, double> cross_validated_auc_all(const LabeledDataset& ds,
                                                    int k, int folds,
                                                    const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Synthetic data.

/// Two-class Gaussian block designs used throughout the tests:
/// example 1: 50 x 40, rows 1-10 shifted +1 in the first 20 samples;
/// example 2: 75 x 60, rows 1-8 shifted +2 in samples 1-15 and rows 9-16
/// shifted +2 in samples 16-30. Class A = first half, B = second half.
LabeledDataset synth_example(int which, std::uint64_t seed);

}  // namespace exchlist

#endif
