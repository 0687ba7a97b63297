#ifndef EXCHLIST_EXCHANGEABILITY_HPP
#define EXCHLIST_EXCHANGEABILITY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exchlist/kde.hpp"
#include "exchlist/metric.hpp"
#include "exchlist/pair_samples.hpp"
#include "exchlist/similarity.hpp"

namespace exchlist {

/// Distance-based estimators of how far a pair of position vectors is from
/// being exchangeable. ed_* compare the forward sample against the reflected
/// support as a whole; oed_* additionally restrict each comparison to the
/// side of the diagonal the forward point lies on (its sign region), which
/// makes order reversals maximally non-exchangeable. pvar is the KDE
/// total-variation estimate.
enum class PairMeasure { ed_max, ed_mean, oed_max, oed_mean, pvar };

PairMeasure pair_measure_from_string(const std::string& s);
std::string to_string(PairMeasure m);

/// Distance from point p to the nearest point of a non-empty set.
double set_distance(Point2 p, const std::vector<Point2>& pts,
                    const Metric& metric);

/// Hausdorff distance between two non-empty point sets.
double hausdorff_distance(const std::vector<Point2>& a,
                          const std::vector<Point2>& b, const Metric& metric);

/// Estimates one measure on one pair sample; results are in [0, 1] and 0 for
/// an exchangeable pair. One-sided measures need grid_m >= 3 and return 1
/// whenever some sign-region restriction of the reflected set is empty.
/// For PairMeasure::pvar use estimate_pvar (this overload rejects it).
double estimate_pair(const PairSamples& ps, PairMeasure measure,
                     const Metric& metric);

// ---------------------------------------------------------------------------
// Exact reference measures on explicit finite joint distributions.

/// epvar is total exchangeability variation; eed_max / eed_mean the
/// Hausdorff / mean-distance analogues on permuted supports.
enum class ExactMeasure { epvar, eed_max, eed_mean };

/// Explicit pmf of an m-tuple of rank variables on {1..M}^m, m <= 5.
/// Probabilities are non-negative and sum to 1 within 1e-12.
class DiscreteJointDistribution {
 public:
  DiscreteJointDistribution(int arity, int grid_m,
                            std::map<std::vector<int>, double> pmf);

  int arity() const { return arity_; }
  int grid_m() const { return grid_m_; }
  const std::map<std::vector<int>, double>& pmf() const { return pmf_; }

 private:
  int arity_;
  int grid_m_;
  std::map<std::vector<int>, double> pmf_;
};

/// Exact measure value by enumerating all coordinate permutations. Zero iff
/// the distribution is exchangeable (epvar) or its support is permutation
/// invariant (eed_*). Values are normalized to [0, 1].
double exact_measure(const DiscreteJointDistribution& dist, ExactMeasure which,
                     const Metric& metric);

// ---------------------------------------------------------------------------
// Null reference and normalized scores.

struct NullConfig {
  int repeats = 100;
  std::uint64_t seed = 0;
};

/// Mean exchangeability score (1 - measure) of `repeats` samples of B points
/// drawn uniformly from the {1..M}^2 grid. This is the expected score of an
/// unrelated pair; cached, deterministic given the seed.
double null_score(int grid_m, int rounds_b, PairMeasure measure,
                  const Metric& metric, const NullConfig& null_cfg,
                  const KdeConfig& kde = {});

/// Rescales a raw score s against the uniform null s0:
/// max((s - s0) / (1 - s0), 0). s0 must be < 1.
double normalize_score(double score, double null);

// ---------------------------------------------------------------------------
// All-pairs matrix.

struct ExchangeabilityOptions {
  PairMeasure measure = PairMeasure::oed_mean;
  Metric metric{};
  NullConfig null_config{};
  KdeConfig kde{};
  /// Entries below this are dropped from storage (treated as 0).
  double sparsity_threshold = 0.0;
  int workers = 1;
};

struct ExchangeabilityMeta {
  int rounds_b = 0;
  PairMeasure measure = PairMeasure::oed_mean;
  MetricKind metric = MetricKind::euclidean;
  std::uint64_t seed = 0;
  double sparsity_threshold = 0.0;
};

/// Symmetric matrix of normalized exchangeability scores in [0, 1] with unit
/// diagonal. Sparse: zeros and sub-threshold entries are not stored.
struct ExchangeabilityMatrix {
  SimilarityMatrix scores;
  ExchangeabilityMeta meta;
};

/// Normalized exchangeability score for every gene pair i < j of the position
/// matrix. The null is computed once from the options' seed. Bit-identical
/// for any worker count.
ExchangeabilityMatrix exchangeability_matrix(const PositionVectors& pv,
                                             const ExchangeabilityOptions& opt);

}  // namespace exchlist

#endif
