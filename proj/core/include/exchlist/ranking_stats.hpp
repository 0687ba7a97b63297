#ifndef EXCHLIST_RANKING_STATS_HPP
#define EXCHLIST_RANKING_STATS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "exchlist/dataset.hpp"
#include "exchlist/ranking.hpp"

namespace exchlist {

enum class RankStat { snr, welch };

RankStat rank_stat_from_string(const std::string& s);
std::string to_string(RankStat s);

/// Per-gene signal-to-noise ratio (mean_pos - mean_neg) / (sd_pos + sd_neg),
/// sample standard deviations, denominator floored at 1e-12. positive_class
/// names the "good outcome" class.
std::vector<double> snr_scores(const LabeledDataset& ds,
                               const std::string& positive_class);

/// Per-gene Welch t statistic, denominator floored at 1e-12.
std::vector<double> welch_t_scores(const LabeledDataset& ds,
                                   const std::string& positive_class);

std::vector<double> rank_scores(const LabeledDataset& ds, RankStat stat,
                                const std::string& positive_class);

enum class ResampleMode { subsample, bootstrap };

/// Stratified resampling of samples within each class. subsample draws
/// floor(fraction*n_g) of each group (at least 2) without replacement;
/// bootstrap draws n_g with replacement. Deterministic given seed.
LabeledDataset stratified_resample(const LabeledDataset& ds, ResampleMode mode,
                                   double fraction, std::uint64_t seed);

/// Uniformly random permutation of the group labels.
std::vector<int> permute_labels(const std::vector<int>& groups,
                                std::uint64_t seed);

/// The M x B position matrix S: column k holds the positions of all genes in
/// the k-th resampled ranking. Row i (S_i) is gene i's positions across
/// rounds.
class PositionVectors {
 public:
  PositionVectors(int gene_count, int rounds);

  int gene_count() const { return m_; }
  int rounds() const { return b_; }

  int at(int gene, int round) const { return s_[idx(gene, round)]; }
  void set(int gene, int round, int pos) { s_[idx(gene, round)] = pos; }
  std::span<const int> row(int gene) const {
    return {s_.data() + static_cast<std::size_t>(gene) * b_,
            static_cast<std::size_t>(b_)};
  }

  /// Throws DataError unless every column is a permutation of 1..M.
  void validate() const;

 private:
  std::size_t idx(int gene, int round) const {
    return static_cast<std::size_t>(gene) * b_ + round;
  }
  int m_;
  int b_;
  std::vector<int> s_;
};

struct PositionVectorOptions {
  RankStat stat = RankStat::snr;
  std::string positive_class;  // empty: first class of the dataset
  int rounds = 20;             // B
  double fraction = 2.0 / 3.0;
  std::uint64_t seed = 0;
  bool permute_each_round = false;  // permute labels of every resample (null)
  int workers = 1;
};

/// Builds position vectors by ranking `rounds` stratified subsamples of ds.
/// Round k uses sub-stream k of the seed, so any worker count gives the same
/// matrix.
PositionVectors build_position_vectors(const LabeledDataset& ds,
                                       const PositionVectorOptions& opt);

}  // namespace exchlist

#endif
