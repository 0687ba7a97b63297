#ifndef EXCHLIST_CLASSIC_METHODS_HPP
#define EXCHLIST_CLASSIC_METHODS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "exchlist/dataset.hpp"
#include "exchlist/gene_list.hpp"
#include "exchlist/ranking.hpp"
#include "exchlist/ranking_stats.hpp"
#include "exchlist/similarity.hpp"

namespace exchlist {

// Established list-comparison measures, each expressed through the A*V*W
// list-vector framework (see list_framework.hpp). Tests check them against
// independent direct-formula implementations.

/// |a n b| / sqrt(|a| |b|) via cosine of the indicator vectors.
double overlap_cosine(const GeneList& a, const GeneList& b);

/// Fraction of l1 genes that are in l2 or correlated with an l2 member:
/// (k + O_r) / |l1|. `correlated` is a symmetric 0/1 relatedness matrix.
/// Asymmetric in (l1, l2).
double pogr(const GeneList& l1, const GeneList& l2,
            const SimilarityMatrix& correlated);

/// Upper-tail hypergeometric probability of seeing an overlap of at least
/// k_observed between draws of n1 and n2 from m genes.
double hypergeometric_pvalue(int m, int n1, int n2, int k_observed);
/// Same, with the overlap computed from the two lists' indicator vectors.
double hypergeometric_pvalue(const GeneList& a, const GeneList& b);

/// Smallest t such that P(overlap > t) < tail for draws of k1 and k2 from m.
int hypergeometric_upper_bound(int m, int k1, int k2, double tail);

struct GseaPermutations {
  int count = 0;
  std::uint64_t seed = 0;
  const LabeledDataset* dataset = nullptr;  // labels to permute
  RankStat stat = RankStat::snr;
  std::string positive_class;
  int workers = 1;
};

struct GseaResult {
  double es = 0.0;
  double p_value = -1.0;  // set when permutations are requested
  std::vector<double> running_sum;
};

/// Weighted Kolmogorov-Smirnov style enrichment of `set` in the ranking:
/// walking the ranking, members add |r_i|^q / sum_set |r|^q, non-members
/// subtract 1/(M-K); the score is the signed largest excursion (ties: the
/// earliest step). The ranking must carry scores; 1 <= K < M. With
/// permutations, p is the fraction of label-permutation scores at least as
/// extreme as the observed one.
GseaResult gsea_enrichment(const Ranking& r, const GeneList& set, double q,
                           const GseaPermutations* perms = nullptr);

/// Rank-difference distance sum |a_i - b_i| / (a_i + b_i) over list values
/// (position within the list for members, K+1 for the rest). Modules are
/// disjoint gene groups whose internal order is neutralized by assigning each
/// module's values to its genes in universe order, in both lists.
double jurman_distance(const GeneList& a, const GeneList& b,
                       const std::vector<std::vector<int>>& modules = {});

/// L1 distance of reciprocal list values 1/position (1/(K+1) for
/// non-members).
double pearson_reciprocal_distance(const GeneList& a, const GeneList& b);

/// Exponentially down-weighted top-n overlaps of two full rankings, counted
/// from both ends: sum_n e^(-alpha n) (O_n(a,b) + O_n(rev a, rev b)).
double yang_base_similarity(const Ranking& a, const Ranking& b, double alpha);

/// max(beta * base(a, b), (1-beta) * base(a, reverse(b))): matches rankings
/// up to orientation. beta in [0, 1).
double yang_similarity(const Ranking& a, const Ranking& b, double alpha,
                       double beta);

}  // namespace exchlist

#endif
