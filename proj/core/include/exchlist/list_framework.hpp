#ifndef EXCHLIST_LIST_FRAMEWORK_HPP
#define EXCHLIST_LIST_FRAMEWORK_HPP

#include <string>
#include <vector>

#include "exchlist/dataset.hpp"
#include "exchlist/gene_list.hpp"
#include "exchlist/ranking.hpp"
#include "exchlist/similarity.hpp"

namespace exchlist {

// A list is represented through the product G = A * V * W of an M x M
// diagonal position matrix A, a symmetric relatedness matrix V and a diagonal
// weight matrix W. The list vector summarizes each column of G; comparisons
// act on list vectors. G itself is never materialized.

enum class PositionProvenance { rank_based, indicator, score, custom };

/// Diagonal of A plus how it was built.
struct PositionMatrix {
  std::vector<double> diag;
  PositionProvenance provenance = PositionProvenance::custom;
  double b_squared = 0.0;  // rank_based only

  int size() const { return static_cast<int>(diag.size()); }
};

/// Smooth signed position weight: b^2/((pos-1)^2+b^2) for genes whose score
/// is >= 0 and -b^2/((M-pos)^2+b^2) for the rest, so top genes approach +1,
/// bottom genes approach -1 and the middle fades toward 0. Needs scores.
PositionMatrix position_matrix_rank_based(const Ranking& r, double b_squared);

/// 0/1 membership diagonal.
PositionMatrix position_matrix_indicator(const GeneList& list);

/// Arbitrary diagonal (classic-method constructions).
PositionMatrix position_matrix_custom(std::vector<double> diag,
                                      PositionProvenance provenance =
                                          PositionProvenance::custom);

/// Diagonal of W.
struct WeightMatrix {
  std::vector<double> diag;

  int size() const { return static_cast<int>(diag.size()); }
  static WeightMatrix identity(int m);
};

/// Inverse document frequency weights from reference lists:
/// w_i = ln((K+1)/(K_i+1)) where K is the number of reference lists and K_i
/// the number containing gene i.
WeightMatrix idf_weights(const std::vector<GeneList>& reference_lists, int m);

/// Positive part of the gene-gene Pearson correlation matrix; entries below
/// `threshold` are dropped. Genes with zero variance correlate with nothing.
SimilarityMatrix correlation_v_matrix(const LabeledDataset& ds,
                                      double threshold = 0.0, int workers = 1);

enum class Summarizer { max_magnitude, sup_norm, sum, min_abs_nonzero };

Summarizer summarizer_from_string(const std::string& s);
std::string to_string(Summarizer s);

struct ListVector {
  std::vector<double> values;
  Summarizer summarizer = Summarizer::max_magnitude;

  int size() const { return static_cast<int>(values.size()); }
};

/// l_j = h(column j of A*V*W), streaming over the sparse columns of V.
/// max_magnitude: signed entry of largest magnitude (ties: smallest row
/// index); sup_norm: largest magnitude; sum: column sum; min_abs_nonzero:
/// smallest nonzero magnitude (0 for an all-zero column).
ListVector list_vector(const PositionMatrix& a, const SimilarityView& v,
                       const WeightMatrix& w, Summarizer h);

/// Cosine similarity u.v/(|u||v|); rejects zero vectors.
double cosine_similarity(const ListVector& u, const ListVector& v);
/// 1 - cosine_similarity.
double cosine_dissimilarity(const ListVector& u, const ListVector& v);

struct Contribution {
  int gene;
  double value;     // u_i * v_i, the gene's share of the inner product
  int position_u;   // 1-based positions when source rankings are given
  int position_v;
};

/// Per-gene contributions to u.v, sorted by decreasing value (ties: universe
/// index). Optional rankings attach each gene's positions.
std::vector<Contribution> contributions(const ListVector& u,
                                        const ListVector& v,
                                        const Ranking* ranking_u = nullptr,
                                        const Ranking* ranking_v = nullptr);

/// Ranking of the list-vector values (descending, ties by universe index).
Ranking extended_ranking(const ListVector& l);

}  // namespace exchlist

#endif
