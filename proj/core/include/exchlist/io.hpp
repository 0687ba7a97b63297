#ifndef EXCHLIST_IO_HPP
#define EXCHLIST_IO_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "exchlist/dataset.hpp"
#include "exchlist/evaluation.hpp"
#include "exchlist/exchangeability.hpp"
#include "exchlist/gene_list.hpp"
#include "exchlist/list_framework.hpp"
#include "exchlist/pair_samples.hpp"
#include "exchlist/ranking.hpp"
#include "exchlist/ranking_stats.hpp"
#include "exchlist/universe.hpp"

// Tab-separated formats, one header line, gene rows in universe order.
// Real values round-trip exactly (17 significant digits) except
// exchangeability scores, which are quantized to 6 fractional digits.
// Loaders report the offending line on failure.

namespace exchlist {

struct ExpressionData {
  std::shared_ptr<const Universe> universe;
  std::vector<double> values;  // row major, genes x samples
  std::vector<std::string> sample_ids;
};

/// gene\t<sample...> header; duplicate gene rows collapse to the per-sample
/// maximum.
ExpressionData load_expression(std::istream& in, const std::string& name);
ExpressionData load_expression_file(const std::string& path);

/// sample\tclass header; exactly two classes; every expression sample must be
/// labeled. Class 0 is the first class encountered in the file.
std::vector<std::pair<std::string, std::string>> load_labels(
    std::istream& in, const std::string& name);
std::vector<std::pair<std::string, std::string>> load_labels_file(
    const std::string& path);

LabeledDataset make_dataset(
    const ExpressionData& expr,
    const std::vector<std::pair<std::string, std::string>>& labels);
LabeledDataset load_dataset(const std::string& expression_path,
                            const std::string& labels_path);

/// Inverse of load_expression: gene\t<sample...> header, one full-precision
/// row per gene. Missing sample ids are written as s1..sN.
void save_expression(std::ostream& out, const LabeledDataset& ds);
void save_expression_file(const std::string& path, const LabeledDataset& ds);

/// Inverse of load_labels: sample\tclass rows in sample order.
void save_labels(std::ostream& out, const LabeledDataset& ds);
void save_labels_file(const std::string& path, const LabeledDataset& ds);

// --- rankings ---------------------------------------------------------------

void save_ranking(std::ostream& out, const Universe& u, const Ranking& r);
void save_ranking_file(const std::string& path, const Universe& u,
                       const Ranking& r);
std::pair<std::shared_ptr<const Universe>, Ranking> load_ranking(
    std::istream& in, const std::string& name);
std::pair<std::shared_ptr<const Universe>, Ranking> load_ranking_file(
    const std::string& path);

// --- position vectors --------------------------------------------------------

void save_position_vectors(std::ostream& out, const Universe& u,
                           const PositionVectors& pv);
void save_position_vectors_file(const std::string& path, const Universe& u,
                                const PositionVectors& pv);
std::pair<std::shared_ptr<const Universe>, PositionVectors>
load_position_vectors(std::istream& in, const std::string& name);
std::pair<std::shared_ptr<const Universe>, PositionVectors>
load_position_vectors_file(const std::string& path);

// --- exchangeability matrices -------------------------------------------------

/// `# M=.. B=.. measure=.. metric=.. seed=.. threshold=..` metadata line,
/// then gene_i\tgene_j\tscore rows (i < j, row major, 6 fractional digits;
/// entries that quantize to zero are not written).
void save_exchangeability_matrix(std::ostream& out, const Universe& u,
                                 const ExchangeabilityMatrix& m);
void save_exchangeability_matrix_file(const std::string& path,
                                      const Universe& u,
                                      const ExchangeabilityMatrix& m);
ExchangeabilityMatrix load_exchangeability_matrix(std::istream& in,
                                                  const std::string& name,
                                                  const Universe& u);
ExchangeabilityMatrix load_exchangeability_matrix_file(const std::string& path,
                                                       const Universe& u);

// --- list vectors and contributions ------------------------------------------

void save_list_vector(std::ostream& out, const Universe& u,
                      const ListVector& l);
void save_list_vector_file(const std::string& path, const Universe& u,
                           const ListVector& l);
std::pair<std::shared_ptr<const Universe>, ListVector> load_list_vector(
    std::istream& in, const std::string& name);
std::pair<std::shared_ptr<const Universe>, ListVector> load_list_vector_file(
    const std::string& path);

void save_contributions(std::ostream& out, const Universe& u,
                        const std::vector<Contribution>& rows);

// --- gene lists, universes, relations ------------------------------------------

/// One gene id per line; order is the list order.
GeneList load_gene_list(std::istream& in, const std::string& name,
                        const Universe& u, ListKind kind = ListKind::ordered);
GeneList load_gene_list_file(const std::string& path, const Universe& u,
                             ListKind kind = ListKind::ordered);

/// One gene id per line.
std::shared_ptr<const Universe> load_universe(std::istream& in,
                                              const std::string& name);
std::shared_ptr<const Universe> load_universe_file(const std::string& path);

/// Lines of tab-separated gene ids, one module per line.
std::vector<std::vector<int>> load_modules(std::istream& in,
                                           const std::string& name,
                                           const Universe& u);
std::vector<std::vector<int>> load_modules_file(const std::string& path,
                                                const Universe& u);

/// geneA\tgeneB lines; symmetric relation.
SimilarityMatrix load_pair_relation(std::istream& in, const std::string& name,
                                    const Universe& u);
SimilarityMatrix load_pair_relation_file(const std::string& path,
                                         const Universe& u);

// --- evaluation outputs (CSV) ---------------------------------------------------

/// set,round,x,y with set in {forward, reflected}, rounds 1-based.
void save_plot_csv(std::ostream& out, const std::vector<PlotPoint>& points);

/// k,f_top,f_bottom.
void save_concordance_csv(std::ostream& out, const ConcordanceCurve& top,
                          const ConcordanceCurve& bottom);

/// pair_a,pair_b,overlap_top,overlap_bottom (1-based replicate ids).
void save_overlap_csv(std::ostream& out, const PairwiseOverlap& top,
                      const PairwiseOverlap& bottom);

/// comparison,variant,distance.
void save_distance_csv(std::ostream& out, const DistanceStabilityResult& r);

// --- dataset alignment ------------------------------------------------------------

/// Lexicographically sorted intersection of two universes.
std::shared_ptr<const Universe> common_universe(const Universe& a,
                                                const Universe& b);

/// Projection of ds onto a (sub-)universe.
LabeledDataset restrict_to_universe(const LabeledDataset& ds,
                                    std::shared_ptr<const Universe> target);

}  // namespace exchlist

#endif
