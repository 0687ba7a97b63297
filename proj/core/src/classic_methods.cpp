#include "exchlist/classic_methods.hpp"

#include <algorithm>
#include <cmath>

#include "exchlist/error.hpp"
#include "exchlist/list_framework.hpp"
#include "exchlist/parallel.hpp"
#include "exchlist/rng.hpp"

namespace exchlist {
namespace {

constexpr std::uint64_t kStreamGseaPerm = 0x47534541ULL;  // "GSEA"

void check_same_universe(int ma, int mb, const char* op) {
  if (ma != mb) throw ConfigError(std::string(op) + ": universe size mismatch");
}

ListVector indicator_vector(const GeneList& l) {
  const int m = l.universe_size();
  return list_vector(position_matrix_indicator(l), SimilarityMatrix(m),
                     WeightMatrix::identity(m), Summarizer::sup_norm);
}

double dot(const ListVector& u, const ListVector& v) {
  double s = 0.0;
  for (int i = 0; i < u.size(); ++i) s += u.values[i] * v.values[i];
  return s;
}

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double overlap_cosine(const GeneList& a, const GeneList& b) {
  check_same_universe(a.universe_size(), b.universe_size(), "overlap_cosine");
  return cosine_similarity(indicator_vector(a), indicator_vector(b));
}

double pogr(const GeneList& l1, const GeneList& l2,
            const SimilarityMatrix& correlated) {
  const int m = l1.universe_size();
  check_same_universe(m, l2.universe_size(), "pogr");
  check_same_universe(m, correlated.size(), "pogr");
  ListVector u = indicator_vector(l1);
  // reach of l2: genes in l2 or tied to an l2 member through `correlated`
  ListVector v = list_vector(position_matrix_indicator(l2), correlated,
                             WeightMatrix::identity(m), Summarizer::sup_norm);
  for (double& x : v.values) x = (x > 0.0) ? 1.0 : 0.0;
  return dot(u, v) / l1.size();
}

double hypergeometric_pvalue(int m, int n1, int n2, int k_observed) {
  if (m < 1 || n1 < 0 || n2 < 0 || n1 > m || n2 > m)
    throw ConfigError("hypergeometric: invalid counts");
  const int lo = std::max(0, n1 + n2 - m);
  const int hi = std::min(n1, n2);
  if (k_observed > hi) throw ConfigError("hypergeometric: overlap impossible");
  if (k_observed <= lo) return 1.0;
  const double log_denom = log_choose(m, n2);
  double tail = 0.0;
  for (int t = k_observed; t <= hi; ++t) {
    tail += std::exp(log_choose(n1, t) + log_choose(m - n1, n2 - t) -
                     log_denom);
  }
  return std::min(tail, 1.0);
}

double hypergeometric_pvalue(const GeneList& a, const GeneList& b) {
  check_same_universe(a.universe_size(), b.universe_size(), "hypergeometric");
  int k = static_cast<int>(
      std::llround(dot(indicator_vector(a), indicator_vector(b))));
  return hypergeometric_pvalue(a.universe_size(), a.size(), b.size(), k);
}

int hypergeometric_upper_bound(int m, int k1, int k2, double tail) {
  if (!(tail > 0.0 && tail < 1.0))
    throw ConfigError("hypergeometric: tail must be in (0, 1)");
  const int hi = std::min(k1, k2);
  for (int t = std::max(0, k1 + k2 - m); t < hi; ++t) {
    if (hypergeometric_pvalue(m, k1, k2, t + 1) < tail) return t;
  }
  return hi;
}

namespace {

// ES and running sum for one ranking. The in-set total sum_set |r|^q and the
// per-gene miss scale are exactly the two distinct values the framework list
// vector of the set takes; gsea_enrichment builds them through list_vector,
// this fast path recomputes them directly for permutation replays.
void gsea_profile_direct(const Ranking& r, const GeneList& set, double q,
                         std::vector<double>* profile, double* es) {
  const int m = r.size();
  const int k = set.size();
  std::vector<int> gene_at(m);
  for (int i = 0; i < m; ++i) gene_at[r.positions[i] - 1] = i;
  double sum_set = 0.0;
  for (int g : set.members()) sum_set += std::pow(std::abs(r.scores[g]), q);
  if (sum_set <= 0.0)
    throw DataError("gsea: gene set carries zero total score weight");
  const double miss = -1.0 / (m - k);
  profile->resize(m);
  double acc = 0.0;
  double best = 0.0;
  double best_abs = -1.0;
  for (int p = 0; p < m; ++p) {
    int g = gene_at[p];
    acc += set.contains(g) ? std::pow(std::abs(r.scores[g]), q) / sum_set
                           : miss;
    (*profile)[p] = acc;
    if (std::abs(acc) > best_abs) {  // strict: ties keep the earliest step
      best_abs = std::abs(acc);
      best = acc;
    }
  }
  *es = best;
}

}  // namespace

GseaResult gsea_enrichment(const Ranking& r, const GeneList& set, double q,
                           const GseaPermutations* perms) {
  const int m = r.size();
  check_same_universe(m, set.universe_size(), "gsea");
  if (!r.has_scores()) throw ConfigError("gsea: ranking must carry scores");
  if (set.size() >= m)
    throw ConfigError("gsea: gene set must be a strict subset");
  if (q < 0.0) throw ConfigError("gsea: q must be non-negative");

  // framework construction of the two list vectors
  std::vector<double> weights(m);
  for (int i = 0; i < m; ++i) weights[i] = std::pow(std::abs(r.scores[i]), q);
  ListVector l_rank =
      list_vector(position_matrix_custom(weights, PositionProvenance::score),
                  SimilarityMatrix(m), WeightMatrix::identity(m),
                  Summarizer::sum);

  std::vector<int> block(m);
  std::vector<double> a_diag(m);
  WeightMatrix w_set = WeightMatrix::identity(m);
  for (int i = 0; i < m; ++i) {
    bool in = set.contains(i);
    block[i] = in ? 1 : 0;
    a_diag[i] = in ? weights[i] : -1.0;
    if (!in) w_set.diag[i] = weights[i];
  }
  ListVector l_set =
      list_vector(position_matrix_custom(a_diag, PositionProvenance::custom),
                  BlockSimilarity(block), w_set, Summarizer::sum);

  // walk the ranking: hits contribute l_rank/l_set, misses -1/(M-K) (the
  // ratio's value whenever the gene weight is nonzero)
  std::vector<int> gene_at(m);
  for (int i = 0; i < m; ++i) gene_at[r.positions[i] - 1] = i;
  const double miss = -1.0 / (m - set.size());
  GseaResult result;
  result.running_sum.resize(m);
  double in_set_total = 0.0;
  for (int g : set.members()) in_set_total = l_set.values[g];  // all equal
  if (in_set_total <= 0.0)
    throw DataError("gsea: gene set carries zero total score weight");
  double acc = 0.0;
  double best_abs = -1.0;
  for (int p = 0; p < m; ++p) {
    int g = gene_at[p];
    acc += set.contains(g) ? l_rank.values[g] / l_set.values[g] : miss;
    result.running_sum[p] = acc;
    if (std::abs(acc) > best_abs) {
      best_abs = std::abs(acc);
      result.es = acc;
    }
  }

  if (perms != nullptr && perms->count > 0) {
    if (perms->dataset == nullptr)
      throw ConfigError("gsea: permutations need a dataset");
    if (perms->dataset->gene_count() != m)
      throw ConfigError("gsea: permutation dataset universe mismatch");
    std::vector<double> es_perm(perms->count);
    const LabeledDataset& ds = *perms->dataset;
    parallel_for(perms->count, perms->workers, [&](int p) {
      std::vector<int> labels =
          permute_labels(ds.groups(), sub_seed(perms->seed, kStreamGseaPerm, p));
      LabeledDataset permuted = ds.with_groups(std::move(labels));
      Ranking rp = make_ranking(
          rank_scores(permuted, perms->stat, perms->positive_class));
      std::vector<double> profile;
      gsea_profile_direct(rp, set, q, &profile, &es_perm[p]);
    });
    int at_least = 0;
    for (double e : es_perm) at_least += (std::abs(e) >= std::abs(result.es));
    result.p_value = static_cast<double>(at_least) / perms->count;
  }
  return result;
}

namespace {

// list values for the rank-difference distances: position within the list
// for members, K+1 for everything else
std::vector<double> list_values(const GeneList& l) {
  if (l.kind() != ListKind::ordered)
    throw ConfigError("list comparison: needs an ordered list");
  std::vector<double> v(l.universe_size(), l.size() + 1.0);
  for (int g : l.members()) v[g] = l.position_of(g);
  return v;
}

void canonicalize_modules(std::vector<double>& va, std::vector<double>& vb,
                          const std::vector<std::vector<int>>& modules) {
  std::vector<char> used(va.size(), 0);
  for (const auto& module : modules) {
    std::vector<int> genes = module;
    std::sort(genes.begin(), genes.end());
    for (int g : genes) {
      if (g < 0 || g >= static_cast<int>(va.size()))
        throw ConfigError("jurman: module gene out of range");
      if (used[g]) throw ConfigError("jurman: modules must be disjoint");
      used[g] = 1;
    }
    for (auto* v : {&va, &vb}) {
      std::vector<double> vals;
      vals.reserve(genes.size());
      for (int g : genes) vals.push_back((*v)[g]);
      std::sort(vals.begin(), vals.end());
      for (std::size_t t = 0; t < genes.size(); ++t) (*v)[genes[t]] = vals[t];
    }
  }
}

ListVector values_via_framework(std::vector<double> values) {
  const int m = static_cast<int>(values.size());
  return list_vector(
      position_matrix_custom(std::move(values), PositionProvenance::custom),
      SimilarityMatrix(m), WeightMatrix::identity(m),
      Summarizer::min_abs_nonzero);
}

}  // namespace

double jurman_distance(const GeneList& a, const GeneList& b,
                       const std::vector<std::vector<int>>& modules) {
  check_same_universe(a.universe_size(), b.universe_size(), "jurman");
  if (a.size() != b.size())
    throw ConfigError("jurman: lists must have the same size");
  std::vector<double> va = list_values(a);
  std::vector<double> vb = list_values(b);
  if (!modules.empty()) canonicalize_modules(va, vb, modules);
  ListVector u = values_via_framework(std::move(va));
  ListVector v = values_via_framework(std::move(vb));
  double d = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    d += std::abs(u.values[i] - v.values[i]) / (u.values[i] + v.values[i]);
  }
  return d;
}

double pearson_reciprocal_distance(const GeneList& a, const GeneList& b) {
  check_same_universe(a.universe_size(), b.universe_size(), "pearson");
  if (a.size() != b.size())
    throw ConfigError("pearson: lists must have the same size");
  std::vector<double> va = list_values(a);
  std::vector<double> vb = list_values(b);
  for (double& x : va) x = 1.0 / x;
  for (double& x : vb) x = 1.0 / x;
  ListVector u = values_via_framework(std::move(va));
  ListVector v = values_via_framework(std::move(vb));
  double d = 0.0;
  for (int i = 0; i < u.size(); ++i) d += std::abs(u.values[i] - v.values[i]);
  return d;
}

double yang_base_similarity(const Ranking& a, const Ranking& b, double alpha) {
  const int m = a.size();
  check_same_universe(m, b.size(), "yang");
  if (!(alpha > 0.0)) throw ConfigError("yang: alpha must be positive");
  // positions through the framework (A = diag(position), V = W = I)
  std::vector<double> pa(m), pb(m);
  for (int i = 0; i < m; ++i) {
    pa[i] = a.positions[i];
    pb[i] = b.positions[i];
  }
  ListVector u = list_vector(
      position_matrix_custom(std::move(pa), PositionProvenance::custom),
      SimilarityMatrix(m), WeightMatrix::identity(m), Summarizer::sup_norm);
  ListVector v = list_vector(
      position_matrix_custom(std::move(pb), PositionProvenance::custom),
      SimilarityMatrix(m), WeightMatrix::identity(m), Summarizer::sup_norm);
  // closed form of sum_n e^(-alpha n) (O_n + O_n reversed): gene i is inside
  // both top-n lists for n >= max_i and inside both reversed top-n lists for
  // n >= M+1-min_i; geometric tails, written to avoid large exponents
  const double decay = 1.0 - std::exp(-alpha);
  const double tail_end = std::exp(-alpha * (m + 1));
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    double mx = std::max(u.values[i], v.values[i]);
    double mn = std::min(u.values[i], v.values[i]);
    s += std::exp(-alpha * mx) + std::exp(-alpha * (m + 1 - mn)) -
         2.0 * tail_end;
  }
  return s / decay;
}

double yang_similarity(const Ranking& a, const Ranking& b, double alpha,
                       double beta) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw ConfigError("yang: beta must be in [0, 1)");
  double straight = yang_base_similarity(a, b, alpha);
  double flipped = yang_base_similarity(a, reverse_ranking(b), alpha);
  return std::max(beta * straight, (1.0 - beta) * flipped);
}

}  // namespace exchlist
