#include "exchlist/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "exchlist/error.hpp"
#include "exchlist/rng.hpp"

namespace exchlist {
namespace {

constexpr double kSdFloor = 1e-12;

// seed sub-streams
constexpr std::uint64_t kStreamExch = 0x45584348ULL;      // "EXCH"
constexpr std::uint64_t kStreamAgg = 0x41474752ULL;       // "AGGR"
constexpr std::uint64_t kStreamBoot = 0x424f4f54ULL;      // "BOOT"
constexpr std::uint64_t kStreamBootPerm = 0x42504d54ULL;  // "BPMT"
constexpr std::uint64_t kStreamFive = 0x46495645ULL;      // "FIVE"
constexpr std::uint64_t kStreamFolds = 0x464f4c44ULL;     // "FOLD"
constexpr std::uint64_t kStreamFoldCfg = 0x46434647ULL;   // "FCFG"
constexpr std::uint64_t kStreamRandom = 0x524e444dULL;    // "RNDM"

ExchangeabilityOptions exch_options(const ExperimentConfig& cfg,
                                    std::uint64_t seed) {
  ExchangeabilityOptions opt;
  opt.measure = cfg.measure;
  opt.metric = cfg.metric;
  opt.null_config = {cfg.null_repeats, seed};
  opt.kde = cfg.kde;
  opt.sparsity_threshold = cfg.sparsity_threshold;
  opt.workers = cfg.workers;
  return opt;
}

SimilarityMatrix dataset_exchangeability(const LabeledDataset& ds,
                                         const ExperimentConfig& cfg,
                                         std::uint64_t seed) {
  PositionVectorOptions pv_opt;
  pv_opt.stat = cfg.stat;
  pv_opt.positive_class = cfg.positive_class;
  pv_opt.rounds = cfg.b_sub;
  pv_opt.fraction = cfg.fraction;
  pv_opt.seed = seed;
  pv_opt.workers = cfg.workers;
  PositionVectors pv = build_position_vectors(ds, pv_opt);
  return exchangeability_matrix(pv, exch_options(cfg, seed)).scores;
}

}  // namespace

MethodTag method_tag_from_string(const std::string& s) {
  if (s == "non_extended") return MethodTag::non_extended;
  if (s == "extended") return MethodTag::extended;
  if (s == "median") return MethodTag::median_aggregated;
  if (s == "rank_product") return MethodTag::rank_product;
  if (s == "correlation") return MethodTag::correlation_extended;
  if (s == "random") return MethodTag::random_baseline;
  throw ConfigError("unknown ranking method: " + s);
}

std::string to_string(MethodTag t) {
  switch (t) {
    case MethodTag::non_extended: return "non_extended";
    case MethodTag::extended: return "extended";
    case MethodTag::median_aggregated: return "median";
    case MethodTag::rank_product: return "rank_product";
    case MethodTag::correlation_extended: return "correlation";
    case MethodTag::random_baseline: return "random";
  }
  return "?";
}

const std::vector<MethodTag>& five_method_tags() {
  static const std::vector<MethodTag> tags = {
      MethodTag::non_extended, MethodTag::extended,
      MethodTag::median_aggregated, MethodTag::rank_product,
      MethodTag::correlation_extended};
  return tags;
}

const Ranking& RankingSet::by_tag(MethodTag t) const {
  switch (t) {
    case MethodTag::non_extended: return non_extended;
    case MethodTag::extended: return extended;
    case MethodTag::median_aggregated: return median_aggregated;
    case MethodTag::rank_product: return rank_product;
    case MethodTag::correlation_extended: return correlation_extended;
    case MethodTag::random_baseline: break;
  }
  throw ConfigError("RankingSet: no ranking for this tag");
}

RankingSet run_five_rankings(const LabeledDataset& ds,
                             const ExperimentConfig& cfg) {
  SimilarityMatrix exch =
      dataset_exchangeability(ds, cfg, sub_seed(cfg.seed, kStreamExch));
  SimilarityMatrix corr = correlation_v_matrix(ds, 0.0, cfg.workers);
  return run_five_rankings(ds, cfg, exch, corr);
}

RankingSet run_five_rankings(const LabeledDataset& ds,
                             const ExperimentConfig& cfg,
                             const SimilarityView& exchangeability,
                             const SimilarityView& correlation) {
  RankingSet out;
  out.non_extended = make_ranking(rank_scores(ds, cfg.stat, cfg.positive_class));
  PositionMatrix a = position_matrix_rank_based(out.non_extended, cfg.b_squared);
  const WeightMatrix w = WeightMatrix::identity(ds.gene_count());
  out.extended = extended_ranking(
      list_vector(a, exchangeability, w, Summarizer::max_magnitude));

  PositionVectorOptions pv_opt;
  pv_opt.stat = cfg.stat;
  pv_opt.positive_class = cfg.positive_class;
  pv_opt.rounds = cfg.aggregation_rounds;
  pv_opt.fraction = cfg.fraction;
  pv_opt.seed = sub_seed(cfg.seed, kStreamAgg);
  pv_opt.workers = cfg.workers;
  PositionVectors agg = build_position_vectors(ds, pv_opt);
  out.median_aggregated = aggregate_positions(agg, AggregationMethod::median);
  out.rank_product = aggregate_positions(agg, AggregationMethod::rank_product);

  out.correlation_extended = extended_ranking(
      list_vector(a, correlation, w, Summarizer::max_magnitude));
  return out;
}

double ConcordanceCurve::mean_through(int k_max) const {
  if (k_max < 1 || k_max > static_cast<int>(f.size()))
    throw ConfigError("concordance: k out of range");
  double s = 0.0;
  for (int k = 1; k <= k_max; ++k) s += f[k - 1];
  return s / k_max;
}

ConcordanceCurve concordance_curve(const std::vector<Ranking>& rankings,
                                   Direction direction) {
  if (rankings.empty()) throw ConfigError("concordance: no rankings");
  const int m = rankings.front().size();
  for (const Ranking& r : rankings) {
    if (r.size() != m) throw ConfigError("concordance: size mismatch");
  }
  // gene g is inside every top-k iff its worst (largest) position is <= k,
  // so the curve is a prefix sum of the worst-position histogram
  std::vector<int> histogram(m + 1, 0);
  for (int g = 0; g < m; ++g) {
    int worst = 0;
    for (const Ranking& r : rankings) {
      int p = direction == Direction::top ? r.positions[g]
                                          : m + 1 - r.positions[g];
      worst = std::max(worst, p);
    }
    ++histogram[worst];
  }
  ConcordanceCurve curve;
  curve.f.resize(m);
  int acc = 0;
  for (int k = 1; k <= m; ++k) {
    acc += histogram[k];
    curve.f[k - 1] = acc;
  }
  return curve;
}

PairwiseOverlap mean_pairwise_overlap(const std::vector<Ranking>& rankings,
                                      int k, Direction direction) {
  if (rankings.size() < 2)
    throw ConfigError("pairwise overlap: need at least two rankings");
  const int m = rankings.front().size();
  std::vector<std::vector<char>> in_k(rankings.size());
  for (std::size_t r = 0; r < rankings.size(); ++r) {
    if (rankings[r].size() != m)
      throw ConfigError("pairwise overlap: size mismatch");
    in_k[r].assign(m, 0);
    for (int g : top_k(rankings[r], k, direction)) in_k[r][g] = 1;
  }
  PairwiseOverlap out;
  double total = 0.0;
  for (std::size_t a = 0; a + 1 < rankings.size(); ++a) {
    for (std::size_t b = a + 1; b < rankings.size(); ++b) {
      int n = 0;
      for (int g = 0; g < m; ++g) n += (in_k[a][g] && in_k[b][g]);
      out.rows.push_back({static_cast<int>(a), static_cast<int>(b), n});
      total += n;
    }
  }
  out.mean = total / out.rows.size();
  return out;
}

Ranking aggregate_positions(const PositionVectors& pv,
                            AggregationMethod method) {
  const int m = pv.gene_count();
  const int b = pv.rounds();
  std::vector<double> stat(m);
  std::vector<double> buf(b);
  for (int i = 0; i < m; ++i) {
    std::span<const int> row = pv.row(i);
    if (method == AggregationMethod::median) {
      for (int k = 0; k < b; ++k) buf[k] = row[k];
      std::sort(buf.begin(), buf.end());
      stat[i] = (b % 2 == 1) ? buf[b / 2]
                             : 0.5 * (buf[b / 2 - 1] + buf[b / 2]);
    } else {
      double s = 0.0;
      for (int k = 0; k < b; ++k) s += std::log(static_cast<double>(row[k]));
      stat[i] = s;
    }
  }
  // smaller statistic = better: rank on the negated value
  for (double& x : stat) x = -x;
  return make_ranking(stat);
}

Ranking aggregate_rankings(const std::vector<Ranking>& rankings,
                           AggregationMethod method) {
  if (rankings.empty()) throw ConfigError("aggregate: no rankings");
  const int m = rankings.front().size();
  PositionVectors pv(m, static_cast<int>(rankings.size()));
  for (std::size_t k = 0; k < rankings.size(); ++k) {
    if (rankings[k].size() != m) throw ConfigError("aggregate: size mismatch");
    for (int i = 0; i < m; ++i)
      pv.set(i, static_cast<int>(k), rankings[k].positions[i]);
  }
  return aggregate_positions(pv, method);
}

std::map<MethodTag, std::vector<Ranking>> bootstrap_rankings(
    const LabeledDataset& ds, const ExperimentConfig& cfg,
    bool permute_labels_each_round) {
  // Both relatedness matrices belong to the parent dataset, not to the
  // replicates: every replicate is extended against the same structure.
  SimilarityMatrix exch =
      dataset_exchangeability(ds, cfg, sub_seed(cfg.seed, kStreamExch));
  SimilarityMatrix corr = correlation_v_matrix(ds, 0.0, cfg.workers);
  std::map<MethodTag, std::vector<Ranking>> out;
  for (MethodTag t : five_method_tags()) out[t] = {};
  for (int r = 0; r < cfg.b_boot; ++r) {
    LabeledDataset rep = stratified_resample(ds, ResampleMode::bootstrap, 1.0,
                                             sub_seed(cfg.seed, kStreamBoot, r));
    if (permute_labels_each_round) {
      rep = rep.with_groups(permute_labels(
          rep.groups(), sub_seed(cfg.seed, kStreamBootPerm, r)));
    }
    ExperimentConfig rep_cfg = cfg;
    rep_cfg.seed = sub_seed(cfg.seed, kStreamFive, r);
    RankingSet five = run_five_rankings(rep, rep_cfg, exch, corr);
    for (MethodTag t : five_method_tags()) out[t].push_back(five.by_tag(t));
  }
  return out;
}

std::string to_string(ComparisonGroup g) {
  switch (g) {
    case ComparisonGroup::within_a: return "within_a";
    case ComparisonGroup::within_b: return "within_b";
    case ComparisonGroup::cross: return "cross";
  }
  return "?";
}

double DistanceStabilityResult::mean(ComparisonGroup g, bool extended) const {
  double s = 0.0;
  int n = 0;
  for (const Row& r : rows) {
    if (r.comparison == g && r.extended == extended) {
      s += r.distance;
      ++n;
    }
  }
  if (n == 0) throw ConfigError("distance stability: empty group");
  return s / n;
}

StabilityVectors replicate_list_vectors(
    const std::vector<LabeledDataset>& replicates, const SimilarityView& v,
    const ExperimentConfig& cfg) {
  StabilityVectors out;
  for (const LabeledDataset& rep : replicates) {
    Ranking r = make_ranking(rank_scores(rep, cfg.stat, cfg.positive_class));
    PositionMatrix a = position_matrix_rank_based(r, cfg.b_squared);
    const WeightMatrix w = WeightMatrix::identity(rep.gene_count());
    SimilarityMatrix identity(rep.gene_count());
    out.extended.push_back(list_vector(a, v, w, Summarizer::max_magnitude));
    out.plain.push_back(list_vector(a, identity, w, Summarizer::max_magnitude));
  }
  return out;
}

DistanceStabilityResult distance_stability(const LabeledDataset& ds_a,
                                           const LabeledDataset& ds_b,
                                           const ExperimentConfig& cfg) {
  if (ds_a.gene_count() != ds_b.gene_count())
    throw ConfigError("distance stability: universe size mismatch");
  for (int i = 0; i < ds_a.gene_count(); ++i) {
    if (ds_a.universe().id(i) != ds_b.universe().id(i))
      throw ConfigError("distance stability: universes differ");
  }
  DistanceStabilityResult out;
  std::vector<StabilityVectors> vecs;
  for (int which = 0; which < 2; ++which) {
    const LabeledDataset& ds = which == 0 ? ds_a : ds_b;
    std::uint64_t seed = sub_seed(cfg.seed, kStreamExch, which);
    SimilarityMatrix v = dataset_exchangeability(ds, cfg, seed);
    std::vector<LabeledDataset> reps;
    reps.reserve(cfg.b_boot);
    for (int r = 0; r < cfg.b_boot; ++r) {
      reps.push_back(
          stratified_resample(ds, ResampleMode::bootstrap, 1.0,
                              sub_seed(cfg.seed, kStreamBoot, which * 1000 + r)));
    }
    vecs.push_back(replicate_list_vectors(reps, v, cfg));
  }
  auto add_within = [&](const StabilityVectors& sv, ComparisonGroup g) {
    for (std::size_t i = 0; i + 1 < sv.extended.size(); ++i) {
      for (std::size_t j = i + 1; j < sv.extended.size(); ++j) {
        out.rows.push_back(
            {g, true, cosine_dissimilarity(sv.extended[i], sv.extended[j])});
        out.rows.push_back(
            {g, false, cosine_dissimilarity(sv.plain[i], sv.plain[j])});
      }
    }
  };
  add_within(vecs[0], ComparisonGroup::within_a);
  add_within(vecs[1], ComparisonGroup::within_b);
  for (std::size_t i = 0; i < vecs[0].extended.size(); ++i) {
    for (std::size_t j = 0; j < vecs[1].extended.size(); ++j) {
      out.rows.push_back({ComparisonGroup::cross, true,
                          cosine_dissimilarity(vecs[0].extended[i],
                                               vecs[1].extended[j])});
      out.rows.push_back({ComparisonGroup::cross, false,
                          cosine_dissimilarity(vecs[0].plain[i],
                                               vecs[1].plain[j])});
    }
  }
  return out;
}

std::vector<double> centroid_scores(const LabeledDataset& train,
                                    const LabeledDataset& test,
                                    const std::vector<int>& genes,
                                    const std::string& positive_class) {
  if (genes.empty()) throw ConfigError("centroid: no genes selected");
  if (train.gene_count() != test.gene_count())
    throw ConfigError("centroid: train/test universe mismatch");
  const int pos = positive_class.empty() ? 0 : train.group_of_class(positive_class);
  const int neg = 1 - pos;
  const int nt = train.sample_count();
  std::vector<double> mean(genes.size()), sd(genes.size());
  std::vector<double> c_pos(genes.size(), 0.0), c_neg(genes.size(), 0.0);
  for (std::size_t gi = 0; gi < genes.size(); ++gi) {
    std::span<const double> row = train.row(genes[gi]);
    double mu = 0.0;
    for (double x : row) mu += x;
    mu /= nt;
    double ss = 0.0;
    for (double x : row) ss += (x - mu) * (x - mu);
    mean[gi] = mu;
    sd[gi] = std::max(std::sqrt(ss / (nt - 1)), kSdFloor);
    double sum_pos = 0.0, sum_neg = 0.0;
    for (int j = 0; j < nt; ++j) {
      double z = (row[j] - mu) / sd[gi];
      if (train.groups()[j] == pos) {
        sum_pos += z;
      } else {
        sum_neg += z;
      }
    }
    c_pos[gi] = sum_pos / train.group_size(pos);
    c_neg[gi] = sum_neg / train.group_size(neg);
  }
  std::vector<double> scores(test.sample_count());
  for (int j = 0; j < test.sample_count(); ++j) {
    double d_pos = 0.0, d_neg = 0.0;
    for (std::size_t gi = 0; gi < genes.size(); ++gi) {
      double z = (test.at(genes[gi], j) - mean[gi]) / sd[gi];
      d_pos += (z - c_pos[gi]) * (z - c_pos[gi]);
      d_neg += (z - c_neg[gi]) * (z - c_neg[gi]);
    }
    scores[j] = d_neg - d_pos;
  }
  return scores;
}

double auc(const std::vector<double>& scores, const std::vector<int>& groups,
           int positive_group) {
  if (scores.size() != groups.size())
    throw ConfigError("auc: score/label length mismatch");
  long long n_pos = 0, n_neg = 0;
  double wins = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (groups[i] != positive_group) continue;
    ++n_pos;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (groups[j] == positive_group) continue;
      if (scores[i] > scores[j]) {
        wins += 1.0;
      } else if (scores[i] == scores[j]) {
        wins += 0.5;
      }
    }
  }
  for (int g : groups) n_neg += (g != positive_group);
  if (n_pos == 0 || n_neg == 0)
    throw DataError("auc: needs both classes present");
  return wins / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

namespace {

// stratified fold assignment: shuffle each class, deal round-robin
std::vector<int> fold_of_samples(const LabeledDataset& ds, int folds,
                                 std::uint64_t seed) {
  std::vector<int> fold(ds.sample_count(), -1);
  for (int g = 0; g < 2; ++g) {
    std::vector<int> idx;
    for (int j = 0; j < ds.sample_count(); ++j) {
      if (ds.groups()[j] == g) idx.push_back(j);
    }
    Rng rng(sub_seed(seed, kStreamFolds, g));
    rng.shuffle(idx);
    for (std::size_t t = 0; t < idx.size(); ++t)
      fold[idx[t]] = static_cast<int>(t) % folds;
  }
  return fold;
}

LabeledDataset subset_samples(const LabeledDataset& ds,
                              const std::vector<int>& keep) {
  const int m = ds.gene_count();
  const int n = static_cast<int>(keep.size());
  std::vector<double> values(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    std::span<const double> row = ds.row(i);
    for (int j = 0; j < n; ++j)
      values[static_cast<std::size_t>(i) * n + j] = row[keep[j]];
  }
  std::vector<int> groups(n);
  std::vector<std::string> ids;
  if (!ds.sample_ids().empty()) ids.reserve(n);
  for (int j = 0; j < n; ++j) {
    groups[j] = ds.groups()[keep[j]];
    if (!ds.sample_ids().empty()) ids.push_back(ds.sample_ids()[keep[j]]);
  }
  return LabeledDataset(ds.universe_ptr(), std::move(values), std::move(groups),
                        ds.class_names(), std::move(ids));
}

}  // namespace

std::map<MethodTag, double> cross_validated_auc_all(const LabeledDataset& ds,
                                                    int k, int folds,
                                                    const ExperimentConfig& cfg) {
  if (folds < 2) throw ConfigError("cross validation: need at least two folds");
  if (k < 1 || 2 * k > ds.gene_count())
    throw ConfigError("cross validation: k out of range");
  std::vector<int> fold = fold_of_samples(ds, folds, cfg.seed);
  const int pos =
      cfg.positive_class.empty() ? 0 : ds.group_of_class(cfg.positive_class);

  std::map<MethodTag, std::vector<double>> per_fold;
  for (int f = 0; f < folds; ++f) {
    std::vector<int> train_idx, test_idx;
    for (int j = 0; j < ds.sample_count(); ++j) {
      (fold[j] == f ? test_idx : train_idx).push_back(j);
    }
    LabeledDataset train = subset_samples(ds, train_idx);
    LabeledDataset test = subset_samples(ds, test_idx);

    ExperimentConfig fold_cfg = cfg;
    fold_cfg.seed = sub_seed(cfg.seed, kStreamFoldCfg, f);
    RankingSet five = run_five_rankings(train, fold_cfg);

    auto evaluate = [&](const Ranking& r) {
      std::vector<int> genes = top_k(r, k, Direction::top);
      std::vector<int> bottom = top_k(r, k, Direction::bottom);
      genes.insert(genes.end(), bottom.begin(), bottom.end());
      std::sort(genes.begin(), genes.end());
      genes.erase(std::unique(genes.begin(), genes.end()), genes.end());
      std::vector<double> scores =
          centroid_scores(train, test, genes, cfg.positive_class);
      return auc(scores, test.groups(), pos);
    };

    for (MethodTag t : five_method_tags())
      per_fold[t].push_back(evaluate(five.by_tag(t)));

    Rng rng(sub_seed(fold_cfg.seed, kStreamRandom));
    std::vector<double> random_scores(ds.gene_count());
    for (double& x : random_scores) x = rng.uniform_real();
    per_fold[MethodTag::random_baseline].push_back(
        evaluate(make_ranking(random_scores)));
  }

  std::map<MethodTag, double> out;
  for (const auto& [tag, values] : per_fold) {
    double s = 0.0;
    for (double v : values) s += v;
    out[tag] = s / values.size();
  }
  return out;
}

double cross_validated_auc(const LabeledDataset& ds, MethodTag tag, int k,
                           int folds, const ExperimentConfig& cfg) {
  return cross_validated_auc_all(ds, k, folds, cfg).at(tag);
}

LabeledDataset synth_example(int which, std::uint64_t seed) {
  int m, n, half;
  if (which == 1) {
    m = 50;
    n = 40;
    half = 20;
  } else if (which == 2) {
    m = 75;
    n = 60;
    half = 30;
  } else {
    throw ConfigError("synth_example: which must be 1 or 2");
  }
  std::vector<std::string> ids(m);
  for (int i = 0; i < m; ++i) ids[i] = "g" + std::to_string(i + 1);
  auto universe = std::make_shared<const Universe>(std::move(ids));

  Rng rng(seed);
  std::vector<double> values(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      double shift = 0.0;
      if (which == 1) {
        if (i < 10 && j < 20) shift = 1.0;
      } else {
        if (i < 8 && j < 15) shift = 2.0;
        if (i >= 8 && i < 16 && j >= 15 && j < 30) shift = 2.0;
      }
      values[static_cast<std::size_t>(i) * n + j] = shift + rng.normal();
    }
  }
  std::vector<int> groups(n);
  std::vector<std::string> sample_ids(n);
  for (int j = 0; j < n; ++j) {
    groups[j] = j < half ? 0 : 1;
    sample_ids[j] = "s" + std::to_string(j + 1);
  }
  return LabeledDataset(universe, std::move(values), std::move(groups),
                        {"A", "B"}, std::move(sample_ids));
}

}  // namespace exchlist
