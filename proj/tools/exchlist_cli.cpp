// Command line front end for the exchangeability toolkit. Subcommands cover
// the whole pipeline: rank, posvec, exch, extend, compare, plotdata,
// eval (concordance | overlap | dist-stability | classify) and synth.
//
// Exit codes: 0 success, 1 usage error, 2 data or configuration error.
// The EXCHLIST_WORKERS environment variable overrides --workers everywhere.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "exchlist/classic_methods.hpp"
#include "exchlist/error.hpp"
#include "exchlist/evaluation.hpp"
#include "exchlist/exchangeability.hpp"
#include "exchlist/gene_list.hpp"
#include "exchlist/io.hpp"
#include "exchlist/list_framework.hpp"
#include "exchlist/pair_samples.hpp"
#include "exchlist/ranking.hpp"
#include "exchlist/ranking_stats.hpp"
#include "exchlist/similarity.hpp"
#include "exchlist/universe.hpp"

namespace {

using namespace exchlist;

int resolve_workers(int cli_workers) {
  const char* s = std::getenv("EXCHLIST_WORKERS");
  if (s == nullptr || *s == '\0') return cli_workers;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1)
    throw ConfigError("EXCHLIST_WORKERS must be a positive integer");
  return static_cast<int>(v);
}

/// Runs `write` against the file at `path`, or stdout when path is empty/"-".
void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  write(out);
}

// --- shared option bundles ----------------------------------------------------

struct DatasetArgs {
  std::string expression;
  std::string labels;
};

void add_dataset_options(CLI::App* cmd, DatasetArgs& a, bool required = true,
                         const std::string& suffix = "") {
  auto* e = cmd->add_option("--expression" + suffix, a.expression,
                            "expression TSV (gene<TAB>sample... header)");
  auto* l = cmd->add_option("--labels" + suffix, a.labels,
                            "labels TSV (sample<TAB>class header)");
  if (required) {
    e->required();
    l->required();
  }
}

struct StatArgs {
  std::string stat = "snr";
  std::string positive_class;
};

void add_stat_options(CLI::App* cmd, StatArgs& a) {
  cmd->add_option("--stat", a.stat, "ranking statistic")
      ->check(CLI::IsMember({"snr", "welch"}));
  cmd->add_option("--positive-class", a.positive_class,
                  "class treated as positive (default: first class)");
}

struct SubsampleArgs {
  int rounds = 20;
  double fraction = 2.0 / 3.0;
};

void add_subsample_options(CLI::App* cmd, SubsampleArgs& a) {
  cmd->add_option("--subsample-b", a.rounds,
                  "subsample rounds behind the position vectors")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--fraction", a.fraction,
                  "per-class fraction kept in each subsample")
      ->check(CLI::Range(0.0, 1.0));
}

struct MatrixArgs {
  std::string measure = "oed_mean";
  std::string metric = "euclidean";
  int null_repeats = 100;
  double threshold = 0.0;
  double bandwidth = 0.0;
  int grid_resolution = 128;
};

void add_matrix_options(CLI::App* cmd, MatrixArgs& a) {
  cmd->add_option("--measure", a.measure, "pair measure")
      ->check(CLI::IsMember(
          {"ed_max", "ed_mean", "oed_max", "oed_mean", "pvar"}));
  cmd->add_option("--metric", a.metric, "grid metric")
      ->check(CLI::IsMember({"euclidean", "manhattan", "chebyshev"}));
  cmd->add_option("--null-repeats", a.null_repeats,
                  "uniform-null samples behind score normalization")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threshold", a.threshold,
                  "sparsity threshold: scores below it are dropped")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--bandwidth", a.bandwidth,
                  "KDE bandwidth (pvar only; <= 0 selects Silverman's rule)");
  cmd->add_option("--grid-resolution", a.grid_resolution,
                  "KDE integration lattice size (pvar only)")
      ->check(CLI::Range(8, 4096));
}

ExchangeabilityOptions matrix_options(const MatrixArgs& a, std::uint64_t seed,
                                      int workers) {
  ExchangeabilityOptions opt;
  opt.measure = pair_measure_from_string(a.measure);
  opt.metric = Metric{metric_from_string(a.metric)};
  opt.null_config = {a.null_repeats, seed};
  opt.kde.bandwidth = a.bandwidth;
  opt.kde.grid_resolution = a.grid_resolution;
  opt.sparsity_threshold = a.threshold;
  opt.workers = resolve_workers(workers);
  return opt;
}

PositionVectorOptions position_options(const StatArgs& stat,
                                       const SubsampleArgs& sub,
                                       std::uint64_t seed, int workers,
                                       bool permute_each_round = false) {
  PositionVectorOptions opt;
  opt.stat = rank_stat_from_string(stat.stat);
  opt.positive_class = stat.positive_class;
  opt.rounds = sub.rounds;
  opt.fraction = sub.fraction;
  opt.seed = seed;
  opt.permute_each_round = permute_each_round;
  opt.workers = resolve_workers(workers);
  return opt;
}

struct ExperimentArgs {
  DatasetArgs data;
  StatArgs stat;
  SubsampleArgs sub;
  MatrixArgs matrix;
  int bootstraps = 10;
  int aggregation_rounds = 100;
  double b_squared = 350.0;
  std::uint64_t seed = 0;
  int workers = 1;
};

void add_experiment_options(CLI::App* cmd, ExperimentArgs& a,
                            bool dataset_required = true) {
  if (dataset_required) add_dataset_options(cmd, a.data);
  add_stat_options(cmd, a.stat);
  add_subsample_options(cmd, a.sub);
  add_matrix_options(cmd, a.matrix);
  cmd->add_option("--bootstraps", a.bootstraps,
                  "bootstrap replicates of the dataset")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--aggregation-rounds", a.aggregation_rounds,
                  "subsample rounds behind the aggregated rankings")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--b2", a.b_squared, "rank-based position weight scale b^2")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "root seed for all randomness");
  cmd->add_option("--workers", a.workers, "worker threads")
      ->check(CLI::PositiveNumber);
}

ExperimentConfig experiment_config(const ExperimentArgs& a) {
  ExperimentConfig cfg;
  cfg.b_boot = a.bootstraps;
  cfg.b_sub = a.sub.rounds;
  cfg.aggregation_rounds = a.aggregation_rounds;
  cfg.fraction = a.sub.fraction;
  cfg.b_squared = a.b_squared;
  cfg.stat = rank_stat_from_string(a.stat.stat);
  cfg.positive_class = a.stat.positive_class;
  cfg.measure = pair_measure_from_string(a.matrix.measure);
  cfg.metric = Metric{metric_from_string(a.matrix.metric)};
  cfg.null_repeats = a.matrix.null_repeats;
  cfg.sparsity_threshold = a.matrix.threshold;
  cfg.kde.bandwidth = a.matrix.bandwidth;
  cfg.kde.grid_resolution = a.matrix.grid_resolution;
  cfg.seed = a.seed;
  cfg.workers = resolve_workers(a.workers);
  return cfg;
}

const std::vector<std::string>& method_tag_names() {
  static const std::vector<std::string> names = {
      "non_extended", "extended", "median", "rank_product", "correlation"};
  return names;
}

// --- rank ----------------------------------------------------------------------

void add_rank(CLI::App& app) {
  auto a = std::make_shared<DatasetArgs>();
  auto stat = std::make_shared<StatArgs>();
  auto out = std::make_shared<std::string>();
  CLI::App* cmd = app.add_subcommand(
      "rank", "Rank the genes of a labeled expression matrix");
  add_dataset_options(cmd, *a);
  add_stat_options(cmd, *stat);
  cmd->add_option("--out", *out, "output ranking TSV (default: stdout)");
  cmd->callback([a, stat, out] {
    LabeledDataset ds = load_dataset(a->expression, a->labels);
    Ranking r = make_ranking(
        rank_scores(ds, rank_stat_from_string(stat->stat),
                    stat->positive_class));
    with_output(*out,
                [&](std::ostream& o) { save_ranking(o, ds.universe(), r); });
  });
}

// --- posvec --------------------------------------------------------------------

void add_posvec(CLI::App& app) {
  struct Args {
    DatasetArgs data;
    StatArgs stat;
    SubsampleArgs sub;
    bool permute_each_round = false;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string out;
  };
  auto a = std::make_shared<Args>();
  CLI::App* cmd = app.add_subcommand(
      "posvec", "Build per-gene ranking-position vectors by subsampling");
  add_dataset_options(cmd, a->data);
  add_stat_options(cmd, a->stat);
  add_subsample_options(cmd, a->sub);
  cmd->add_flag("--permute-each-round", a->permute_each_round,
                "permute the labels of every subsample (null experiment)");
  cmd->add_option("--seed", a->seed, "root seed for all randomness");
  cmd->add_option("--workers", a->workers, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", a->out, "output TSV (default: stdout)");
  cmd->callback([a] {
    LabeledDataset ds = load_dataset(a->data.expression, a->data.labels);
    PositionVectors pv = build_position_vectors(
        ds, position_options(a->stat, a->sub, a->seed, a->workers,
                             a->permute_each_round));
    with_output(a->out, [&](std::ostream& o) {
      save_position_vectors(o, ds.universe(), pv);
    });
  });
}

// --- exch ----------------------------------------------------------------------

void add_exch(CLI::App& app) {
  struct Args {
    DatasetArgs data;
    std::string posvec;
    StatArgs stat;
    SubsampleArgs sub;
    MatrixArgs matrix;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string out;
  };
  auto a = std::make_shared<Args>();
  CLI::App* cmd = app.add_subcommand(
      "exch",
      "Compute the all-pairs exchangeability matrix of a dataset or of "
      "precomputed position vectors");
  add_dataset_options(cmd, a->data, /*required=*/false);
  cmd->add_option("--posvec", a->posvec,
                  "position-vector TSV (alternative to --expression/--labels)");
  add_stat_options(cmd, a->stat);
  add_subsample_options(cmd, a->sub);
  add_matrix_options(cmd, a->matrix);
  cmd->add_option("--seed", a->seed, "root seed for all randomness");
  cmd->add_option("--workers", a->workers, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", a->out, "output matrix TSV (default: stdout)");
  cmd->callback([a] {
    std::shared_ptr<const Universe> universe;
    std::unique_ptr<PositionVectors> pv;
    if (!a->posvec.empty()) {
      auto [u, loaded] = load_position_vectors_file(a->posvec);
      universe = u;
      pv = std::make_unique<PositionVectors>(std::move(loaded));
    } else if (!a->data.expression.empty() && !a->data.labels.empty()) {
      LabeledDataset ds = load_dataset(a->data.expression, a->data.labels);
      universe = ds.universe_ptr();
      pv = std::make_unique<PositionVectors>(build_position_vectors(
          ds, position_options(a->stat, a->sub, a->seed, a->workers)));
    } else {
      throw CLI::RequiredError(
          "either --posvec or --expression and --labels");
    }
    ExchangeabilityMatrix m =
        exchangeability_matrix(*pv, matrix_options(a->matrix, a->seed,
                                                   a->workers));
    with_output(a->out, [&](std::ostream& o) {
      save_exchangeability_matrix(o, *universe, m);
    });
  });
}

// --- extend --------------------------------------------------------------------

void add_extend(CLI::App& app) {
  struct Args {
    DatasetArgs data;
    std::string matrix_path;
    StatArgs stat;
    SubsampleArgs sub;
    MatrixArgs matrix;
    double b_squared = 350.0;
    std::string summarizer = "max_magnitude";
    std::uint64_t seed = 0;
    int workers = 1;
    std::string out_ranking;
    std::string out_vector;
  };
  auto a = std::make_shared<Args>();
  CLI::App* cmd = app.add_subcommand(
      "extend",
      "Rank by the exchangeability-extended list vector (computes the "
      "matrix unless --matrix is given)");
  add_dataset_options(cmd, a->data);
  cmd->add_option("--matrix", a->matrix_path,
                  "precomputed exchangeability matrix TSV");
  add_stat_options(cmd, a->stat);
  add_subsample_options(cmd, a->sub);
  add_matrix_options(cmd, a->matrix);
  cmd->add_option("--b2", a->b_squared,
                  "rank-based position weight scale b^2")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--summarizer", a->summarizer, "list-matrix column summary")
      ->check(CLI::IsMember(
          {"max_magnitude", "sup_norm", "sum", "min_abs_nonzero"}));
  cmd->add_option("--seed", a->seed, "root seed for all randomness");
  cmd->add_option("--workers", a->workers, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out-ranking", a->out_ranking,
                  "extended ranking TSV (default: stdout when --out-vector "
                  "is absent)");
  cmd->add_option("--out-vector", a->out_vector, "extended list vector TSV");
  cmd->callback([a] {
    LabeledDataset ds = load_dataset(a->data.expression, a->data.labels);
    Ranking base = make_ranking(
        rank_scores(ds, rank_stat_from_string(a->stat.stat),
                    a->stat.positive_class));
    PositionMatrix pos = position_matrix_rank_based(base, a->b_squared);
    const WeightMatrix w = WeightMatrix::identity(ds.gene_count());
    SimilarityMatrix v =
        a->matrix_path.empty()
            ? exchangeability_matrix(
                  build_position_vectors(
                      ds, position_options(a->stat, a->sub, a->seed,
                                           a->workers)),
                  matrix_options(a->matrix, a->seed, a->workers))
                  .scores
            : load_exchangeability_matrix_file(a->matrix_path, ds.universe())
                  .scores;
    ListVector lv =
        list_vector(pos, v, w, summarizer_from_string(a->summarizer));
    Ranking extended = extended_ranking(lv);
    if (!a->out_vector.empty()) {
      with_output(a->out_vector, [&](std::ostream& o) {
        save_list_vector(o, ds.universe(), lv);
      });
    }
    if (!a->out_ranking.empty() || a->out_vector.empty()) {
      with_output(a->out_ranking, [&](std::ostream& o) {
        save_ranking(o, ds.universe(), extended);
      });
    }
  });
}

// --- compare -------------------------------------------------------------------

void add_compare(CLI::App& app) {
  struct Args {
    std::string method;
    // numeric hypergeometric mode
    int m = 0, n1 = 0, n2 = 0, k = 0;
    // gene-list mode
    std::string universe, list_a, list_b, relation, modules;
    // ranking mode (gsea, yang)
    std::string ranking, ranking_a, ranking_b, set;
    double q = 1.0;
    double alpha = 0.0;
    double beta = -1.0;
    int permutations = 0;
    DatasetArgs data;
    StatArgs stat;
    // list-vector mode (cosine)
    std::string vector_a, vector_b, out_contributions;
    std::uint64_t seed = 0;
    int workers = 1;
  };
  auto a = std::make_shared<Args>();
  CLI::App* cmd = app.add_subcommand(
      "compare", "Compare two gene lists, rankings or list vectors");
  cmd->add_option("--method", a->method, "comparison method")
      ->required()
      ->check(CLI::IsMember({"overlap", "pogr", "hypergeometric", "gsea",
                             "jurman", "pearson", "yang", "cosine"}));
  cmd->add_option("--m", a->m, "universe size (hypergeometric numeric mode)");
  cmd->add_option("--n1", a->n1, "first list size");
  cmd->add_option("--n2", a->n2, "second list size");
  cmd->add_option("--k", a->k, "observed overlap");
  cmd->add_option("--universe", a->universe, "universe file, one gene per line");
  cmd->add_option("--list-a", a->list_a, "first gene list file");
  cmd->add_option("--list-b", a->list_b, "second gene list file");
  cmd->add_option("--relation", a->relation,
                  "geneA<TAB>geneB related-pair file (pogr)");
  cmd->add_option("--modules", a->modules,
                  "feature modules, one tab-separated line each (jurman)");
  cmd->add_option("--ranking", a->ranking, "ranking TSV (gsea)");
  cmd->add_option("--set", a->set, "gene set file (gsea)");
  cmd->add_option("--q", a->q, "score weight exponent (gsea)");
  cmd->add_option("--permutations", a->permutations,
                  "label permutations for the gsea p-value");
  add_dataset_options(cmd, a->data, /*required=*/false);
  add_stat_options(cmd, a->stat);
  cmd->add_option("--ranking-a", a->ranking_a, "first ranking TSV (yang)");
  cmd->add_option("--ranking-b", a->ranking_b, "second ranking TSV (yang)");
  cmd->add_option("--alpha", a->alpha, "top-weight decay rate (yang)");
  cmd->add_option("--beta", a->beta,
                  "orientation mix in [0,1); omit for the one-sided score "
                  "(yang)");
  cmd->add_option("--vector-a", a->vector_a, "first list vector TSV (cosine)");
  cmd->add_option("--vector-b", a->vector_b, "second list vector TSV (cosine)");
  cmd->add_option("--out-contributions", a->out_contributions,
                  "per-gene contribution TSV (cosine)");
  cmd->add_option("--seed", a->seed, "root seed for all randomness");
  cmd->add_option("--workers", a->workers, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->callback([a] {
    auto need = [](const std::string& value, const char* flag) {
      if (value.empty()) throw CLI::RequiredError(flag);
    };
    auto lists = [&]() -> std::pair<GeneList, GeneList> {
      need(a->universe, "--universe");
      need(a->list_a, "--list-a");
      need(a->list_b, "--list-b");
      std::shared_ptr<const Universe> u = load_universe_file(a->universe);
      return {load_gene_list_file(a->list_a, *u),
              load_gene_list_file(a->list_b, *u)};
    };
    auto print = [](double v) { std::printf("%.7f\n", v); };

    if (a->method == "hypergeometric") {
      if (a->m > 0) {
        print(hypergeometric_pvalue(a->m, a->n1, a->n2, a->k));
      } else {
        auto [la, lb] = lists();
        print(hypergeometric_pvalue(la, lb));
      }
    } else if (a->method == "overlap") {
      auto [la, lb] = lists();
      print(overlap_cosine(la, lb));
    } else if (a->method == "pogr") {
      need(a->universe, "--universe");
      need(a->list_a, "--list-a");
      need(a->list_b, "--list-b");
      std::shared_ptr<const Universe> u = load_universe_file(a->universe);
      GeneList la = load_gene_list_file(a->list_a, *u);
      GeneList lb = load_gene_list_file(a->list_b, *u);
      SimilarityMatrix rel =
          a->relation.empty() ? SimilarityMatrix(u->size())
                              : load_pair_relation_file(a->relation, *u);
      print(pogr(la, lb, rel));
    } else if (a->method == "jurman") {
      need(a->universe, "--universe");
      need(a->list_a, "--list-a");
      need(a->list_b, "--list-b");
      std::shared_ptr<const Universe> u = load_universe_file(a->universe);
      GeneList la = load_gene_list_file(a->list_a, *u);
      GeneList lb = load_gene_list_file(a->list_b, *u);
      std::vector<std::vector<int>> modules;
      if (!a->modules.empty()) modules = load_modules_file(a->modules, *u);
      print(jurman_distance(la, lb, modules));
    } else if (a->method == "pearson") {
      auto [la, lb] = lists();
      print(pearson_reciprocal_distance(la, lb));
    } else if (a->method == "gsea") {
      need(a->ranking, "--ranking");
      need(a->set, "--set");
      auto [u, r] = load_ranking_file(a->ranking);
      GeneList set = load_gene_list_file(a->set, *u, ListKind::unordered);
      GseaResult res;
      if (a->permutations > 0) {
        need(a->data.expression, "--expression");
        need(a->data.labels, "--labels");
        LabeledDataset ds = load_dataset(a->data.expression, a->data.labels);
        GseaPermutations perms;
        perms.count = a->permutations;
        perms.seed = a->seed;
        perms.dataset = &ds;
        perms.stat = rank_stat_from_string(a->stat.stat);
        perms.positive_class = a->stat.positive_class;
        perms.workers = resolve_workers(a->workers);
        res = gsea_enrichment(r, set, a->q, &perms);
        std::printf("es\t%.7f\np\t%.7f\n", res.es, res.p_value);
      } else {
        res = gsea_enrichment(r, set, a->q);
        std::printf("es\t%.7f\n", res.es);
      }
    } else if (a->method == "yang") {
      need(a->ranking_a, "--ranking-a");
      need(a->ranking_b, "--ranking-b");
      auto [ua, ra] = load_ranking_file(a->ranking_a);
      auto [ub, rb] = load_ranking_file(a->ranking_b);
      if (ua->ids() != ub->ids())
        throw DataError("yang: rankings are over different universes");
      print(a->beta >= 0.0 ? yang_similarity(ra, rb, a->alpha, a->beta)
                           : yang_base_similarity(ra, rb, a->alpha));
    } else {  // cosine
      need(a->vector_a, "--vector-a");
      need(a->vector_b, "--vector-b");
      auto [ua, va] = load_list_vector_file(a->vector_a);
      auto [ub, vb] = load_list_vector_file(a->vector_b);
      if (ua->ids() != ub->ids())
        throw DataError("cosine: list vectors are over different universes");
      print(cosine_similarity(va, vb));
      if (!a->out_contributions.empty()) {
        std::vector<Contribution> rows = contributions(va, vb);
        with_output(a->out_contributions, [&](std::ostream& o) {
          save_contributions(o, *ua, rows);
        });
      }
    }
  });
}

// --- plotdata ------------------------------------------------------------------

void add_plotdata(CLI::App& app) {
  struct Args {
    DatasetArgs data;
    std::string posvec;
    StatArgs stat;
    SubsampleArgs sub;
    std::string gene_a, gene_b;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string out;
  };
  auto a = std::make_shared<Args>();
  CLI::App* cmd = app.add_subcommand(
      "plotdata",
      "Emit the forward/reflected scatter points of one gene pair as CSV");
  add_dataset_options(cmd, a->data, /*required=*/false);
  cmd->add_option("--posvec", a->posvec,
                  "position-vector TSV (alternative to --expression/--labels)");
  add_stat_options(cmd, a->stat);
  add_subsample_options(cmd, a->sub);
  cmd->add_option("--gene-a", a->gene_a, "first gene identifier")->required();
  cmd->add_option("--gene-b", a->gene_b, "second gene identifier")->required();
  cmd->add_option("--seed", a->seed, "root seed for all randomness");
  cmd->add_option("--workers", a->workers, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", a->out, "output CSV (default: stdout)");
  cmd->callback([a] {
    std::shared_ptr<const Universe> universe;
    std::unique_ptr<PositionVectors> pv;
    if (!a->posvec.empty()) {
      auto [u, loaded] = load_position_vectors_file(a->posvec);
      universe = u;
      pv = std::make_unique<PositionVectors>(std::move(loaded));
    } else if (!a->data.expression.empty() && !a->data.labels.empty()) {
      LabeledDataset ds = load_dataset(a->data.expression, a->data.labels);
      universe = ds.universe_ptr();
      pv = std::make_unique<PositionVectors>(build_position_vectors(
          ds, position_options(a->stat, a->sub, a->seed, a->workers)));
    } else {
      throw CLI::RequiredError("either --posvec or --expression and --labels");
    }
    PairSamples ps = PairSamples::from_position_vectors(
        *pv, universe->index_of(a->gene_a), universe->index_of(a->gene_b));
    with_output(a->out, [&](std::ostream& o) {
      save_plot_csv(o, exchangeability_plot_data(ps));
    });
  });
}

// --- eval ----------------------------------------------------------------------

void add_eval(CLI::App& app) {
  CLI::App* eval = app.add_subcommand(
      "eval", "Stability and classification experiments");
  eval->require_subcommand(1);

  {  // concordance
    struct Args {
      ExperimentArgs exp;
      std::string method = "extended";
      bool permute_labels = false;
      std::string out;
    };
    auto a = std::make_shared<Args>();
    CLI::App* cmd = eval->add_subcommand(
        "concordance",
        "Top-k/bottom-k concordance of one method across bootstrap "
        "replicates");
    add_experiment_options(cmd, a->exp);
    cmd->add_option("--method", a->method, "ranking method")
        ->check(CLI::IsMember(method_tag_names()));
    cmd->add_flag("--permute-labels", a->permute_labels,
                  "permute every replicate's labels (null experiment)");
    cmd->add_option("--out", a->out, "output CSV (default: stdout)");
    cmd->callback([a] {
      LabeledDataset ds =
          load_dataset(a->exp.data.expression, a->exp.data.labels);
      auto boots = bootstrap_rankings(ds, experiment_config(a->exp),
                                      a->permute_labels);
      const std::vector<Ranking>& rankings =
          boots.at(method_tag_from_string(a->method));
      ConcordanceCurve top = concordance_curve(rankings, Direction::top);
      ConcordanceCurve bottom = concordance_curve(rankings, Direction::bottom);
      with_output(a->out, [&](std::ostream& o) {
        save_concordance_csv(o, top, bottom);
      });
    });
  }

  {  // overlap
    struct Args {
      ExperimentArgs exp;
      std::string method = "extended";
      int k = 30;
      bool permute_labels = false;
      std::string out;
    };
    auto a = std::make_shared<Args>();
    CLI::App* cmd = eval->add_subcommand(
        "overlap",
        "Pairwise top-k/bottom-k overlap of one method across bootstrap "
        "replicates");
    add_experiment_options(cmd, a->exp);
    cmd->add_option("--method", a->method, "ranking method")
        ->check(CLI::IsMember(method_tag_names()));
    cmd->add_option("--k", a->k, "list depth")->check(CLI::PositiveNumber);
    cmd->add_flag("--permute-labels", a->permute_labels,
                  "permute every replicate's labels (null experiment)");
    cmd->add_option("--out", a->out, "output CSV (default: stdout)");
    cmd->callback([a] {
      LabeledDataset ds =
          load_dataset(a->exp.data.expression, a->exp.data.labels);
      auto boots = bootstrap_rankings(ds, experiment_config(a->exp),
                                      a->permute_labels);
      const std::vector<Ranking>& rankings =
          boots.at(method_tag_from_string(a->method));
      PairwiseOverlap top = mean_pairwise_overlap(rankings, a->k,
                                                  Direction::top);
      PairwiseOverlap bottom = mean_pairwise_overlap(rankings, a->k,
                                                     Direction::bottom);
      with_output(a->out,
                  [&](std::ostream& o) { save_overlap_csv(o, top, bottom); });
    });
  }

  {  // dist-stability
    struct Args {
      ExperimentArgs exp;
      DatasetArgs data_b;
      std::string out;
    };
    auto a = std::make_shared<Args>();
    CLI::App* cmd = eval->add_subcommand(
        "dist-stability",
        "Within- and cross-dataset list vector distances, extended vs "
        "plain");
    add_experiment_options(cmd, a->exp);
    add_dataset_options(cmd, a->data_b, /*required=*/true, "-b");
    cmd->add_option("--out", a->out, "output CSV (default: stdout)");
    cmd->callback([a] {
      LabeledDataset ds_a =
          load_dataset(a->exp.data.expression, a->exp.data.labels);
      LabeledDataset ds_b =
          load_dataset(a->data_b.expression, a->data_b.labels);
      std::shared_ptr<const Universe> shared =
          common_universe(ds_a.universe(), ds_b.universe());
      DistanceStabilityResult r =
          distance_stability(restrict_to_universe(ds_a, shared),
                             restrict_to_universe(ds_b, shared),
                             experiment_config(a->exp));
      with_output(a->out, [&](std::ostream& o) { save_distance_csv(o, r); });
    });
  }

  {  // classify
    struct Args {
      ExperimentArgs exp;
      int k = 10;
      int folds = 10;
    };
    auto a = std::make_shared<Args>();
    CLI::App* cmd = eval->add_subcommand(
        "classify",
        "Cross-validated centroid-classifier AUC of every ranking method");
    add_experiment_options(cmd, a->exp);
    cmd->add_option("--k", a->k, "top-k and bottom-k genes kept as features")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--folds", a->folds, "cross-validation folds")
        ->check(CLI::Range(2, 1000));
    cmd->callback([a] {
      LabeledDataset ds =
          load_dataset(a->exp.data.expression, a->exp.data.labels);
      std::map<MethodTag, double> aucs =
          cross_validated_auc_all(ds, a->k, a->folds,
                                  experiment_config(a->exp));
      for (MethodTag t : five_method_tags())
        std::printf("%s\t%.6f\n", to_string(t).c_str(), aucs.at(t));
      std::printf("%s\t%.6f\n", to_string(MethodTag::random_baseline).c_str(),
                  aucs.at(MethodTag::random_baseline));
    });
  }
}

// --- synth ---------------------------------------------------------------------

void add_synth(CLI::App& app) {
  struct Args {
    int example = 1;
    std::uint64_t seed = 0;
    std::string out_expression;
    std::string out_labels;
  };
  auto a = std::make_shared<Args>();
  CLI::App* cmd = app.add_subcommand(
      "synth", "Write a synthetic two-class block-design dataset");
  cmd->add_option("--example", a->example, "design: 1 (50x40) or 2 (75x60)")
      ->required()
      ->check(CLI::Range(1, 2));
  cmd->add_option("--seed", a->seed, "generator seed");
  cmd->add_option("--out-expression", a->out_expression, "expression TSV")
      ->required();
  cmd->add_option("--out-labels", a->out_labels, "labels TSV")->required();
  cmd->callback([a] {
    LabeledDataset ds = synth_example(a->example, a->seed);
    save_expression_file(a->out_expression, ds);
    save_labels_file(a->out_labels, ds);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exchlist: exchangeability-extended ranked gene lists — build, "
      "compare and evaluate"};
  app.require_subcommand(1);
  add_rank(app);
  add_posvec(app);
  add_exch(app);
  add_extend(app);
  add_compare(app);
  add_plotdata(app);
  add_eval(app);
  add_synth(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // includes --help (exit code 0); everything else is a usage error
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
