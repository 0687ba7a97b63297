#include "exchlist/ranking_stats.hpp"

#include <algorithm>
#include <cmath>

#include "exchlist/error.hpp"
#include "exchlist/parallel.hpp"
#include "exchlist/rng.hpp"

namespace exchlist {
namespace {

constexpr double kSdFloor = 1e-12;

// sub-stream ids for seed derivation
constexpr std::uint64_t kStreamResample = 0x5245534d50ULL;  // "RESMP"
constexpr std::uint64_t kStreamPermute = 0x5045524dULL;     // "PERM"

struct GroupStats {
  double mean;
  double sd;  // sample sd, 0 when n < 2
  int n;
};

GroupStats group_stats(std::span<const double> row,
                       const std::vector<int>& groups, int g) {
  GroupStats st{0.0, 0.0, 0};
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (groups[j] == g) {
      st.mean += row[j];
      ++st.n;
    }
  }
  st.mean /= st.n;
  double ss = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (groups[j] == g) {
      double d = row[j] - st.mean;
      ss += d * d;
    }
  }
  if (st.n > 1) st.sd = std::sqrt(ss / (st.n - 1));
  return st;
}

int positive_group(const LabeledDataset& ds, const std::string& positive_class) {
  return positive_class.empty() ? 0 : ds.group_of_class(positive_class);
}

}  // namespace

RankStat rank_stat_from_string(const std::string& s) {
  if (s == "snr") return RankStat::snr;
  if (s == "welch") return RankStat::welch;
  throw ConfigError("unknown ranking statistic: " + s);
}

std::string to_string(RankStat s) {
  return s == RankStat::snr ? "snr" : "welch";
}

std::vector<double> snr_scores(const LabeledDataset& ds,
                               const std::string& positive_class) {
  const int good = positive_group(ds, positive_class);
  const int poor = 1 - good;
  std::vector<double> out(ds.gene_count());
  for (int i = 0; i < ds.gene_count(); ++i) {
    GroupStats a = group_stats(ds.row(i), ds.groups(), good);
    GroupStats b = group_stats(ds.row(i), ds.groups(), poor);
    out[i] = (a.mean - b.mean) / std::max(a.sd + b.sd, kSdFloor);
  }
  return out;
}

std::vector<double> welch_t_scores(const LabeledDataset& ds,
                                   const std::string& positive_class) {
  const int good = positive_group(ds, positive_class);
  const int poor = 1 - good;
  std::vector<double> out(ds.gene_count());
  for (int i = 0; i < ds.gene_count(); ++i) {
    GroupStats a = group_stats(ds.row(i), ds.groups(), good);
    GroupStats b = group_stats(ds.row(i), ds.groups(), poor);
    double se = std::sqrt(a.sd * a.sd / a.n + b.sd * b.sd / b.n);
    out[i] = (a.mean - b.mean) / std::max(se, kSdFloor);
  }
  return out;
}

std::vector<double> rank_scores(const LabeledDataset& ds, RankStat stat,
                                const std::string& positive_class) {
  return stat == RankStat::snr ? snr_scores(ds, positive_class)
                               : welch_t_scores(ds, positive_class);
}

LabeledDataset stratified_resample(const LabeledDataset& ds, ResampleMode mode,
                                   double fraction, std::uint64_t seed) {
  if (mode == ResampleMode::subsample &&
      (fraction <= 0.0 || fraction > 1.0)) {
    throw ConfigError("stratified_resample: fraction must be in (0, 1]");
  }
  Rng rng(seed);
  std::vector<int> chosen;  // sample indices of the resample, group 0 then 1
  for (int g = 0; g < 2; ++g) {
    std::vector<int> pool;
    for (int j = 0; j < ds.sample_count(); ++j) {
      if (ds.groups()[j] == g) pool.push_back(j);
    }
    const int n_g = static_cast<int>(pool.size());
    if (mode == ResampleMode::subsample) {
      int take = std::max(2, static_cast<int>(std::floor(fraction * n_g)));
      take = std::min(take, n_g);
      if (take < 2)
        throw DataError("stratified_resample: resampled group below 2");
      // partial Fisher-Yates, then ascending order for a stable layout
      for (int t = 0; t < take; ++t) {
        int j = t + static_cast<int>(rng.uniform_index(n_g - t));
        std::swap(pool[t], pool[j]);
      }
      pool.resize(take);
      std::sort(pool.begin(), pool.end());
      chosen.insert(chosen.end(), pool.begin(), pool.end());
    } else {
      for (int t = 0; t < n_g; ++t) {
        chosen.push_back(pool[rng.uniform_index(n_g)]);
      }
    }
  }

  const int m = ds.gene_count();
  const int n_out = static_cast<int>(chosen.size());
  std::vector<double> values(static_cast<std::size_t>(m) * n_out);
  for (int i = 0; i < m; ++i) {
    std::span<const double> row = ds.row(i);
    double* out_row = values.data() + static_cast<std::size_t>(i) * n_out;
    for (int j = 0; j < n_out; ++j) out_row[j] = row[chosen[j]];
  }
  std::vector<int> groups(n_out);
  std::vector<std::string> ids;
  if (!ds.sample_ids().empty()) ids.reserve(n_out);
  for (int j = 0; j < n_out; ++j) {
    groups[j] = ds.groups()[chosen[j]];
    if (!ds.sample_ids().empty()) ids.push_back(ds.sample_ids()[chosen[j]]);
  }
  return LabeledDataset(ds.universe_ptr(), std::move(values), std::move(groups),
                        ds.class_names(), std::move(ids));
}

std::vector<int> permute_labels(const std::vector<int>& groups,
                                std::uint64_t seed) {
  std::vector<int> out = groups;
  Rng rng(seed);
  rng.shuffle(out);
  return out;
}

PositionVectors::PositionVectors(int gene_count, int rounds)
    : m_(gene_count), b_(rounds) {
  if (m_ < 2) throw ConfigError("position vectors: need at least two genes");
  if (b_ < 1) throw ConfigError("position vectors: need at least one round");
  s_.assign(static_cast<std::size_t>(m_) * b_, 0);
}

void PositionVectors::validate() const {
  std::vector<char> seen(m_);
  for (int k = 0; k < b_; ++k) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < m_; ++i) {
      int p = at(i, k);
      if (p < 1 || p > m_)
        throw DataError("position vectors: position out of range");
      if (seen[p - 1])
        throw DataError("position vectors: column is not a permutation");
      seen[p - 1] = 1;
    }
  }
}

PositionVectors build_position_vectors(const LabeledDataset& ds,
                                       const PositionVectorOptions& opt) {
  PositionVectors pv(ds.gene_count(), opt.rounds);
  parallel_for(opt.rounds, opt.workers, [&](int k) {
    LabeledDataset sub =
        stratified_resample(ds, ResampleMode::subsample, opt.fraction,
                            sub_seed(opt.seed, kStreamResample, k));
    if (opt.permute_each_round) {
      sub = sub.with_groups(
          permute_labels(sub.groups(), sub_seed(opt.seed, kStreamPermute, k)));
    }
    Ranking r = make_ranking(rank_scores(sub, opt.stat, opt.positive_class));
    for (int i = 0; i < pv.gene_count(); ++i) pv.set(i, k, r.positions[i]);
  });
  return pv;
}

}  // namespace exchlist
