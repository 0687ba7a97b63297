#include "exchlist/exchangeability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <tuple>

#include "exchlist/error.hpp"
#include "exchlist/parallel.hpp"
#include "exchlist/rng.hpp"

namespace exchlist {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kStreamNull = 0x4e554c4cULL;  // "NULL"

inline int sign_of(int d) { return (d > 0) - (d < 0); }

// comparable distance: squared for euclidean (monotone in the true distance),
// exact for the others; finish() maps the minimum back to a true distance
template <MetricKind K>
inline double comparable(Point2 a, Point2 b) {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  if constexpr (K == MetricKind::euclidean) return dx * dx + dy * dy;
  if constexpr (K == MetricKind::manhattan) return dx + dy;
  return std::max(dx, dy);
}

template <MetricKind K>
inline double finish(double v) {
  if constexpr (K == MetricKind::euclidean) return std::sqrt(v);
  return v;
}

template <MetricKind K>
double min_comparable(Point2 p, const Point2* pts, int n) {
  double best = kInf;
  for (int v = 0; v < n; ++v) best = std::min(best, comparable<K>(p, pts[v]));
  return best;
}

template <MetricKind K>
double core_two_sided(const Point2* f, const Point2* r, int b, bool mean) {
  if (mean) {
    double acc = 0.0;
    for (int k = 0; k < b; ++k) acc += finish<K>(min_comparable<K>(f[k], r, b));
    return acc / b;
  }
  // Hausdorff: max over both directions of the min distances
  double worst = 0.0;
  for (int k = 0; k < b; ++k)
    worst = std::max(worst, min_comparable<K>(f[k], r, b));
  for (int k = 0; k < b; ++k)
    worst = std::max(worst, min_comparable<K>(r[k], f, b));
  return finish<K>(worst);
}

// One-sided: each forward point only sees reflected points on its own side of
// the diagonal (equal-rank points see the diagonal itself). An empty side
// means the order of the two genes never reverses there: maximal value 1 is
// reported through *empty.
template <MetricKind K>
double core_one_sided(const Point2* f, const Point2* r, int b, bool mean,
                      bool* empty) {
  double acc = 0.0;
  double worst = 0.0;
  for (int k = 0; k < b; ++k) {
    const int sig = sign_of(f[k].x - f[k].y);
    double best = kInf;
    for (int v = 0; v < b; ++v) {
      if (sign_of(r[v].x - r[v].y) == sig)
        best = std::min(best, comparable<K>(f[k], r[v]));
    }
    if (best == kInf) {
      *empty = true;
      return 0.0;
    }
    double d = finish<K>(best);
    acc += d;
    worst = std::max(worst, d);
  }
  *empty = false;
  return mean ? acc / b : worst;
}

double estimate_points(const Point2* f, const Point2* r, int b, int grid_m,
                       PairMeasure measure, const Metric& metric) {
  const bool one_sided =
      measure == PairMeasure::oed_max || measure == PairMeasure::oed_mean;
  const bool mean =
      measure == PairMeasure::ed_mean || measure == PairMeasure::oed_mean;
  const double norm = one_sided ? metric.one_sided_normalizer(grid_m)
                                : metric.corner_distance(grid_m, 2);
  double raw = 0.0;
  bool empty = false;
  switch (metric.kind) {
    case MetricKind::euclidean:
      raw = one_sided ? core_one_sided<MetricKind::euclidean>(f, r, b, mean, &empty)
                      : core_two_sided<MetricKind::euclidean>(f, r, b, mean);
      break;
    case MetricKind::manhattan:
      raw = one_sided ? core_one_sided<MetricKind::manhattan>(f, r, b, mean, &empty)
                      : core_two_sided<MetricKind::manhattan>(f, r, b, mean);
      break;
    case MetricKind::chebyshev:
      raw = one_sided ? core_one_sided<MetricKind::chebyshev>(f, r, b, mean, &empty)
                      : core_two_sided<MetricKind::chebyshev>(f, r, b, mean);
      break;
  }
  if (empty) return 1.0;
  return std::clamp(raw / norm, 0.0, 1.0);
}

}  // namespace

PairMeasure pair_measure_from_string(const std::string& s) {
  if (s == "ed_max") return PairMeasure::ed_max;
  if (s == "ed_mean") return PairMeasure::ed_mean;
  if (s == "oed_max") return PairMeasure::oed_max;
  if (s == "oed_mean") return PairMeasure::oed_mean;
  if (s == "pvar") return PairMeasure::pvar;
  throw ConfigError("unknown exchangeability measure: " + s);
}

std::string to_string(PairMeasure m) {
  switch (m) {
    case PairMeasure::ed_max: return "ed_max";
    case PairMeasure::ed_mean: return "ed_mean";
    case PairMeasure::oed_max: return "oed_max";
    case PairMeasure::oed_mean: return "oed_mean";
    case PairMeasure::pvar: return "pvar";
  }
  return "?";
}

double set_distance(Point2 p, const std::vector<Point2>& pts,
                    const Metric& metric) {
  if (pts.empty()) throw ConfigError("set_distance: empty point set");
  double best = kInf;
  for (Point2 q : pts) best = std::min(best, metric.dist2d(p.x, p.y, q.x, q.y));
  return best;
}

double hausdorff_distance(const std::vector<Point2>& a,
                          const std::vector<Point2>& b, const Metric& metric) {
  if (a.empty() || b.empty())
    throw ConfigError("hausdorff_distance: empty point set");
  double worst = 0.0;
  for (Point2 p : a) worst = std::max(worst, set_distance(p, b, metric));
  for (Point2 q : b) worst = std::max(worst, set_distance(q, a, metric));
  return worst;
}

double estimate_pair(const PairSamples& ps, PairMeasure measure,
                     const Metric& metric) {
  if (measure == PairMeasure::pvar)
    throw ConfigError("estimate_pair: pvar is computed by estimate_pvar");
  return estimate_points(ps.forward.data(), ps.reflected.data(), ps.rounds(),
                         ps.grid_m, measure, metric);
}

// ---------------------------------------------------------------------------

DiscreteJointDistribution::DiscreteJointDistribution(
    int arity, int grid_m, std::map<std::vector<int>, double> pmf)
    : arity_(arity), grid_m_(grid_m), pmf_(std::move(pmf)) {
  if (arity_ < 2 || arity_ > 5)
    throw ConfigError("joint distribution: arity must be between 2 and 5");
  if (grid_m_ < 2) throw ConfigError("joint distribution: grid too small");
  double total = 0.0;
  for (auto it = pmf_.begin(); it != pmf_.end();) {
    const auto& [point, prob] = *it;
    if (static_cast<int>(point.size()) != arity_)
      throw DataError("joint distribution: point arity mismatch");
    for (int c : point) {
      if (c < 1 || c > grid_m_)
        throw DataError("joint distribution: coordinate outside the grid");
    }
    if (!(prob >= 0.0))
      throw DataError("joint distribution: negative probability");
    total += prob;
    it = (prob == 0.0) ? pmf_.erase(it) : std::next(it);
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw DataError("joint distribution: probabilities do not sum to 1");
  if (pmf_.empty()) throw DataError("joint distribution: empty support");
}

namespace {

using Pmf = std::map<std::vector<int>, double>;

// pushforward under a coordinate permutation: y[r] = q[perm[r]]
Pmf permuted_pmf(const Pmf& base, const std::vector<int>& perm) {
  Pmf out;
  std::vector<int> y(perm.size());
  for (const auto& [q, p] : base) {
    for (std::size_t r = 0; r < perm.size(); ++r) y[r] = q[perm[r]];
    out[y] += p;
  }
  return out;
}

double point_to_support(const std::vector<int>& p, const Pmf& support,
                        const Metric& metric) {
  double best = kInf;
  for (const auto& [q, prob] : support) {
    (void)prob;
    best = std::min(best, metric(p, q));
  }
  return best;
}

double support_hausdorff(const Pmf& a, const Pmf& b, const Metric& metric) {
  double worst = 0.0;
  for (const auto& [p, pp] : a) {
    (void)pp;
    worst = std::max(worst, point_to_support(p, b, metric));
  }
  for (const auto& [q, qp] : b) {
    (void)qp;
    worst = std::max(worst, point_to_support(q, a, metric));
  }
  return worst;
}

}  // namespace

double exact_measure(const DiscreteJointDistribution& dist, ExactMeasure which,
                     const Metric& metric) {
  const int m = dist.arity();
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::vector<Pmf> pushed;
  do {
    pushed.push_back(permuted_pmf(dist.pmf(), perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  const int n = static_cast<int>(pushed.size());

  if (which == ExactMeasure::epvar) {
    // positive-part mass of each pushforward against the permutation average
    Pmf avg;
    for (const Pmf& pm : pushed) {
      for (const auto& [pt, p] : pm) avg[pt] += p / n;
    }
    double total = 0.0;
    for (const Pmf& pm : pushed) {
      for (const auto& [pt, avg_p] : avg) {
        auto it = pm.find(pt);
        double p = (it == pm.end()) ? 0.0 : it->second;
        if (p > avg_p) total += p - avg_p;
      }
    }
    return std::clamp(total / (n - 1), 0.0, 1.0);
  }

  const double norm = metric.corner_distance(dist.grid_m(), m) * n * (n - 1);
  double total = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (which == ExactMeasure::eed_max) {
        total += support_hausdorff(pushed[a], pushed[b], metric);
      } else {
        for (const auto& [pt, p] : pushed[a])
          total += p * point_to_support(pt, pushed[b], metric);
      }
    }
  }
  return std::clamp(total / norm, 0.0, 1.0);
}

// ---------------------------------------------------------------------------

namespace {

struct NullKey {
  int grid_m;
  int rounds_b;
  PairMeasure measure;
  MetricKind metric;
  int repeats;
  std::uint64_t seed;
  double bandwidth;
  int grid_resolution;

  bool operator<(const NullKey& o) const {
    return std::tie(grid_m, rounds_b, measure, metric, repeats, seed, bandwidth,
                    grid_resolution) <
           std::tie(o.grid_m, o.rounds_b, o.measure, o.metric, o.repeats,
                    o.seed, o.bandwidth, o.grid_resolution);
  }
};

std::mutex g_null_mutex;
std::map<NullKey, double> g_null_cache;

double null_score_uncached(int grid_m, int rounds_b, PairMeasure measure,
                           const Metric& metric, const NullConfig& cfg,
                           const KdeConfig& kde) {
  double total = 0.0;
  std::vector<Point2> points(rounds_b);
  for (int rep = 0; rep < cfg.repeats; ++rep) {
    Rng rng(sub_seed(cfg.seed, kStreamNull, rep));
    for (int k = 0; k < rounds_b; ++k) {
      points[k].x = 1 + static_cast<int>(rng.uniform_index(grid_m));
      points[k].y = 1 + static_cast<int>(rng.uniform_index(grid_m));
    }
    PairSamples ps = PairSamples::from_points(points, grid_m);
    double d = (measure == PairMeasure::pvar)
                   ? estimate_pvar(ps, kde)
                   : estimate_pair(ps, measure, metric);
    total += 1.0 - d;
  }
  return total / cfg.repeats;
}

}  // namespace

double null_score(int grid_m, int rounds_b, PairMeasure measure,
                  const Metric& metric, const NullConfig& cfg,
                  const KdeConfig& kde) {
  if (grid_m < 2) throw ConfigError("null_score: grid too small");
  if (rounds_b < 1) throw ConfigError("null_score: need at least one round");
  if (cfg.repeats < 1) throw ConfigError("null_score: repeats must be positive");
  NullKey key{grid_m,     rounds_b, measure,       metric.kind,
              cfg.repeats, cfg.seed, kde.bandwidth, kde.grid_resolution};
  {
    std::lock_guard<std::mutex> lock(g_null_mutex);
    auto it = g_null_cache.find(key);
    if (it != g_null_cache.end()) return it->second;
  }
  double value = null_score_uncached(grid_m, rounds_b, measure, metric, cfg, kde);
  std::lock_guard<std::mutex> lock(g_null_mutex);
  g_null_cache.emplace(key, value);
  return value;
}

double normalize_score(double score, double null) {
  if (!(null >= 0.0) || null >= 1.0)
    throw ConfigError("normalize_score: degenerate null score");
  return std::max((score - null) / (1.0 - null), 0.0);
}

ExchangeabilityMatrix exchangeability_matrix(const PositionVectors& pv,
                                             const ExchangeabilityOptions& opt) {
  if (opt.sparsity_threshold < 0.0 || opt.sparsity_threshold > 1.0)
    throw ConfigError("exchangeability_matrix: threshold outside [0, 1]");
  const int m = pv.gene_count();
  const int b = pv.rounds();
  const double null = null_score(m, b, opt.measure, opt.metric, opt.null_config,
                                 opt.kde);

  std::vector<std::vector<SimilarityMatrix::Entry>> upper(m);
  parallel_for(m - 1, opt.workers, [&](int i) {
    thread_local std::vector<Point2> fwd, refl;
    fwd.resize(b);
    refl.resize(b);
    std::span<const int> row_i = pv.row(i);
    auto& out = upper[i];
    for (int j = i + 1; j < m; ++j) {
      std::span<const int> row_j = pv.row(j);
      for (int k = 0; k < b; ++k) {
        fwd[k] = {row_i[k], row_j[k]};
        refl[k] = {row_j[k], row_i[k]};
      }
      double d;
      if (opt.measure == PairMeasure::pvar) {
        PairSamples ps;
        ps.grid_m = m;
        ps.forward = fwd;
        ps.reflected = refl;
        d = estimate_pvar(ps, opt.kde);
      } else {
        d = estimate_points(fwd.data(), refl.data(), b, m, opt.measure,
                            opt.metric);
      }
      double s = normalize_score(1.0 - d, null);
      if (s > 0.0 && s >= opt.sparsity_threshold)
        out.push_back({j, s});
    }
  });

  ExchangeabilityMatrix result{
      SimilarityMatrix::from_upper_rows(m, upper),
      {b, opt.measure, opt.metric.kind, opt.null_config.seed,
       opt.sparsity_threshold}};
  return result;
}

}  // namespace exchlist
