#ifndef EXCHLIST_METRIC_HPP
#define EXCHLIST_METRIC_HPP

#include <span>
#include <string>

namespace exchlist {

enum class MetricKind { euclidean, manhattan, chebyshev };

MetricKind metric_from_string(const std::string& s);
std::string to_string(MetricKind k);

/// Distance on the rank grid {1..M}^m.
struct Metric {
  MetricKind kind = MetricKind::euclidean;

  double operator()(std::span<const int> a, std::span<const int> b) const;
  double dist2d(int x1, int y1, int x2, int y2) const;

  /// rho((1,...,1), (M,...,M)): the grid diameter, used to normalize the
  /// two-sided measures.
  double corner_distance(int grid_m, int dims) const;

  /// rho((1,2), (M-1,M)): the largest distance between two points strictly on
  /// one side of the diagonal; normalizes the one-sided measures. grid_m >= 3.
  double one_sided_normalizer(int grid_m) const;
};

}  // namespace exchlist

#endif
