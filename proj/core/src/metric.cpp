#include "exchlist/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "exchlist/error.hpp"

namespace exchlist {

MetricKind metric_from_string(const std::string& s) {
  if (s == "euclidean") return MetricKind::euclidean;
  if (s == "manhattan") return MetricKind::manhattan;
  if (s == "chebyshev") return MetricKind::chebyshev;
  throw ConfigError("unknown metric: " + s);
}

std::string to_string(MetricKind k) {
  switch (k) {
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::manhattan: return "manhattan";
    case MetricKind::chebyshev: return "chebyshev";
  }
  return "?";
}

double Metric::operator()(std::span<const int> a, std::span<const int> b) const {
  if (a.size() != b.size()) throw ConfigError("metric: dimension mismatch");
  double acc = 0.0;
  switch (kind) {
    case MetricKind::euclidean:
      for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        acc += d * d;
      }
      return std::sqrt(acc);
    case MetricKind::manhattan:
      for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
      return acc;
    case MetricKind::chebyshev:
      for (std::size_t i = 0; i < a.size(); ++i)
        acc = std::max(acc, static_cast<double>(std::abs(a[i] - b[i])));
      return acc;
  }
  return 0.0;
}

double Metric::dist2d(int x1, int y1, int x2, int y2) const {
  double dx = std::abs(x1 - x2);
  double dy = std::abs(y1 - y2);
  switch (kind) {
    case MetricKind::euclidean: return std::sqrt(dx * dx + dy * dy);
    case MetricKind::manhattan: return dx + dy;
    case MetricKind::chebyshev: return std::max(dx, dy);
  }
  return 0.0;
}

double Metric::corner_distance(int grid_m, int dims) const {
  if (grid_m < 2) throw ConfigError("metric: grid needs at least two ranks");
  if (dims < 1) throw ConfigError("metric: dims must be positive");
  double side = grid_m - 1;
  switch (kind) {
    case MetricKind::euclidean: return side * std::sqrt(double(dims));
    case MetricKind::manhattan: return side * dims;
    case MetricKind::chebyshev: return side;
  }
  return 0.0;
}

double Metric::one_sided_normalizer(int grid_m) const {
  if (grid_m < 3)
    throw ConfigError("metric: one-sided measures need a grid of at least 3");
  double side = grid_m - 2;
  switch (kind) {
    case MetricKind::euclidean: return side * std::sqrt(2.0);
    case MetricKind::manhattan: return side * 2.0;
    case MetricKind::chebyshev: return side;
  }
  return 0.0;
}

}  // namespace exchlist
