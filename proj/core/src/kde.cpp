#include "exchlist/kde.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "exchlist/error.hpp"

namespace exchlist {
namespace {

double sample_sd(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= v.size();
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / (v.size() - 1));
}

// linear-interpolation quantile of a sorted vector, q in [0,1]
double quantile_sorted(const std::vector<double>& sorted, double q) {
  double h = q * (sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(h));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

double silverman_bandwidth(std::vector<double> coords) {
  double sd = sample_sd(coords);
  std::sort(coords.begin(), coords.end());
  double iqr = quantile_sorted(coords, 0.75) - quantile_sorted(coords, 0.25);
  double scale = std::min(sd, iqr / 1.34);
  if (scale <= 0.0) scale = std::max(sd, iqr / 1.34);
  double h = 0.9 * scale * std::pow(double(coords.size()), -0.2);
  // degenerate samples (all points equal in a coordinate) get a fixed narrow
  // kernel instead of a delta spike
  if (h < 1e-9) h = 0.25;
  return h;
}

}  // namespace

double estimate_pvar(const PairSamples& ps, const KdeConfig& cfg) {
  if (cfg.grid_resolution < 8)
    throw ConfigError("estimate_pvar: grid_resolution must be at least 8");
  const int b = ps.rounds();
  const int m = ps.grid_m;
  double hx, hy;
  if (cfg.bandwidth > 0.0) {
    hx = hy = cfg.bandwidth;
  } else {
    if (b < 2)
      throw ConfigError(
          "estimate_pvar: automatic bandwidth needs at least two rounds");
    std::vector<double> xs(b), ys(b);
    for (int k = 0; k < b; ++k) {
      xs[k] = ps.forward[k].x;
      ys[k] = ps.forward[k].y;
    }
    hx = silverman_bandwidth(std::move(xs));
    hy = silverman_bandwidth(std::move(ys));
  }

  const int res = cfg.grid_resolution;
  const double step = double(m - 1) / res;
  // midpoint lattice over [1, M]^2; kernels are separable so each point
  // contributes gx (outer product) gy
  std::vector<double> grid(res);
  for (int a = 0; a < res; ++a) grid[a] = 1.0 + (a + 0.5) * step;

  auto axis_weights = [&](double center, double h) {
    std::vector<double> w(res);
    double norm = 1.0 / (h * std::sqrt(2.0 * 3.14159265358979323846));
    for (int a = 0; a < res; ++a) {
      double z = (grid[a] - center) / h;
      w[a] = norm * std::exp(-0.5 * z * z);
    }
    return w;
  };

  std::vector<double> diff(static_cast<std::size_t>(res) * res, 0.0);
  const double w_point = 1.0 / b;
  for (int k = 0; k < b; ++k) {
    std::vector<double> fx = axis_weights(ps.forward[k].x, hx);
    std::vector<double> fy = axis_weights(ps.forward[k].y, hy);
    std::vector<double> rx = axis_weights(ps.reflected[k].x, hx);
    std::vector<double> ry = axis_weights(ps.reflected[k].y, hy);
    for (int a = 0; a < res; ++a) {
      double* row = diff.data() + static_cast<std::size_t>(a) * res;
      double fxa = fx[a] * w_point;
      double rxa = rx[a] * w_point;
      for (int c = 0; c < res; ++c) row[c] += fxa * fy[c] - rxa * ry[c];
    }
  }
  double integral = 0.0;
  for (double d : diff) {
    if (d > 0.0) integral += d;
  }
  integral *= step * step;
  return std::clamp(integral, 0.0, 1.0);
}

}  // namespace exchlist
