#ifndef EXCHLIST_PAIR_SAMPLES_HPP
#define EXCHLIST_PAIR_SAMPLES_HPP

#include <span>
#include <vector>

#include "exchlist/ranking_stats.hpp"

namespace exchlist {

struct Point2 {
  int x;
  int y;
};

inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

/// The empirical sample for one gene pair (i, j): forward points
/// ((S_i)_k, (S_j)_k) for every round k, and their coordinate swaps
/// (the reflected points). Coordinates live on the grid {1..M}^2.
struct PairSamples {
  std::vector<Point2> forward;
  std::vector<Point2> reflected;
  int grid_m = 0;

  int rounds() const { return static_cast<int>(forward.size()); }

  static PairSamples from_rows(std::span<const int> row_i,
                               std::span<const int> row_j, int grid_m);
  static PairSamples from_position_vectors(const PositionVectors& pv, int gene_i,
                                           int gene_j);
  /// Builds from forward points alone; the reflection is derived.
  static PairSamples from_points(std::vector<Point2> forward, int grid_m);
};

struct PlotPoint {
  bool reflected;
  int round;  // 0-based
  int x;
  int y;
};

/// Forward then reflected points, rounds ascending; the scatter-plot data for
/// visualizing one pair.
std::vector<PlotPoint> exchangeability_plot_data(const PairSamples& ps);

}  // namespace exchlist

#endif
