#include "exchlist/pair_samples.hpp"

#include "exchlist/error.hpp"

namespace exchlist {

PairSamples PairSamples::from_rows(std::span<const int> row_i,
                                   std::span<const int> row_j, int grid_m) {
  if (row_i.size() != row_j.size())
    throw ConfigError("pair samples: row length mismatch");
  if (row_i.empty()) throw ConfigError("pair samples: need at least one round");
  if (grid_m < 2) throw ConfigError("pair samples: grid needs at least 2 ranks");
  PairSamples ps;
  ps.grid_m = grid_m;
  ps.forward.reserve(row_i.size());
  ps.reflected.reserve(row_i.size());
  for (std::size_t k = 0; k < row_i.size(); ++k) {
    int x = row_i[k];
    int y = row_j[k];
    if (x < 1 || x > grid_m || y < 1 || y > grid_m)
      throw DataError("pair samples: position outside the grid");
    ps.forward.push_back({x, y});
    ps.reflected.push_back({y, x});
  }
  return ps;
}

PairSamples PairSamples::from_position_vectors(const PositionVectors& pv,
                                               int gene_i, int gene_j) {
  return from_rows(pv.row(gene_i), pv.row(gene_j), pv.gene_count());
}

PairSamples PairSamples::from_points(std::vector<Point2> forward, int grid_m) {
  if (forward.empty()) throw ConfigError("pair samples: need at least one point");
  if (grid_m < 2) throw ConfigError("pair samples: grid needs at least 2 ranks");
  PairSamples ps;
  ps.grid_m = grid_m;
  ps.reflected.reserve(forward.size());
  for (Point2 p : forward) {
    if (p.x < 1 || p.x > grid_m || p.y < 1 || p.y > grid_m)
      throw DataError("pair samples: position outside the grid");
    ps.reflected.push_back({p.y, p.x});
  }
  ps.forward = std::move(forward);
  return ps;
}

std::vector<PlotPoint> exchangeability_plot_data(const PairSamples& ps) {
  std::vector<PlotPoint> out;
  out.reserve(2 * ps.forward.size());
  for (std::size_t k = 0; k < ps.forward.size(); ++k)
    out.push_back({false, static_cast<int>(k), ps.forward[k].x, ps.forward[k].y});
  for (std::size_t k = 0; k < ps.reflected.size(); ++k)
    out.push_back(
        {true, static_cast<int>(k), ps.reflected[k].x, ps.reflected[k].y});
  return out;
}

}  // namespace exchlist
