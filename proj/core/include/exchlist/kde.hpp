#ifndef EXCHLIST_KDE_HPP
#define EXCHLIST_KDE_HPP

#include "exchlist/pair_samples.hpp"

namespace exchlist {

struct KdeConfig {
  /// Kernel bandwidth for both coordinates; <= 0 selects Silverman's rule per
  /// coordinate from the forward sample (needs at least two rounds).
  double bandwidth = 0.0;
  /// Lattice is grid_resolution x grid_resolution over [1, M]^2; minimum 8.
  int grid_resolution = 128;
};

/// Total-variation style estimate of non-exchangeability: fits a product
/// Gaussian KDE to the forward and to the reflected points, integrates the
/// positive part of their difference over [1, M]^2 (midpoint rule) and clamps
/// to [0, 1]. Zero when forward and reflected coincide as multisets.
double estimate_pvar(const PairSamples& ps, const KdeConfig& cfg = {});

}  // namespace exchlist

#endif
