#include "exchlist/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exchlist/error.hpp"

namespace exchlist {

Ranking make_ranking(const std::vector<double>& scores) {
  const int m = static_cast<int>(scores.size());
  if (m < 1) throw ConfigError("make_ranking: empty score vector");
  for (double s : scores) {
    if (!std::isfinite(s)) throw DataError("make_ranking: non-finite score");
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  // stable sort keeps ascending-index order within ties
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  Ranking r;
  r.positions.resize(m);
  r.scores = scores;
  for (int pos = 0; pos < m; ++pos) r.positions[order[pos]] = pos + 1;
  return r;
}

Ranking reverse_ranking(const Ranking& r) {
  const int m = r.size();
  Ranking out;
  out.positions.resize(m);
  for (int i = 0; i < m; ++i) out.positions[i] = m + 1 - r.positions[i];
  if (r.has_scores()) {
    out.scores.resize(m);
    for (int i = 0; i < m; ++i) out.scores[i] = -r.scores[i];
  }
  return out;
}

std::vector<int> top_k(const Ranking& r, int k, Direction direction) {
  const int m = r.size();
  if (k < 1 || k > m) throw ConfigError("top_k: k out of range");
  std::vector<int> genes;
  genes.reserve(k);
  for (int i = 0; i < m; ++i) {
    int p = r.positions[i];
    bool in = (direction == Direction::top) ? (p <= k) : (p >= m - k + 1);
    if (in) genes.push_back(i);
  }
  return genes;
}

void validate_ranking(const Ranking& r) {
  const int m = r.size();
  if (m < 1) throw DataError("ranking: empty");
  std::vector<char> seen(m, 0);
  for (int p : r.positions) {
    if (p < 1 || p > m) throw DataError("ranking: position out of range");
    if (seen[p - 1]) throw DataError("ranking: duplicate position");
    seen[p - 1] = 1;
  }
  if (r.has_scores()) {
    if (static_cast<int>(r.scores.size()) != m)
      throw DataError("ranking: score/position length mismatch");
    std::vector<double> by_pos(m);
    for (int i = 0; i < m; ++i) {
      if (!std::isfinite(r.scores[i]))
        throw DataError("ranking: non-finite score");
      by_pos[r.positions[i] - 1] = r.scores[i];
    }
    for (int p = 1; p < m; ++p) {
      if (by_pos[p] > by_pos[p - 1])
        throw DataError("ranking: scores not non-increasing in position order");
    }
  }
}

}  // namespace exchlist
