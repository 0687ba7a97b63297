#ifndef EXCHLIST_RANKING_HPP
#define EXCHLIST_RANKING_HPP

#include <vector>

namespace exchlist {

enum class Direction { top, bottom };

/// A full ranking of the universe. positions[i] is the 1-based rank of gene i
/// (1 = best). positions is always a permutation of 1..M. scores, when
/// present, are the per-gene statistics the ranking was built from; reading
/// them in position order gives a non-increasing sequence.
struct Ranking {
  std::vector<int> positions;
  std::vector<double> scores;  // empty when the ranking carries no scores

  int size() const { return static_cast<int>(positions.size()); }
  bool has_scores() const { return !scores.empty(); }
};

/// Ranks genes by descending score; ties go to the smaller universe index.
/// Scores must be finite.
Ranking make_ranking(const std::vector<double>& scores);

/// Flips the ranking: position p becomes M+1-p, scores are negated.
Ranking reverse_ranking(const Ranking& r);

/// Universe indices (ascending) of the k best genes (Direction::top) or the
/// k worst (Direction::bottom). Requires 1 <= k <= M.
std::vector<int> top_k(const Ranking& r, int k, Direction direction);

/// Checks the permutation (and score-order, if scores are present)
/// invariants; throws DataError on violation.
void validate_ranking(const Ranking& r);

}  // namespace exchlist

#endif
