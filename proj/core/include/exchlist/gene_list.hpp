#ifndef EXCHLIST_GENE_LIST_HPP
#define EXCHLIST_GENE_LIST_HPP

#include <vector>

#include "exchlist/ranking.hpp"

namespace exchlist {

enum class ListKind { ordered, unordered };

/// A gene set of size K <= M, either ordered (a top list, position = 1-based
/// index within the list) or unordered (a plain set). Members are universe
/// indices.
class GeneList {
 public:
  static GeneList ordered(std::vector<int> members_in_order, int universe_size);
  static GeneList unordered(std::vector<int> members, int universe_size);

  /// Ordered list of the k best (or worst) genes of a ranking.
  static GeneList from_top_k(const Ranking& r, int k,
                             Direction direction = Direction::top);

  ListKind kind() const { return kind_; }
  int universe_size() const { return universe_size_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int gene) const;

  /// 1-based position of a member within an ordered list; ordered lists only.
  int position_of(int gene) const;

  /// Ordered lists: list order. Unordered lists: ascending universe index.
  const std::vector<int>& members() const { return members_; }

 private:
  GeneList(ListKind kind, std::vector<int> members, int universe_size);

  ListKind kind_;
  int universe_size_;
  std::vector<int> members_;
  std::vector<int> position_;  // per gene: 1-based position or 0
};

}  // namespace exchlist

#endif
