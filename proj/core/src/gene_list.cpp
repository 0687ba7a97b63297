#include "exchlist/gene_list.hpp"

#include <algorithm>

#include "exchlist/error.hpp"

namespace exchlist {

GeneList::GeneList(ListKind kind, std::vector<int> members, int universe_size)
    : kind_(kind), universe_size_(universe_size), members_(std::move(members)) {
  if (universe_size_ < 2) throw ConfigError("gene list: universe too small");
  if (members_.empty()) throw DataError("gene list: empty");
  if (static_cast<int>(members_.size()) > universe_size_)
    throw DataError("gene list: more members than universe genes");
  position_.assign(universe_size_, 0);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    int g = members_[i];
    if (g < 0 || g >= universe_size_)
      throw DataError("gene list: member index out of range");
    if (position_[g] != 0) throw DataError("gene list: duplicate member");
    position_[g] = static_cast<int>(i) + 1;
  }
}

GeneList GeneList::ordered(std::vector<int> members_in_order,
                           int universe_size) {
  return GeneList(ListKind::ordered, std::move(members_in_order),
                  universe_size);
}

GeneList GeneList::unordered(std::vector<int> members, int universe_size) {
  std::sort(members.begin(), members.end());
  GeneList l(ListKind::unordered, std::move(members), universe_size);
  // positions are meaningless for a set
  for (int& p : l.position_) p = (p != 0) ? 1 : 0;
  return l;
}

GeneList GeneList::from_top_k(const Ranking& r, int k, Direction direction) {
  std::vector<int> genes = top_k(r, k, direction);
  // order by rank inside the list, not by universe index
  std::sort(genes.begin(), genes.end(), [&](int a, int b) {
    return direction == Direction::top ? r.positions[a] < r.positions[b]
                                       : r.positions[a] > r.positions[b];
  });
  return ordered(std::move(genes), r.size());
}

bool GeneList::contains(int gene) const {
  return gene >= 0 && gene < universe_size_ && position_[gene] != 0;
}

int GeneList::position_of(int gene) const {
  if (kind_ != ListKind::ordered)
    throw ConfigError("position_of: list is unordered");
  if (!contains(gene)) throw ConfigError("position_of: gene not in list");
  return position_[gene];
}

}  // namespace exchlist
