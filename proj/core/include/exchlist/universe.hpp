#ifndef EXCHLIST_UNIVERSE_HPP
#define EXCHLIST_UNIVERSE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace exchlist {

/// Ordered set of gene identifiers. The index of a gene in this ordering is
/// its "universe index"; every ranking, list and matrix in the library refers
/// to genes by that index. At least two genes, identifiers unique.
class Universe {
 public:
  explicit Universe(std::vector<std::string> ids);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int index) const { return ids_.at(index); }
  const std::vector<std::string>& ids() const { return ids_; }

  /// Index of `id`, or throws DataError if unknown.
  int index_of(const std::string& id) const;
  std::optional<int> find(const std::string& id) const;
  bool contains(const std::string& id) const { return find(id).has_value(); }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace exchlist

#endif
