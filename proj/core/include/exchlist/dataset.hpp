#ifndef EXCHLIST_DATASET_HPP
#define EXCHLIST_DATASET_HPP

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "exchlist/universe.hpp"

namespace exchlist {

/// Expression-style data: M genes (rows) by N samples (columns) with a
/// two-class label per sample. Values are stored row major. Each class must
/// have at least two samples.
class LabeledDataset {
 public:
  LabeledDataset(std::shared_ptr<const Universe> universe,
                 std::vector<double> values, std::vector<int> groups,
                 std::array<std::string, 2> class_names,
                 std::vector<std::string> sample_ids = {});

  int gene_count() const { return universe_->size(); }
  int sample_count() const { return static_cast<int>(groups_.size()); }

  double at(int gene, int sample) const {
    return values_[static_cast<std::size_t>(gene) * groups_.size() + sample];
  }
  std::span<const double> row(int gene) const {
    return {values_.data() + static_cast<std::size_t>(gene) * groups_.size(),
            groups_.size()};
  }

  /// 0 or 1 per sample, indexing into class_names().
  const std::vector<int>& groups() const { return groups_; }
  const std::array<std::string, 2>& class_names() const { return class_names_; }
  const std::vector<std::string>& sample_ids() const { return sample_ids_; }
  int group_size(int g) const;

  /// Group index of the named class; throws DataError if unknown.
  int group_of_class(const std::string& name) const;

  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const {
    return universe_;
  }

  /// Same data with different labels (used by label permutation).
  LabeledDataset with_groups(std::vector<int> groups) const;

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<double> values_;
  std::vector<int> groups_;
  std::array<std::string, 2> class_names_;
  std::vector<std::string> sample_ids_;
};

}  // namespace exchlist

#endif
