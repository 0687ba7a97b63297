#include "exchlist/dataset.hpp"

#include <cmath>

#include "exchlist/error.hpp"

namespace exchlist {

LabeledDataset::LabeledDataset(std::shared_ptr<const Universe> universe,
                               std::vector<double> values,
                               std::vector<int> groups,
                               std::array<std::string, 2> class_names,
                               std::vector<std::string> sample_ids)
    : universe_(std::move(universe)),
      values_(std::move(values)),
      groups_(std::move(groups)),
      class_names_(std::move(class_names)),
      sample_ids_(std::move(sample_ids)) {
  if (!universe_) throw ConfigError("dataset: null universe");
  const std::size_t m = static_cast<std::size_t>(universe_->size());
  const std::size_t n = groups_.size();
  if (values_.size() != m * n)
    throw DataError("dataset: value matrix size does not match genes*samples");
  if (class_names_[0] == class_names_[1])
    throw DataError("dataset: class names must differ");
  if (!sample_ids_.empty() && sample_ids_.size() != n)
    throw DataError("dataset: sample id count does not match samples");
  int counts[2] = {0, 0};
  for (int g : groups_) {
    if (g != 0 && g != 1) throw DataError("dataset: group labels must be 0/1");
    ++counts[g];
  }
  if (counts[0] < 2 || counts[1] < 2)
    throw DataError("dataset: each class needs at least two samples");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DataError("dataset: non-finite value");
  }
}

int LabeledDataset::group_size(int g) const {
  int n = 0;
  for (int x : groups_) n += (x == g);
  return n;
}

int LabeledDataset::group_of_class(const std::string& name) const {
  if (name == class_names_[0]) return 0;
  if (name == class_names_[1]) return 1;
  throw DataError("dataset: unknown class name: " + name);
}

LabeledDataset LabeledDataset::with_groups(std::vector<int> groups) const {
  return LabeledDataset(universe_, values_, std::move(groups), class_names_,
                        sample_ids_);
}

}  // namespace exchlist
