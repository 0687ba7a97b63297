#include "exchlist/universe.hpp"

#include "exchlist/error.hpp"

namespace exchlist {

Universe::Universe(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.size() < 2) throw DataError("universe needs at least two genes");
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty()) throw DataError("empty gene identifier");
    auto [it, inserted] = index_.emplace(ids_[i], static_cast<int>(i));
    (void)it;
    if (!inserted) throw DataError("duplicate gene identifier: " + ids_[i]);
  }
}

int Universe::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DataError("unknown gene identifier: " + id);
  return it->second;
}

std::optional<int> Universe::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace exchlist
