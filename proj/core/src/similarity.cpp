#include "exchlist/similarity.hpp"

#include <algorithm>

#include "exchlist/error.hpp"

namespace exchlist {

SimilarityMatrix::SimilarityMatrix(int m) : m_(m), rows_(m) {
  if (m < 2) throw ConfigError("similarity matrix: need at least two genes");
}

void SimilarityMatrix::set(int i, int j, double value) {
  if (i == j) throw ConfigError("similarity matrix: diagonal is fixed at 1");
  if (i < 0 || j < 0 || i >= m_ || j >= m_)
    throw ConfigError("similarity matrix: index out of range");
  auto put = [&](int r, int c) {
    auto& row = rows_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const Entry& e, int idx) { return e.index < idx; });
    if (it != row.end() && it->index == c) {
      if (value == 0.0) {
        row.erase(it);
      } else {
        it->value = value;
      }
    } else if (value != 0.0) {
      row.insert(it, Entry{c, value});
    }
  };
  put(i, j);
  put(j, i);
}

double SimilarityMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= m_ || j >= m_)
    throw ConfigError("similarity matrix: index out of range");
  if (i == j) return 1.0;
  const auto& row = rows_[i];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const Entry& e, int idx) { return e.index < idx; });
  return (it != row.end() && it->index == j) ? it->value : 0.0;
}

std::size_t SimilarityMatrix::stored_pairs() const {
  std::size_t n = 0;
  for (int i = 0; i < m_; ++i) {
    for (const Entry& e : rows_[i]) n += (e.index > i);
  }
  return n;
}

void SimilarityMatrix::for_each_pair(
    const std::function<void(int, int, double)>& fn) const {
  for (int i = 0; i < m_; ++i) {
    for (const Entry& e : rows_[i]) {
      if (e.index > i) fn(i, e.index, e.value);
    }
  }
}

void SimilarityMatrix::for_each_in_column(
    int j, const std::function<void(int, double)>& fn) const {
  bool diag_done = false;
  for (const Entry& e : rows_[j]) {  // column j = row j by symmetry
    if (!diag_done && e.index > j) {
      fn(j, 1.0);
      diag_done = true;
    }
    fn(e.index, e.value);
  }
  if (!diag_done) fn(j, 1.0);
}

SimilarityMatrix SimilarityMatrix::from_upper_rows(
    int m, const std::vector<std::vector<Entry>>& upper) {
  SimilarityMatrix out(m);
  std::vector<std::size_t> count(m, 0);
  for (int i = 0; i < m; ++i) {
    for (const Entry& e : upper[i]) {
      if (e.index <= i || e.index >= m)
        throw ConfigError("similarity matrix: bad upper-triangle entry");
      if (e.value == 0.0) continue;
      ++count[i];
      ++count[e.index];
    }
  }
  for (int i = 0; i < m; ++i) out.rows_[i].reserve(count[i]);
  // pass 1 fills (i, j>i) in order; pass 2 fills (j, i<j) in order
  for (int i = 0; i < m; ++i) {
    for (const Entry& e : upper[i]) {
      if (e.value != 0.0) out.rows_[i].push_back(e);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (const Entry& e : upper[i]) {
      if (e.value != 0.0) out.rows_[e.index].push_back(Entry{i, e.value});
    }
  }
  for (int i = 0; i < m; ++i) {
    std::sort(out.rows_[i].begin(), out.rows_[i].end(),
              [](const Entry& a, const Entry& b) { return a.index < b.index; });
  }
  return out;
}

BlockSimilarity::BlockSimilarity(std::vector<int> block)
    : block_(std::move(block)) {
  if (block_.size() < 2)
    throw ConfigError("block similarity: need at least two genes");
  int max_block = 0;
  for (int b : block_) {
    if (b < 0) throw ConfigError("block similarity: negative block id");
    max_block = std::max(max_block, b);
  }
  members_.resize(max_block + 1);
  for (std::size_t i = 0; i < block_.size(); ++i)
    members_[block_[i]].push_back(static_cast<int>(i));
}

void BlockSimilarity::for_each_in_column(
    int j, const std::function<void(int, double)>& fn) const {
  for (int i : members_[block_[j]]) fn(i, 1.0);
}

}  // namespace exchlist
