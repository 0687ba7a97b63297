#ifndef EXCHLIST_SIMILARITY_HPP
#define EXCHLIST_SIMILARITY_HPP

#include <functional>
#include <vector>

namespace exchlist {

/// Read-only view of a symmetric M x M relatedness matrix with unit diagonal,
/// the V factor of the list framework. Implementations must iterate columns
/// in ascending row order (the summarizers' tie break depends on it).
class SimilarityView {
 public:
  virtual ~SimilarityView() = default;
  virtual int size() const = 0;
  /// Calls fn(row, value) for every structurally nonzero entry of column j,
  /// including the diagonal (j, 1), in ascending row order.
  virtual void for_each_in_column(
      int j, const std::function<void(int, double)>& fn) const = 0;
};

/// Sparse symmetric matrix with implicit unit diagonal. Off-diagonal entries
/// equal to zero are not stored (a lookup returns 0 for them, which is
/// equivalent under every consumer of this type).
class SimilarityMatrix : public SimilarityView {
 public:
  struct Entry {
    int index;
    double value;
  };

  explicit SimilarityMatrix(int m);

  /// Sets entry (i, j) = (j, i) = value. i != j. Zero removes the entry.
  void set(int i, int j, double value);
  double at(int i, int j) const;

  /// Off-diagonal entries of row i, ascending index.
  const std::vector<Entry>& row(int i) const { return rows_[i]; }

  /// Stored pair count (i < j).
  std::size_t stored_pairs() const;

  /// Calls fn(i, j, value) for every stored pair with i < j, row major.
  void for_each_pair(const std::function<void(int, int, double)>& fn) const;

  int size() const override { return m_; }
  void for_each_in_column(
      int j, const std::function<void(int, double)>& fn) const override;

  /// Builds from per-row upper-triangle entries: upper[i] holds (j, value)
  /// with j > i, ascending. Much faster than repeated set().
  static SimilarityMatrix from_upper_rows(
      int m, const std::vector<std::vector<Entry>>& upper);

 private:
  int m_;
  std::vector<std::vector<Entry>> rows_;
};

/// V with V_ij = 1 iff i and j belong to the same block of a partition.
/// Never materialized; used for set-membership style relatedness.
class BlockSimilarity : public SimilarityView {
 public:
  /// block[i] = block id of gene i (any small non-negative ints).
  explicit BlockSimilarity(std::vector<int> block);

  int size() const override { return static_cast<int>(block_.size()); }
  void for_each_in_column(
      int j, const std::function<void(int, double)>& fn) const override;

 private:
  std::vector<int> block_;
  std::vector<std::vector<int>> members_;  // per block, ascending
};

}  // namespace exchlist

#endif
