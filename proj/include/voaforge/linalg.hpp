#pragma once

#include <map>
#include <string>
#include <vector>

#include "voaforge/scalar.hpp"

namespace voaforge {

/// Sparse vector keyed by canonical basis strings; zero entries are never
/// stored (addition prunes them).
struct SparseVector {
  std::map<std::string, Scalar> entries;

  void add(const std::string& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = entries.find(key);
    if (it == entries.end()) {
      entries.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) entries.erase(it);
    }
  }
  Scalar get(const std::string& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? Scalar() : it->second;
  }
  bool is_zero() const { return entries.empty(); }
  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries == b.entries;
  }
};

/// A matrix as an ordered list of sparse rows; the column basis is the
/// (ordered) union of all keys appearing in the rows unless registered
/// explicitly.
class SparseMatrix {
 public:
  void add_row(SparseVector row) { rows_.push_back(std::move(row)); }
  void register_column(const std::string& key) { extra_cols_.push_back(key); }

  std::size_t row_count() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }

  /// Ordered column basis: registered columns plus every key that occurs.
  std::vector<std::string> column_keys() const;

  /// Exact rank over Q(i), fraction-free (Bareiss) elimination on the
  /// denominator-cleared Gaussian-integer matrix.
  std::size_t rank() const;

  /// Exact basis of the null space; size == #columns - rank.
  std::vector<SparseVector> kernel_basis() const;

  SparseMatrix transpose() const;

  /// Matrix * vector, treating the vector as a column over column_keys().
  SparseVector apply(const SparseVector& v) const;

 private:
  std::vector<SparseVector> rows_;
  std::vector<std::string> extra_cols_;
};

}  // namespace voaforge
