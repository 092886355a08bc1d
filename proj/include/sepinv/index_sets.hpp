#pragma once

#include "sepinv/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sepinv {

enum class IndexSetKind { FullM, SeparatingS, Custom };

/// Sorted, duplicate-free list of double indices for points of size n.
class IndexSet {
 public:
  /// Sorts and validates; throws std::invalid_argument on duplicates or n == 0.
  IndexSet(unsigned n, IndexSetKind kind, std::vector<BiIndex> indices);

  unsigned n() const { return n_; }
  IndexSetKind kind() const { return kind_; }
  const std::vector<BiIndex>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

  bool contains(const BiIndex& idx) const;
  std::optional<std::size_t> position(const BiIndex& idx) const;

  /// Copy with `idx` removed (kind Custom). Throws std::invalid_argument if absent.
  IndexSet without(const BiIndex& idx) const;

  /// Largest j and k over the members (0 for an empty set).
  unsigned max_j() const;
  unsigned max_k() const;

  /// e.g. "S(4)", "M(3)" or "S(4)\(1,2)".
  std::string label() const { return label_; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.n_ == b.n_ && a.indices_ == b.indices_;
  }

 private:
  unsigned n_;
  IndexSetKind kind_;
  std::vector<BiIndex> indices_;
  std::string label_;
};

/// All (j,k) != (0,0) with j + k <= n: the minimal generating set.
IndexSet build_M(unsigned n);

/// All (j,k) != (0,0) with j <= n and k <= floor(n / (j+1)).
IndexSet build_S(unsigned n);

/// D(n) = sum_{j=1}^n floor(n/j), in O(sqrt n).
std::uint64_t divisor_summatory(std::uint64_t n);

struct IndexSetSizes {
  std::uint64_t size_M;
  std::uint64_t size_S;
};

/// ((n^2 + 3n)/2, n + D(n)).
IndexSetSizes size_formulas(std::uint64_t n);

}  // namespace sepinv
