#pragma once

#include "sepinv/rational.hpp"
#include "sepinv/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace sepinv {

/// The multiset of coordinate pairs (x_i, y_i), sorted by x then y.
/// Two points lie in the same S_n-orbit iff their canonical forms are equal.
struct CanonicalPoint {
  std::vector<std::pair<Rational, Rational>> pairs;

  friend bool operator==(const CanonicalPoint&, const CanonicalPoint&) = default;
};

/// Allowed coordinate values of a finite grid; sorted ascending, duplicate-free.
class GridSpec {
 public:
  /// Sorts and removes duplicates. Throws std::invalid_argument if empty.
  explicit GridSpec(std::vector<Rational> values);

  /// Integers lo..hi inclusive.
  static GridSpec integer_range(long lo, long hi);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::string to_string() const;  // "{0,1,2}"

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  std::vector<Rational> values_;
};

CanonicalPoint canonical_form(const PointPair& p);

/// Throws std::invalid_argument on size mismatch.
bool same_orbit(const PointPair& p, const PointPair& q);

/// Some sigma with apply_permutation(sigma, q) == p, or nullopt when the
/// points lie in different orbits. Throws std::invalid_argument on size mismatch.
std::optional<Permutation> orbit_permutation(const PointPair& p, const PointPair& q);

/// C(|T|^2 + n - 1, n): number of S_n-orbits of points with coordinates in T.
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t orbit_rep_count(unsigned n, std::size_t grid_size);

/// Streams one representative per S_n-orbit of grid points, as multisets of n
/// pairs drawn from the sorted list T x T. Each emitted point is already in
/// canonical (sorted) order; emission order is lexicographic in the pair indices.
class OrbitRepEnumerator {
 public:
  /// Throws std::invalid_argument if n == 0.
  OrbitRepEnumerator(unsigned n, const GridSpec& grid);

  /// Next representative, or nullopt once exhausted.
  std::optional<PointPair> next();

  /// Advances past the next representative without building it.
  bool skip();

  /// Zero-based ordinal of the representative that next() returns.
  std::uint64_t position() const { return position_; }

 private:
  bool advance();

  unsigned n_;
  std::vector<std::pair<Rational, Rational>> cells_;
  std::vector<std::size_t> choice_;
  bool done_ = false;
  std::uint64_t position_ = 0;
};

/// Calls `visit` on every representative in enumeration order.
void enumerate_orbit_reps(unsigned n, const GridSpec& grid,
                          const std::function<void(const PointPair&)>& visit);

}  // namespace sepinv
