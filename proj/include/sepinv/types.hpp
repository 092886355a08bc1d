#pragma once

#include "sepinv/rational.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sepinv {

/// Double index (j,k) naming the bisymmetric power sum f_{j,k} = sum_i x_i^j y_i^k.
///
/// Indices are ordered the way the invariants are usually listed: the pure
/// x-power sums f_{1,0}, f_{2,0}, ... first, then the pure y-power sums
/// f_{0,1}, f_{0,2}, ..., then the mixed sums ordered by k and then by j.
class BiIndex {
 public:
  /// Throws std::invalid_argument for (0,0).
  BiIndex(unsigned j, unsigned k);

  unsigned j() const { return j_; }
  unsigned k() const { return k_; }

  /// 0 for pure x-sums, 1 for pure y-sums, 2 for mixed sums.
  int group() const { return k_ == 0 ? 0 : (j_ == 0 ? 1 : 2); }

  std::string to_string() const;  // "(j,k)"

  friend bool operator==(const BiIndex&, const BiIndex&) = default;
  friend std::strong_ordering operator<=>(const BiIndex& a, const BiIndex& b) {
    if (auto c = a.group() <=> b.group(); c != 0) return c;
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.j_ <=> b.j_;
  }

 private:
  unsigned j_;
  unsigned k_;
};

/// A point (x_1..x_n, y_1..y_n) of K^n x K^n.
class PointPair {
 public:
  /// Throws std::invalid_argument if the sizes differ or are zero.
  PointPair(std::vector<Rational> xs, std::vector<Rational> ys);

  std::size_t n() const { return xs_.size(); }
  std::span<const Rational> xs() const { return xs_; }
  std::span<const Rational> ys() const { return ys_; }

  friend bool operator==(const PointPair&, const PointPair&) = default;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

/// Element of S_n, stored as 0-based images: position i is sent to images()[i].
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// Builds from 1-based one-line notation.
  static Permutation from_one_based(const std::vector<std::size_t>& images);

  std::size_t n() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// 1-based one-line image notation, e.g. "[2 1 3]".
  std::string to_one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// (outer o inner)(i) = outer(inner(i)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Diagonal action: the coordinate pair at position i moves to position sigma(i),
/// i.e. result.xs[sigma(i)] = p.xs[i] and result.ys[sigma(i)] = p.ys[i].
/// With this convention apply(compose(s, t), p) == apply(s, apply(t, p)).
/// Throws std::invalid_argument on size mismatch.
PointPair apply_permutation(const Permutation& sigma, const PointPair& p);

}  // namespace sepinv
