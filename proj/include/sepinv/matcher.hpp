#pragma once

#include "sepinv/rational.hpp"
#include "sepinv/types.hpp"

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace sepinv {

/// Grouping of a point's x-coordinates into r blocks of equal value.
///
/// Blocks are ordered by multiplicity, largest first; blocks of equal
/// multiplicity by ascending value. `arranging` moves the point into block
/// form, i.e. apply_permutation(arranging, p).xs() reads
/// lambdas[0] (multiplicities[0] times), lambdas[1], ..., lambdas[r-1].
/// Within a block the original relative order of positions is kept.
struct BlockDecomposition {
  std::vector<Rational> lambdas;
  std::vector<std::size_t> multiplicities;
  Permutation arranging;
};

/// Outcome of match(): either a permutation carrying q onto p, or an index
/// of the separating set whose invariant takes different values at p and q.
class MatchResult {
 public:
  explicit MatchResult(Permutation sigma) : value_(std::move(sigma)) {}
  explicit MatchResult(BiIndex witness) : value_(witness) {}

  bool is_permutation() const { return std::holds_alternative<Permutation>(value_); }
  bool is_witness() const { return std::holds_alternative<BiIndex>(value_); }
  const Permutation& sigma() const { return std::get<Permutation>(value_); }
  const BiIndex& witness() const { return std::get<BiIndex>(value_); }

 private:
  std::variant<Permutation, BiIndex> value_;
};

/// Solves sum_i lambdas[i]^j * s[i] = values[j] for j = 0..r-1.
/// Throws std::invalid_argument on repeated nodes or mismatched lengths.
std::vector<Rational> vandermonde_solve(std::span<const Rational> lambdas,
                                        std::span<const Rational> values);

/// Newton's identities: the first m power sums of m values give their
/// elementary symmetric functions e_1..e_m.
std::vector<Rational> power_sums_to_elementary(std::span<const Rational> power_sums);

/// True iff the two equal-length lists agree as multisets, decided from the
/// first m power sums. Throws std::invalid_argument on length mismatch.
bool multisets_equal_by_power_sums(std::span<const Rational> b, std::span<const Rational> c);

BlockDecomposition block_decompose(const PointPair& p);

/// Decides orbit equivalence of p and q using only the invariants of S(n),
/// following the induction on n: align the x-multisets, move both points into
/// block form, recover the last block's y power sums through a Vandermonde
/// solve, match that block, and recurse on the remaining coordinates.
///
/// Returns sigma with apply_permutation(sigma, q) == p when p and q share an
/// orbit. Otherwise returns an index (j,k) of S(n) with f_{j,k}(p) != f_{j,k}(q):
/// the smallest failing f_{j,0} when the x-multisets differ, otherwise the
/// smallest failing index among those checked at the level where the
/// recursion stopped.
/// Throws std::invalid_argument on size mismatch.
MatchResult match(const PointPair& p, const PointPair& q);

}  // namespace sepinv
