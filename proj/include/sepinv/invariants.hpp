#pragma once

#include "sepinv/index_sets.hpp"
#include "sepinv/rational.hpp"
#include "sepinv/types.hpp"

#include <string>
#include <vector>

namespace sepinv {

/// Values of the invariants of one index set at one point, in the set's order.
/// `set` is non-owning; the IndexSet must outlive the fingerprint.
struct Fingerprint {
  const IndexSet* set = nullptr;
  std::vector<Rational> values;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return (a.set == b.set || (a.set && b.set && *a.set == *b.set)) && a.values == b.values;
  }
};

/// f_{j,k}(p) = sum_i x_i^j y_i^k, with 0^0 = 1.
Rational eval_invariant(const BiIndex& idx, const PointPair& p);

/// Evaluates every member of `set` at p, sharing the coordinate powers.
/// Throws std::invalid_argument if set.n() != p.n().
Fingerprint fingerprint(const IndexSet& set, const PointPair& p);

/// Canonical string for hash grouping; injective on fingerprints of one set.
std::string fingerprint_key(const Fingerprint& fp);

}  // namespace sepinv
