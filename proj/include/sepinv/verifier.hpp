#pragma once

#include "sepinv/index_sets.hpp"
#include "sepinv/orbits.hpp"
#include "sepinv/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sepinv {

/// Result of checking an index set against every orbit of a finite grid.
struct SeparationReport {
  unsigned n = 0;
  GridSpec grid;
  IndexSet index_set;
  std::uint64_t orbit_count = 0;
  /// Every unordered pair of orbit representatives sharing a fingerprint.
  std::vector<std::pair<PointPair, PointPair>> collision_pairs;

  bool separating_on_grid() const { return collision_pairs.empty(); }
};

/// Two points in different orbits that S(n) \ {removed} cannot tell apart.
struct WitnessPair {
  PointPair p;
  PointPair q;
  BiIndex removed;
};

/// Partial result of fingerprint grouping over a slice of the enumeration:
/// fingerprint key -> (enumeration ordinal, representative), ordinals ascending.
/// Partial maps from disjoint slices merge into the same map in any order.
class CollisionGroups {
 public:
  void add(std::string key, std::uint64_t ordinal, PointPair rep);
  void merge(CollisionGroups&& other);

  /// Groups with at least two members, ordered by their smallest ordinal.
  std::vector<std::vector<PointPair>> collisions() const;

 private:
  std::map<std::string, std::vector<std::pair<std::uint64_t, PointPair>>> groups_;
};

/// Worker count from SEPINV_THREADS, falling back to the hardware concurrency.
unsigned default_thread_count();

/// Fingerprints every orbit representative of grid^n under `set` and reports
/// all fingerprint collisions. The report does not depend on `threads`.
/// Throws std::invalid_argument if set.n() != n.
SeparationReport verify_separation(const IndexSet& set, unsigned n, const GridSpec& grid,
                                   unsigned threads = default_thread_count());

/// True iff p and q agree on S(n) \ {removed}, differ on `removed`, and lie in
/// different orbits. Throws std::invalid_argument if `removed` is not in S(n)
/// or the points do not have size n.
bool validate_witness(const WitnessPair& w, unsigned n);

/// Searches the first `budget` orbit representatives of grid^n for two that
/// S(n) \ {removed} does not separate. Sound but incomplete: nullopt only means
/// nothing was found within the grid and budget.
/// Throws std::invalid_argument if `removed` is not in S(n).
std::optional<WitnessPair> find_witness(unsigned n, const BiIndex& removed, const GridSpec& grid,
                                        std::uint64_t budget);

enum class Axis { X, Y };

/// Looks for a, a' in grid^n (different multisets) with equal power sums of
/// every degree 1..n except `j`, and embeds them as (a | 0), (a' | 0) for
/// Axis::X, or (0 | a), (0 | a') for Axis::Y. At most `budget` multisets are
/// examined. Throws std::invalid_argument unless 1 <= j <= n.
std::optional<WitnessPair> lemma1_witness(unsigned n, Axis axis, unsigned j, const GridSpec& grid,
                                          std::uint64_t budget);

/// Witness for dropping f_{1,r}, r = n/2, built from two multisets b, c of
/// size r with equal power sums of degrees 1..r-1:
///   p = (1,..,1, 2,..,2 | b, c),  q = (1,..,1, 2,..,2 | c, b).
struct Lemma2Witness {
  std::vector<Rational> b;
  std::vector<Rational> c;
  WitnessPair pair;
};

/// Assembles the template from given b and c. Throws std::invalid_argument if
/// their sizes differ or are zero.
Lemma2Witness lemma2_from_blocks(std::vector<Rational> b, std::vector<Rational> c);

/// Searches grid^r (at most `budget` multisets) for b, c and assembles the
/// witness. Throws std::invalid_argument if n is odd or zero.
std::optional<Lemma2Witness> lemma2_witness(unsigned n, const GridSpec& grid, std::uint64_t budget);

struct PaperFixture {
  std::string name;
  unsigned n;
  WitnessPair pair;
};

/// The explicit non-separation witnesses for n = 3 and n = 4, in the order
/// n=3 (2,1), n=3 (1,1), n=4 (3,1), n=4 (2,1), n=4 (1,1), n=4 (1,2).
std::vector<PaperFixture> paper_fixtures();

}  // namespace sepinv
