#include "sepinv/verifier.hpp"

#include "sepinv/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace sepinv {

namespace {

// Grid values ordered 0, 1, -1, 2, -2, ... so searches try small magnitudes first.
std::vector<Rational> magnitude_order(const GridSpec& grid) {
  std::vector<Rational> values = grid.values();
  std::stable_sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) {
    const Rational abs_a = a.sign() < 0 ? -a : a;
    const Rational abs_b = b.sign() < 0 ? -b : b;
    if (abs_a != abs_b) return abs_a < abs_b;
    return a.sign() > b.sign();
  });
  return values;
}

// Multisets of size m over `values`, as non-decreasing index sequences.
class MultisetEnumerator {
 public:
  MultisetEnumerator(std::size_t m, std::vector<Rational> values)
      : values_(std::move(values)), choice_(m, 0), done_(values_.empty()) {}

  std::optional<std::vector<Rational>> next() {
    if (done_) return std::nullopt;
    std::vector<Rational> out;
    out.reserve(choice_.size());
    for (std::size_t c : choice_) out.push_back(values_[c]);
    std::size_t i = choice_.size();
    while (i > 0 && choice_[i - 1] + 1 == values_.size()) --i;
    if (i == 0) {
      done_ = true;
    } else {
      std::fill(choice_.begin() + static_cast<std::ptrdiff_t>(i - 1), choice_.end(), choice_[i - 1] + 1);
    }
    return out;
  }

 private:
  std::vector<Rational> values_;
  std::vector<std::size_t> choice_;
  bool done_;
};

std::string power_sum_key(const std::vector<Rational>& values, const std::vector<unsigned>& degrees) {
  std::string key;
  for (unsigned d : degrees) {
    Rational sum;
    for (const auto& v : values) sum += rational_pow(v, d);
    key += sum.to_string();
    key += ';';
  }
  return key;
}

// First pair of distinct multisets of size m with equal power sums in `degrees`,
// examining at most `budget` multisets.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> first_power_sum_collision(
    std::size_t m, const GridSpec& grid, const std::vector<unsigned>& degrees, std::uint64_t budget,
    const std::function<bool(const std::vector<Rational>&, const std::vector<Rational>&)>& accept) {
  MultisetEnumerator it(m, magnitude_order(grid));
  std::unordered_map<std::string, std::vector<std::vector<Rational>>> seen;
  for (std::uint64_t examined = 0; examined < budget; ++examined) {
    auto current = it.next();
    if (!current) break;
    auto& bucket = seen[power_sum_key(*current, degrees)];
    for (const auto& earlier : bucket) {
      if (accept(earlier, *current)) return std::make_pair(earlier, *current);
    }
    bucket.push_back(std::move(*current));
  }
  return std::nullopt;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

PointPair point(std::initializer_list<long> xs, std::initializer_list<long> ys) {
  return PointPair(std::vector<Rational>(xs.begin(), xs.end()), std::vector<Rational>(ys.begin(), ys.end()));
}

}  // namespace

void CollisionGroups::add(std::string key, std::uint64_t ordinal, PointPair rep) {
  auto& group = groups_[std::move(key)];
  auto pos = std::lower_bound(group.begin(), group.end(), ordinal,
                              [](const auto& entry, std::uint64_t o) { return entry.first < o; });
  group.emplace(pos, ordinal, std::move(rep));
}

void CollisionGroups::merge(CollisionGroups&& other) {
  for (auto& [key, members] : other.groups_) {
    for (auto& [ordinal, rep] : members) add(key, ordinal, std::move(rep));
  }
  other.groups_.clear();
}

std::vector<std::vector<PointPair>> CollisionGroups::collisions() const {
  std::vector<const std::vector<std::pair<std::uint64_t, PointPair>>*> multi;
  for (const auto& [key, members] : groups_) {
    if (members.size() >= 2) multi.push_back(&members);
  }
  std::sort(multi.begin(), multi.end(), [](auto a, auto b) { return a->front().first < b->front().first; });
  std::vector<std::vector<PointPair>> out;
  for (const auto* members : multi) {
    auto& group = out.emplace_back();
    for (const auto& [ordinal, rep] : *members) group.push_back(rep);
  }
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("SEPINV_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SeparationReport verify_separation(const IndexSet& set, unsigned n, const GridSpec& grid, unsigned threads) {
  if (set.n() != n) {
    throw std::invalid_argument("index set " + set.label() + " does not belong to n = " + std::to_string(n));
  }
  const std::uint64_t total = orbit_rep_count(n, grid.size());
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(1, total)));

  // Worker w handles ordinals congruent to w mod `threads`.
  std::vector<CollisionGroups> partial(threads);
  auto work = [&](unsigned w) {
    OrbitRepEnumerator it(n, grid);
    CollisionGroups& groups = partial[w];
    for (std::uint64_t ordinal = 0; ordinal < total; ++ordinal) {
      if (ordinal % threads != w) {
        it.skip();
        continue;
      }
      auto rep = it.next();
      std::string key = fingerprint_key(fingerprint(set, *rep));
      groups.add(std::move(key), ordinal, std::move(*rep));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  CollisionGroups merged;
  for (auto& g : partial) merged.merge(std::move(g));

  SeparationReport report{n, grid, set, total, {}};
  for (const auto& group : merged.collisions()) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) report.collision_pairs.emplace_back(group[a], group[b]);
    }
  }
  return report;
}

bool validate_witness(const WitnessPair& w, unsigned n) {
  const IndexSet full = build_S(n);
  if (!full.contains(w.removed)) {
    throw std::invalid_argument(w.removed.to_string() + " is not a member of " + full.label());
  }
  if (w.p.n() != n || w.q.n() != n) {
    throw std::invalid_argument("witness points must have size " + std::to_string(n));
  }
  const Fingerprint fp = fingerprint(full, w.p);
  const Fingerprint fq = fingerprint(full, w.q);
  for (std::size_t t = 0; t < full.size(); ++t) {
    const bool equal = fp.values[t] == fq.values[t];
    if (full.indices()[t] == w.removed ? equal : !equal) return false;
  }
  return !same_orbit(w.p, w.q);
}

std::optional<WitnessPair> find_witness(unsigned n, const BiIndex& removed, const GridSpec& grid,
                                        std::uint64_t budget) {
  const IndexSet reduced = build_S(n).without(removed);
  OrbitRepEnumerator it(n, grid);
  std::unordered_map<std::string, std::vector<PointPair>> seen;
  for (std::uint64_t examined = 0; examined < budget; ++examined) {
    auto rep = it.next();
    if (!rep) break;
    auto& bucket = seen[fingerprint_key(fingerprint(reduced, *rep))];
    for (const auto& earlier : bucket) {
      WitnessPair w{earlier, *rep, removed};
      if (validate_witness(w, n)) return w;
    }
    bucket.push_back(std::move(*rep));
  }
  return std::nullopt;
}

std::optional<WitnessPair> lemma1_witness(unsigned n, Axis axis, unsigned j, const GridSpec& grid,
                                          std::uint64_t budget) {
  if (j < 1 || j > n) {
    throw std::invalid_argument("lemma1: j must lie in 1.." + std::to_string(n));
  }
  std::vector<unsigned> degrees;
  for (unsigned d = 1; d <= n; ++d) {
    if (d != j) degrees.push_back(d);
  }
  const BiIndex removed = axis == Axis::X ? BiIndex(j, 0) : BiIndex(0, j);
  auto embed = [&](const std::vector<Rational>& a) {
    std::vector<Rational> zeros(n);
    std::vector<Rational> values = sorted(a);
    return axis == Axis::X ? PointPair(std::move(values), std::move(zeros))
                           : PointPair(std::move(zeros), std::move(values));
  };
  std::optional<WitnessPair> found;
  first_power_sum_collision(n, grid, degrees, budget, [&](const auto& a, const auto& a2) {
    WitnessPair w{embed(a), embed(a2), removed};
    if (!validate_witness(w, n)) return false;
    found = std::move(w);
    return true;
  });
  return found;
}

Lemma2Witness lemma2_from_blocks(std::vector<Rational> b, std::vector<Rational> c) {
  if (b.size() != c.size() || b.empty()) {
    throw std::invalid_argument("lemma2: b and c must be non-empty and of equal size");
  }
  const std::size_t r = b.size();
  std::vector<Rational> xs(r, Rational(1));
  xs.resize(2 * r, Rational(2));
  std::vector<Rational> p_ys = b;
  p_ys.insert(p_ys.end(), c.begin(), c.end());
  std::vector<Rational> q_ys = c;
  q_ys.insert(q_ys.end(), b.begin(), b.end());
  WitnessPair pair{PointPair(xs, std::move(p_ys)), PointPair(xs, std::move(q_ys)),
                   BiIndex(1, static_cast<unsigned>(r))};
  return Lemma2Witness{std::move(b), std::move(c), std::move(pair)};
}

std::optional<Lemma2Witness> lemma2_witness(unsigned n, const GridSpec& grid, std::uint64_t budget) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("lemma2: n must be even and >= 2");
  const unsigned r = n / 2;
  std::vector<unsigned> degrees;
  for (unsigned d = 1; d < r; ++d) degrees.push_back(d);

  std::optional<Lemma2Witness> found;
  first_power_sum_collision(r, grid, degrees, budget, [&](const auto& b, const auto& c) {
    Lemma2Witness w = lemma2_from_blocks(sorted(b), sorted(c));
    if (!validate_witness(w.pair, n)) return false;
    found = std::move(w);
    return true;
  });
  return found;
}

std::vector<PaperFixture> paper_fixtures() {
  return {
      {"n=3 drop (2,1)", 3, {point({1, 2, 3}, {1, 0, 2}), point({1, 2, 3}, {0, 2, 1}), BiIndex(2, 1)}},
      {"n=3 drop (1,1)", 3, {point({1, 2, 3}, {5, 0, 8}), point({1, 2, 3}, {0, 8, 5}), BiIndex(1, 1)}},
      {"n=4 drop (3,1)", 4,
       {point({1, 2, 3, 4}, {0, 3, 1, 4}), point({1, 2, 3, 4}, {1, 0, 4, 3}), BiIndex(3, 1)}},
      {"n=4 drop (2,1)", 4,
       {point({3, 1, 0, -5}, {6, 0, 10, 1}), point({3, 1, 0, -5}, {1, 10, 6, 0}), BiIndex(2, 1)}},
      {"n=4 drop (1,1)", 4,
       {point({-1, 0, 1, 2}, {1, 7, -3, 9}), point({-1, 0, 1, 2}, {-3, 1, 9, 7}), BiIndex(1, 1)}},
      {"n=4 drop (1,2)", 4,
       {point({1, 1, 2, 2}, {0, 2, 1, 1}), point({1, 1, 2, 2}, {1, 1, 0, 2}), BiIndex(1, 2)}},
  };
}

}  // namespace sepinv
