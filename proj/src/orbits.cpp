#include "sepinv/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sepinv {

namespace {

void require_same_size(const PointPair& p, const PointPair& q) {
  if (p.n() != q.n()) {
    throw std::invalid_argument("points of different size " + std::to_string(p.n()) + " and " +
                                std::to_string(q.n()));
  }
}

// Positions of p ordered by (x, y).
std::vector<std::size_t> sorted_positions(const PointPair& p) {
  std::vector<std::size_t> order(p.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (auto c = p.xs()[a] <=> p.xs()[b]; c != 0) return c < 0;
    return p.ys()[a] < p.ys()[b];
  });
  return order;
}

}  // namespace

GridSpec::GridSpec(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("grid must contain at least one value");
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

GridSpec GridSpec::integer_range(long lo, long hi) {
  std::vector<Rational> values;
  for (long v = lo; v <= hi; ++v) values.emplace_back(v);
  return GridSpec(std::move(values));
}

std::string GridSpec::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += values_[i].to_string();
  }
  return out + "}";
}

CanonicalPoint canonical_form(const PointPair& p) {
  CanonicalPoint c;
  c.pairs.reserve(p.n());
  for (std::size_t i = 0; i < p.n(); ++i) c.pairs.emplace_back(p.xs()[i], p.ys()[i]);
  std::sort(c.pairs.begin(), c.pairs.end());
  return c;
}

bool same_orbit(const PointPair& p, const PointPair& q) {
  require_same_size(p, q);
  return canonical_form(p) == canonical_form(q);
}

std::optional<Permutation> orbit_permutation(const PointPair& p, const PointPair& q) {
  require_same_size(p, q);
  const auto ps = sorted_positions(p);
  const auto qs = sorted_positions(q);
  std::vector<std::size_t> images(p.n());
  for (std::size_t t = 0; t < p.n(); ++t) {
    if (p.xs()[ps[t]] != q.xs()[qs[t]] || p.ys()[ps[t]] != q.ys()[qs[t]]) return std::nullopt;
    images[qs[t]] = ps[t];
  }
  return Permutation(std::move(images));
}

std::uint64_t orbit_rep_count(unsigned n, std::size_t grid_size) {
  // C(cells + n - 1, n) with cells = |T|^2, built incrementally so every
  // intermediate value is itself a binomial coefficient.
  const unsigned __int128 cells = static_cast<unsigned __int128>(grid_size) * grid_size;
  if (cells == 0) return 0;
  unsigned __int128 result = 1;
  for (unsigned i = 1; i <= n; ++i) {
    result = result * (cells - 1 + i) / i;
    if (result > UINT64_MAX) throw std::overflow_error("orbit count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

OrbitRepEnumerator::OrbitRepEnumerator(unsigned n, const GridSpec& grid) : n_(n), choice_(n, 0) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  for (const auto& x : grid.values()) {
    for (const auto& y : grid.values()) cells_.emplace_back(x, y);
  }
}

bool OrbitRepEnumerator::advance() {
  // Next non-decreasing index sequence.
  std::size_t i = n_;
  while (i > 0 && choice_[i - 1] + 1 == cells_.size()) --i;
  if (i == 0) return false;
  const std::size_t v = choice_[i - 1] + 1;
  std::fill(choice_.begin() + static_cast<std::ptrdiff_t>(i - 1), choice_.end(), v);
  return true;
}

std::optional<PointPair> OrbitRepEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  xs.reserve(n_);
  ys.reserve(n_);
  for (std::size_t c : choice_) {
    xs.push_back(cells_[c].first);
    ys.push_back(cells_[c].second);
  }
  done_ = !advance();
  ++position_;
  return PointPair(std::move(xs), std::move(ys));
}

bool OrbitRepEnumerator::skip() {
  if (done_) return false;
  done_ = !advance();
  ++position_;
  return true;
}

void enumerate_orbit_reps(unsigned n, const GridSpec& grid,
                          const std::function<void(const PointPair&)>& visit) {
  OrbitRepEnumerator it(n, grid);
  while (auto p = it.next()) visit(*p);
}

}  // namespace sepinv
