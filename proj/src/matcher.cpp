#include "sepinv/matcher.hpp"

#include "sepinv/index_sets.hpp"
#include "sepinv/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace sepinv {

namespace {

std::vector<Rational> power_sums(std::span<const Rational> values, std::size_t count) {
  std::vector<Rational> sums(count);
  std::vector<Rational> powers(values.begin(), values.end());
  for (std::size_t k = 0; k < count; ++k) {
    for (const auto& v : powers) sums[k] += v;
    if (k + 1 < count) {
      for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= values[i];
    }
  }
  return sums;
}

// Coordinates [begin, end) of p as a smaller point.
PointPair slice(const PointPair& p, std::size_t begin, std::size_t end) {
  return PointPair(std::vector<Rational>(p.xs().begin() + begin, p.xs().begin() + end),
                   std::vector<Rational>(p.ys().begin() + begin, p.ys().begin() + end));
}

// Permutation of size n acting as `head` on the first head.n() positions and
// fixing the rest.
Permutation extend(const Permutation& head, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::copy(head.images().begin(), head.images().end(), images.begin());
  return Permutation(std::move(images));
}

// Both points have identical x-coordinates in block form.
MatchResult match_block_form(const PointPair& p, const PointPair& q, const BlockDecomposition& blocks);

}  // namespace

std::vector<Rational> vandermonde_solve(std::span<const Rational> lambdas,
                                        std::span<const Rational> values) {
  const std::size_t r = lambdas.size();
  if (values.size() != r) throw std::invalid_argument("vandermonde_solve: length mismatch");
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      if (lambdas[a] == lambdas[b]) throw std::invalid_argument("vandermonde_solve: repeated node");
    }
  }

  // Node polynomial P(t) = prod (t - lambda_m), coefficients low to high.
  std::vector<Rational> node_poly{Rational(1)};
  for (const auto& lam : lambdas) {
    std::vector<Rational> next(node_poly.size() + 1);
    for (std::size_t d = 0; d < node_poly.size(); ++d) {
      next[d + 1] += node_poly[d];
      next[d] -= lam * node_poly[d];
    }
    node_poly = std::move(next);
  }

  // s_i = sum_j l_{i,j} v_j where l_i(t) = P(t) / ((t - lambda_i) P'(lambda_i))
  // is the Lagrange basis polynomial: sum_j l_{i,j} lambda_m^j = [i == m].
  std::vector<Rational> solution(r);
  std::vector<Rational> quotient(r);
  for (std::size_t i = 0; i < r; ++i) {
    quotient[r - 1] = node_poly[r];
    for (std::size_t d = r - 1; d > 0; --d) quotient[d - 1] = node_poly[d] + lambdas[i] * quotient[d];

    Rational scale(1);
    for (std::size_t m = 0; m < r; ++m) {
      if (m != i) scale *= lambdas[i] - lambdas[m];
    }
    Rational acc;
    for (std::size_t j = 0; j < r; ++j) acc += quotient[j] * values[j];
    solution[i] = acc / scale;
  }
  return solution;
}

std::vector<Rational> power_sums_to_elementary(std::span<const Rational> power_sums) {
  const std::size_t m = power_sums.size();
  std::vector<Rational> e(m + 1);
  e[0] = Rational(1);
  for (std::size_t k = 1; k <= m; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational term = e[k - i] * power_sums[i - 1];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return {e.begin() + 1, e.end()};
}

bool multisets_equal_by_power_sums(std::span<const Rational> b, std::span<const Rational> c) {
  if (b.size() != c.size()) throw std::invalid_argument("multisets of different size");
  // Equal elementary symmetric functions mean prod (t - b_i) = prod (t - c_i).
  const std::size_t m = b.size();
  return power_sums_to_elementary(power_sums(b, m)) == power_sums_to_elementary(power_sums(c, m));
}

BlockDecomposition block_decompose(const PointPair& p) {
  std::map<Rational, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < p.n(); ++i) positions[p.xs()[i]].push_back(i);

  std::vector<std::pair<Rational, std::vector<std::size_t>>> blocks(positions.begin(), positions.end());
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });

  BlockDecomposition out{{}, {}, Permutation::identity(p.n())};
  std::vector<std::size_t> images(p.n());
  std::size_t slot = 0;
  for (const auto& [lambda, members] : blocks) {
    out.lambdas.push_back(lambda);
    out.multiplicities.push_back(members.size());
    for (std::size_t pos : members) images[pos] = slot++;
  }
  out.arranging = Permutation(std::move(images));
  return out;
}

MatchResult match(const PointPair& p, const PointPair& q) {
  if (p.n() != q.n()) {
    throw std::invalid_argument("match: points of different size " + std::to_string(p.n()) + " and " +
                                std::to_string(q.n()));
  }
  const auto n = static_cast<unsigned>(p.n());

  // The pure x-power sums f_{1,0}..f_{n,0} fix the multiset of x-coordinates.
  const std::vector<Rational> p_sums = power_sums(p.xs(), n);
  const std::vector<Rational> q_sums = power_sums(q.xs(), n);
  for (unsigned j = 1; j <= n; ++j) {
    if (p_sums[j - 1] != q_sums[j - 1]) return MatchResult(BiIndex(j, 0));
  }

  // In characteristic 0 equal power sums give equal multisets, hence equal blocks.
  const BlockDecomposition p_blocks = block_decompose(p);
  const BlockDecomposition q_blocks = block_decompose(q);
  if (p_blocks.lambdas != q_blocks.lambdas || p_blocks.multiplicities != q_blocks.multiplicities) {
    throw std::logic_error("match: equal x-power sums but different x-multisets");
  }
  const PointPair p_arranged = apply_permutation(p_blocks.arranging, p);
  const PointPair q_arranged = apply_permutation(q_blocks.arranging, q);

  MatchResult inner = match_block_form(p_arranged, q_arranged, p_blocks);
  if (inner.is_witness()) return inner;

  // inner maps q_arranged onto p_arranged, so undo p's arrangement last.
  return MatchResult(compose(p_blocks.arranging.inverse(), compose(inner.sigma(), q_blocks.arranging)));
}

namespace {

MatchResult match_block_form(const PointPair& p, const PointPair& q, const BlockDecomposition& blocks) {
  const std::size_t n = p.n();
  const std::size_t r = blocks.lambdas.size();
  const std::size_t last = blocks.multiplicities.back();
  const std::size_t head = n - last;
  const IndexSet separating = build_S(static_cast<unsigned>(n));

  // Every (j,k) with j < r and k <= n_r lies in S(n), because r * n_r <= n.
  std::optional<BiIndex> failing;
  std::vector<std::vector<Rational>> values(last);
  for (std::size_t k = 1; k <= last; ++k) {
    for (std::size_t j = 0; j < r; ++j) {
      const BiIndex idx(static_cast<unsigned>(j), static_cast<unsigned>(k));
      if (!separating.contains(idx)) throw std::logic_error("match: block index outside S(n)");
      Rational fp = eval_invariant(idx, p);
      if (fp != eval_invariant(idx, q)) {
        if (!failing || idx < *failing) failing = idx;
      }
      values[k - 1].push_back(std::move(fp));
    }
  }
  if (failing) return MatchResult(*failing);

  // The shared invariant values determine each block's y power sums; the last
  // component is the k-th power sum of the last block, for p and q alike.
  const std::span<const Rational> p_tail = p.ys().subspan(head);
  const std::span<const Rational> q_tail = q.ys().subspan(head);
  const std::vector<Rational> direct = power_sums(p_tail, last);
  for (std::size_t k = 1; k <= last; ++k) {
    const std::vector<Rational> block_sums = vandermonde_solve(blocks.lambdas, values[k - 1]);
    if (block_sums.back() != direct[k - 1]) {
      throw std::logic_error("match: Vandermonde recovery disagrees with the block power sums");
    }
  }
  if (!multisets_equal_by_power_sums(p_tail, q_tail)) {
    throw std::logic_error("match: equal block power sums but different last blocks");
  }

  // pi: pair up the last block's y-values by sorted order.
  std::vector<std::size_t> p_order(last);
  std::vector<std::size_t> q_order(last);
  std::iota(p_order.begin(), p_order.end(), std::size_t{0});
  std::iota(q_order.begin(), q_order.end(), std::size_t{0});
  std::stable_sort(p_order.begin(), p_order.end(), [&](auto a, auto b) { return p_tail[a] < p_tail[b]; });
  std::stable_sort(q_order.begin(), q_order.end(), [&](auto a, auto b) { return q_tail[a] < q_tail[b]; });
  std::vector<std::size_t> pi_images(n);
  std::iota(pi_images.begin(), pi_images.end(), std::size_t{0});
  for (std::size_t t = 0; t < last; ++t) pi_images[head + q_order[t]] = head + p_order[t];
  const Permutation pi(std::move(pi_images));

  if (head == 0) return MatchResult(pi);

  // Recurse on the first n - n_r coordinates with S(n - n_r).
  const PointPair q_matched = apply_permutation(pi, q);
  MatchResult rest = match(slice(p, 0, head), slice(q_matched, 0, head));
  if (rest.is_witness()) return rest;
  return MatchResult(compose(extend(rest.sigma(), n), pi));
}

}  // namespace

}  // namespace sepinv
