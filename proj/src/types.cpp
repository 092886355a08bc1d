#include "sepinv/types.hpp"

#include <stdexcept>
#include <utility>

namespace sepinv {

BiIndex::BiIndex(unsigned j, unsigned k) : j_(j), k_(k) {
  if (j == 0 && k == 0) throw std::invalid_argument("(0,0) is not an invariant index");
}

std::string BiIndex::to_string() const {
  return "(" + std::to_string(j_) + "," + std::to_string(k_) + ")";
}

PointPair::PointPair(std::vector<Rational> xs, std::vector<Rational> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw std::invalid_argument("point has " + std::to_string(xs_.size()) + " x-coordinates but " +
                                std::to_string(ys_.size()) + " y-coordinates");
  }
  if (xs_.empty()) throw std::invalid_argument("point must have n >= 1");
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t img : images_) {
    if (img >= images_.size() || seen[img]) throw std::invalid_argument("not a permutation");
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(images.size());
  for (std::size_t img : images) {
    if (img == 0) throw std::invalid_argument("one-based permutation contains 0");
    zero_based.push_back(img - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_one_line() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i] + 1);
  }
  return out + "]";
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.n() != inner.n()) throw std::invalid_argument("composing permutations of different size");
  std::vector<std::size_t> images(inner.n());
  for (std::size_t i = 0; i < inner.n(); ++i) images[i] = outer(inner(i));
  return Permutation(std::move(images));
}

PointPair apply_permutation(const Permutation& sigma, const PointPair& p) {
  if (sigma.n() != p.n()) {
    throw std::invalid_argument("permutation of size " + std::to_string(sigma.n()) +
                                " applied to point of size " + std::to_string(p.n()));
  }
  std::vector<Rational> xs(p.n());
  std::vector<Rational> ys(p.n());
  for (std::size_t i = 0; i < p.n(); ++i) {
    xs[sigma(i)] = p.xs()[i];
    ys[sigma(i)] = p.ys()[i];
  }
  return PointPair(std::move(xs), std::move(ys));
}

}  // namespace sepinv
