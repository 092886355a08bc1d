#include "sepinv/index_sets.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <utility>

namespace sepinv {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
}

std::string base_label(unsigned n, IndexSetKind kind) {
  switch (kind) {
    case IndexSetKind::FullM:
      return "M(" + std::to_string(n) + ")";
    case IndexSetKind::SeparatingS:
      return "S(" + std::to_string(n) + ")";
    case IndexSetKind::Custom:
      break;
  }
  return "custom(" + std::to_string(n) + ")";
}

}  // namespace

IndexSet::IndexSet(unsigned n, IndexSetKind kind, std::vector<BiIndex> indices)
    : n_(n), kind_(kind), indices_(std::move(indices)), label_(base_label(n, kind)) {
  require_positive(n);
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("index set contains duplicates");
  }
}

bool IndexSet::contains(const BiIndex& idx) const {
  return std::binary_search(indices_.begin(), indices_.end(), idx);
}

std::optional<std::size_t> IndexSet::position(const BiIndex& idx) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), idx);
  if (it == indices_.end() || *it != idx) return std::nullopt;
  return static_cast<std::size_t>(it - indices_.begin());
}

IndexSet IndexSet::without(const BiIndex& idx) const {
  if (!contains(idx)) {
    throw std::invalid_argument(idx.to_string() + " is not a member of " + label_);
  }
  std::vector<BiIndex> rest;
  rest.reserve(indices_.size() - 1);
  std::copy_if(indices_.begin(), indices_.end(), std::back_inserter(rest),
               [&](const BiIndex& b) { return b != idx; });
  IndexSet out(n_, IndexSetKind::Custom, std::move(rest));
  out.label_ = label_ + "\\" + idx.to_string();
  return out;
}

unsigned IndexSet::max_j() const {
  unsigned m = 0;
  for (const auto& b : indices_) m = std::max(m, b.j());
  return m;
}

unsigned IndexSet::max_k() const {
  unsigned m = 0;
  for (const auto& b : indices_) m = std::max(m, b.k());
  return m;
}

IndexSet build_M(unsigned n) {
  require_positive(n);
  std::vector<BiIndex> out;
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned k = 0; j + k <= n; ++k) {
      if (j == 0 && k == 0) continue;
      out.emplace_back(j, k);
    }
  }
  return IndexSet(n, IndexSetKind::FullM, std::move(out));
}

IndexSet build_S(unsigned n) {
  require_positive(n);
  std::vector<BiIndex> out;
  for (unsigned j = 0; j <= n; ++j) {
    const unsigned kmax = n / (j + 1);
    for (unsigned k = 0; k <= kmax; ++k) {
      if (j == 0 && k == 0) continue;
      out.emplace_back(j, k);
    }
  }
  return IndexSet(n, IndexSetKind::SeparatingS, std::move(out));
}

std::uint64_t divisor_summatory(std::uint64_t n) {
  require_positive(n);
  // Count lattice points under the hyperbola jk <= n using its symmetry.
  std::uint64_t root = 0;
  while ((root + 1) * (root + 1) <= n) ++root;
  std::uint64_t sum = 0;
  for (std::uint64_t j = 1; j <= root; ++j) sum += n / j;
  return 2 * sum - root * root;
}

IndexSetSizes size_formulas(std::uint64_t n) {
  require_positive(n);
  return {(n * n + 3 * n) / 2, n + divisor_summatory(n)};
}

}  // namespace sepinv
