#include "sepinv/invariants.hpp"

#include <stdexcept>

namespace sepinv {

namespace {

// powers[i][e] = values[i]^e for e = 0..max_exp.
std::vector<std::vector<Rational>> power_table(std::span<const Rational> values, unsigned max_exp) {
  std::vector<std::vector<Rational>> table(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto& row = table[i];
    row.reserve(max_exp + 1);
    row.emplace_back(1);
    for (unsigned e = 1; e <= max_exp; ++e) row.push_back(row.back() * values[i]);
  }
  return table;
}

}  // namespace

Rational eval_invariant(const BiIndex& idx, const PointPair& p) {
  Rational sum;
  for (std::size_t i = 0; i < p.n(); ++i) {
    sum += rational_pow(p.xs()[i], idx.j()) * rational_pow(p.ys()[i], idx.k());
  }
  return sum;
}

Fingerprint fingerprint(const IndexSet& set, const PointPair& p) {
  if (set.n() != p.n()) {
    throw std::invalid_argument("index set " + set.label() + " used on a point of size " +
                                std::to_string(p.n()));
  }
  const auto xpow = power_table(p.xs(), set.max_j());
  const auto ypow = power_table(p.ys(), set.max_k());

  Fingerprint fp;
  fp.set = &set;
  fp.values.reserve(set.size());
  for (const auto& idx : set.indices()) {
    Rational sum;
    for (std::size_t i = 0; i < p.n(); ++i) sum += xpow[i][idx.j()] * ypow[i][idx.k()];
    fp.values.push_back(std::move(sum));
  }
  return fp;
}

std::string fingerprint_key(const Fingerprint& fp) {
  // Rendered rationals never contain ';', so the join is unambiguous.
  std::string key;
  for (const auto& v : fp.values) {
    key += v.to_string();
    key += ';';
  }
  return key;
}

}  // namespace sepinv
