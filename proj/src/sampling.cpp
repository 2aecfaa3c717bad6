#include "hgforge/sampling.hpp"

#include "hgforge/derivation.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace hgforge {

MeasureSampler::MeasureSampler(std::uint64_t seed, std::uint64_t grid) : engine_(seed), grid_(grid) {
  if (grid_ == 0) throw Error("denominator grid must be positive");
}

std::uint64_t MeasureSampler::uniform(std::uint64_t bound_inclusive) {
  const std::uint64_t range = bound_inclusive + 1;
  if (range == 0) return engine_();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % range;
}

Measure<Rational> MeasureSampler::sample(std::size_t n) {
  Vector<Rational> w(static_cast<Eigen::Index>(n));
  std::uint64_t total = 0;
  do {
    total = 0;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
      const std::uint64_t x = uniform(grid_);
      w(k) = Rational(x);
      total += x;
    }
  } while (total == 0);
  w /= Rational(total);
  return Measure<Rational>(std::move(w));
}

Measure<Rational> MeasureSampler::sample_nondegenerate(const CayleyTable& table, std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto m = sample(table.n());
    if (!degeneracy_check(table, m).degenerate()) return m;
  }
  throw Error("no non-degenerate measure found in " + std::to_string(max_attempts) + " draws");
}

Measure<Rational> MeasureSampler::sample_distinct(const CayleyTable& table, std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto m = sample(table.n());
    std::set<Rational> values;
    bool ok = true;
    for (std::size_t k = 0; k < m.n() && ok; ++k) ok = m[k] != 0 && values.insert(m[k]).second;
    if (ok && !degeneracy_check(table, m).degenerate()) return m;
  }
  throw Error("no measure with distinct values found in " + std::to_string(max_attempts) + " draws");
}

Measure<Rational> uniform_on(const std::vector<bool>& members) {
  const auto size = std::count(members.begin(), members.end(), true);
  if (size == 0) throw Error("empty subgroup");
  Vector<Rational> v(static_cast<Eigen::Index>(members.size()));
  for (std::size_t k = 0; k < members.size(); ++k)
    v(static_cast<Eigen::Index>(k)) = members[k] ? Rational(1, size) : Rational(0);
  return Measure<Rational>(std::move(v));
}

std::vector<std::vector<bool>> subgroups(const CayleyTable& table) {
  const std::size_t n = table.n();
  auto close = [&](std::vector<bool> mask) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (!mask[a]) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (mask[b] && !mask[table(a, b)]) {
            mask[table(a, b)] = true;
            grew = true;
          }
        }
      }
    }
    return mask;
  };

  std::vector<bool> trivial(n, false);
  trivial[0] = true;
  std::set<std::vector<bool>> seen{trivial};
  std::vector<std::vector<bool>> out{trivial};
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    for (std::size_t g = 0; g < n; ++g) {
      if (out[idx][g]) continue;
      auto mask = out[idx];
      mask[g] = true;
      mask = close(std::move(mask));
      if (seen.insert(mask).second) out.push_back(std::move(mask));
    }
  }
  return out;
}

}  // namespace hgforge
