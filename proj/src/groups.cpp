#include "hgforge/groups.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hgforge {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Partitions of e as non-increasing part lists.
void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

bool canonical_less(const InvariantFactors& a, const InvariantFactors& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
}

std::vector<std::size_t> sorted_orders_of(const InvariantFactors& factors) {
  std::size_t n = 1;
  for (auto d : factors) n *= d;
  std::vector<std::size_t> orders;
  orders.reserve(n);
  std::vector<std::size_t> digits(factors.size(), 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t order = 1;
    for (std::size_t t = 0; t < factors.size(); ++t)
      order = std::lcm(order, factors[t] / std::gcd(digits[t], factors[t]));
    orders.push_back(order);
    for (std::size_t t = 0; t < factors.size(); ++t) {
      if (++digits[t] < factors[t]) break;
      digits[t] = 0;
    }
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

std::vector<InvariantFactors> enumerate_abelian_groups(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error("group order must be positive");
  if (n > cap)
    throw Error("group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  // Per prime, the possible exponent partitions; the invariant factors are
  // then assembled from the k-th largest part of every prime.
  const auto primes = factorize(n);
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (const auto& [p, e] : primes) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> current;
    partitions(e, e, current, parts);
    choices.push_back(std::move(parts));
  }

  std::vector<InvariantFactors> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::size_t length = 0;
    for (std::size_t q = 0; q < choices.size(); ++q)
      length = std::max(length, choices[q][pick[q]].size());
    InvariantFactors factors(length, 1);
    for (std::size_t q = 0; q < choices.size(); ++q) {
      const auto& parts = choices[q][pick[q]];
      for (std::size_t t = 0; t < parts.size(); ++t)
        factors[length - 1 - t] *= ipow(primes[q].first, parts[t]);
    }
    out.push_back(std::move(factors));

    std::size_t q = 0;
    for (; q < choices.size(); ++q) {
      if (++pick[q] < choices[q].size()) break;
      pick[q] = 0;
    }
    if (q == choices.size()) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint32_t> data)
    : n_(n), data_(std::move(data)), left_div_(n * n) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) left_div_[i * n_ + data_[i * n_ + j]] = static_cast<std::uint32_t>(j);
}

CayleyTable CayleyTable::from_one_based(const std::vector<std::vector<std::size_t>>& rows) {
  auto report = verify_group_axioms(rows);
  if (!report.holds) {
    const auto& w = report.witnesses.front();
    throw InvalidTable("not an abelian group table (" + w.what + ")", std::move(report));
  }
  const std::size_t n = rows.size();
  if (find_identity(rows) != 1) {
    PropertyReport bad{Property::GroupAxioms, false, 1,
                       {{{find_identity(rows)}, "identity at state 1", "1",
                         std::to_string(find_identity(rows))}}};
    throw InvalidTable("identity element must be state 1", std::move(bad));
  }
  std::vector<std::uint32_t> data(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) data[i * n + j] = static_cast<std::uint32_t>(rows[i][j] - 1);
  return CayleyTable(n, std::move(data));
}

std::vector<std::vector<std::size_t>> CayleyTable::to_one_based() const {
  std::vector<std::vector<std::size_t>> rows(n_, std::vector<std::size_t>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j) + 1;
  return rows;
}

CayleyTable cayley_table(const InvariantFactors& factors) {
  std::size_t n = 1;
  for (auto d : factors) {
    if (d < 2) throw Error("invariant factors must be >= 2");
    n *= d;
  }
  for (std::size_t t = 0; t + 1 < factors.size(); ++t)
    if (factors[t + 1] % factors[t] != 0) throw Error("invariant factors must divide each other");

  auto decode = [&](std::size_t s) {
    std::vector<std::size_t> digits(factors.size());
    for (std::size_t t = 0; t < factors.size(); ++t) {
      digits[t] = s % factors[t];
      s /= factors[t];
    }
    return digits;
  };
  std::vector<std::uint32_t> data(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = decode(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto y = decode(j);
      std::size_t s = 0, radix = 1;
      for (std::size_t t = 0; t < factors.size(); ++t) {
        s += ((x[t] + y[t]) % factors[t]) * radix;
        radix *= factors[t];
      }
      data[i * n + j] = static_cast<std::uint32_t>(s);
    }
  }
  return CayleyTable(n, std::move(data));
}

PermutationRep regular_representation(const CayleyTable& table) {
  const std::size_t n = table.n();
  PermutationRep rep;
  rep.matrices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PermutationRep::Permutation g(static_cast<int>(n));
    for (std::size_t q = 0; q < n; ++q) g.indices()(static_cast<Eigen::Index>(q)) = static_cast<int>(table(i, q));
    rep.matrices.push_back(std::move(g));
  }
  return rep;
}

PropertyReport verify_group_axioms(const std::vector<std::vector<std::size_t>>& rows,
                                   const CheckOptions& opts) {
  detail::WitnessSink sink(Property::GroupAxioms, opts);
  const std::size_t n = rows.size();
  auto done = [&] { return std::move(sink).finish(); };

  if (n == 0) {
    sink.add({{}, "range", "n >= 1", "0"});
    return done();
  }
  bool in_range = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      sink.add({{i + 1}, "range", std::to_string(n) + " entries", std::to_string(rows[i].size())});
      return done();
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] < 1 || rows[i][j] > n) {
        sink.add({{i + 1, j + 1}, "range", "1.." + std::to_string(n), std::to_string(rows[i][j])});
        in_range = false;
      }
    }
  }
  if (!in_range) return done();

  bool latin = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> row_seen(n + 1, 0), col_seen(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_seen[rows[i][j]]++) {
        sink.add({{i + 1, j + 1}, "latin-square", "row without repeats",
                  "row " + std::to_string(i + 1) + " repeats " + std::to_string(rows[i][j])});
        latin = false;
      }
      if (col_seen[rows[j][i]]++) {
        sink.add({{j + 1, i + 1}, "latin-square", "column without repeats",
                  "column " + std::to_string(i + 1) + " repeats " + std::to_string(rows[j][i])});
        latin = false;
      }
    }
  }
  if (!latin) return done();

  bool associative = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t lhs = rows[rows[i][j] - 1][k];
        const std::size_t rhs = rows[i][rows[j][k] - 1];
        if (lhs != rhs) {
          sink.add({{i + 1, j + 1, k + 1}, "associativity", std::to_string(lhs), std::to_string(rhs)});
          associative = false;
        }
      }
  if (!associative) return done();

  bool commutative = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i][j] != rows[j][i]) {
        sink.add({{i + 1, j + 1}, "commutativity", std::to_string(rows[i][j]), std::to_string(rows[j][i])});
        commutative = false;
      }
  if (!commutative) return done();

  if (find_identity(rows) == 0) sink.add({{}, "identity", "an identity state", "none"});
  return done();
}

std::size_t find_identity(const std::vector<std::vector<std::size_t>>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = rows[e].size() == n;
    for (std::size_t j = 0; ok && j < n; ++j)
      ok = rows[e][j] == j + 1 && rows[j].size() == n && rows[j][e] == j + 1;
    if (ok) return e + 1;
  }
  return 0;
}

std::vector<std::size_t> element_orders(const CayleyTable& table) {
  std::vector<std::size_t> orders(table.n());
  for (std::size_t x = 0; x < table.n(); ++x) {
    std::size_t power = x, order = 1;
    while (power != 0) {
      power = table(power, x);
      ++order;
    }
    orders[x] = order;
  }
  return orders;
}

InvariantFactors canonical_form(const CayleyTable& table) {
  auto orders = element_orders(table);
  std::sort(orders.begin(), orders.end());
  for (auto& factors : enumerate_abelian_groups(table.n(), table.n())) {
    if (sorted_orders_of(factors) == orders) return factors;
  }
  // Unreachable for a valid abelian table: the order multiset always matches
  // exactly one class.
  throw Error("no abelian group of order " + std::to_string(table.n()) + " matches the table");
}

}  // namespace hgforge
