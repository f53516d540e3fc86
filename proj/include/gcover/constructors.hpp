#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "gcover/errors.hpp"
#include "gcover/group_table.hpp"

namespace gcover {

namespace detail {

inline std::string power_label(const std::string& sym, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return sym + "^" + std::to_string(e);
}

/// Labels for elements a^i b^j, i in [0, n), j in [0, m), index i + n*j.
inline std::vector<std::string> two_generator_labels(std::size_t n, std::size_t m, const std::string& a,
                                                     const std::string& b) {
  std::vector<std::string> labels(n * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string s = power_label(a, i) + power_label(b, j);
      labels[i + n * j] = s.empty() ? "e" : s;
    }
  return labels;
}

template <typename Mul>
std::vector<Element> tabulate(std::size_t n, Mul&& mul) {
  std::vector<Element> product(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) product[a * n + b] = static_cast<Element>(mul(a, b));
  return product;
}

inline std::size_t pow_mod(std::size_t base, std::size_t e, std::size_t mod) {
  std::size_t r = 1 % mod;
  base %= mod;
  while (e) {
    if (e & 1U) r = r * base % mod;
    base = base * base % mod;
    e >>= 1U;
  }
  return r;
}

inline std::string permutation_label(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == static_cast<int>(s)) continue;
    out += "(";
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      if (out.back() != '(') out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

/// Permutation table over the given list (which must start with the identity and be closed).
/// Product (s*t)(i) = s(t(i)): apply t first.
inline GroupTable permutation_group(const std::vector<std::vector<int>>& perms, std::string spec) {
  const std::size_t n = perms.size();
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  const std::size_t degree = perms.front().size();
  std::vector<int> tmp(degree);
  auto product = tabulate(n, [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < degree; ++i) tmp[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
    return index_of(tmp);
  });
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(permutation_label(p));
  return GroupTable::from_product(n, std::move(product), std::move(labels), std::move(spec));
}

inline bool is_even_permutation(const std::vector<int>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

}  // namespace detail

/// Z/nZ with element i*j = (i+j) mod n.
inline GroupTable build_cyclic(std::size_t n, std::size_t cap = kDefaultTableCap) {
  if (n < 1) throw PreconditionError("cyclic group order must be at least 1");
  check_table_cap(n, cap);
  auto product = detail::tabulate(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
  return GroupTable::from_product(n, std::move(product), detail::two_generator_labels(n, 1, "a", "b"),
                                  "C" + std::to_string(n));
}

/// Dihedral group of the given ORDER 2n: <x, y | x^n = y^2 = 1, yxy = x^-1>.
/// Element x^i y^j has index i + n*j.
inline GroupTable build_dihedral(std::size_t order, std::size_t cap = kDefaultTableCap) {
  if (order < 4 || order % 2) throw PreconditionError("dihedral group order must be even and at least 4");
  check_table_cap(order, cap);
  const std::size_t n = order / 2;
  auto product = detail::tabulate(order, [n](std::size_t a, std::size_t b) {
    std::size_t i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
    std::size_t i = j1 ? (i1 + n - i2) % n : (i1 + i2) % n;
    return i + n * (j1 ^ j2);
  });
  return GroupTable::from_product(order, std::move(product), detail::two_generator_labels(n, 2, "x", "y"),
                                  "D" + std::to_string(order));
}

/// Generalized quaternion (dicyclic) group of order 2^m, m >= 3:
/// <a, b | a^(2^(m-1)) = 1, b^2 = a^(2^(m-2)), b a b^-1 = a^-1>. Element a^i b^j has index i + N*j.
inline GroupTable build_generalized_quaternion(std::size_t order, std::size_t cap = kDefaultTableCap) {
  if (order < 8 || !detail::is_power_of(order, 2))
    throw PreconditionError("generalized quaternion order must be a power of 2 and at least 8");
  check_table_cap(order, cap);
  const std::size_t n = order / 2;
  auto product = detail::tabulate(order, [n](std::size_t a, std::size_t b) {
    std::size_t i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
    std::size_t i = j1 ? (i1 + n - i2) % n : (i1 + i2) % n;
    if (j1 && j2) i = (i + n / 2) % n;
    return i + n * (j1 ^ j2);
  });
  return GroupTable::from_product(order, std::move(product), detail::two_generator_labels(n, 2, "a", "b"),
                                  "Q" + std::to_string(order));
}

/// Direct power C_p^k. Element index is the base-p digit vector, least significant digit first.
inline GroupTable build_elementary_abelian(std::size_t p, std::size_t k, std::size_t cap = kDefaultTableCap) {
  if (!detail::is_prime(p)) throw PreconditionError("elementary abelian base " + std::to_string(p) + " is not prime");
  if (k < 1) throw PreconditionError("elementary abelian rank must be at least 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    check_table_cap(n, cap);
  }
  auto product = detail::tabulate(n, [p](std::size_t a, std::size_t b) {
    std::size_t r = 0, place = 1;
    while (a || b) {
      r += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return r;
  });
  std::vector<std::string> labels(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::string s = "(";
    for (std::size_t i = 0, x = e; i < k; ++i, x /= p) s += (i ? "," : "") + std::to_string(x % p);
    labels[e] = s + ")";
  }
  return GroupTable::from_product(n, std::move(product), std::move(labels),
                                  "E(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

/// A x B with pair (i, j) encoded as i*|B| + j.
inline GroupTable build_direct_product(const GroupTable& a, const GroupTable& b, std::size_t cap = kDefaultTableCap) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  check_table_cap(n, cap);
  auto product = detail::tabulate(n, [&](std::size_t x, std::size_t y) {
    return std::size_t{a.mul(x / nb, y / nb)} * nb + b.mul(x % nb, y % nb);
  });
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
  return GroupTable::from_product(n, std::move(product), std::move(labels), a.spec() + " x " + b.spec());
}

/// C_n semidirect C_m with b a b^-1 = a^k. Element a^i b^j has index i + n*j, and
/// (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2 k^j1) b^(j1 + j2).
inline GroupTable build_semidirect_cyclic(std::size_t n, std::size_t m, std::size_t k,
                                          std::size_t cap = kDefaultTableCap) {
  if (n < 1 || m < 1) throw PreconditionError("semidirect factors must have order at least 1");
  if (std::gcd(k, n) != 1) throw PreconditionError("action exponent must be coprime to n");
  if (detail::pow_mod(k, m, n) != 1 % n) throw PreconditionError("action exponent must satisfy k^m = 1 mod n");
  check_table_cap(n * m, cap);
  std::vector<std::size_t> kpow(m);
  for (std::size_t j = 0; j < m; ++j) kpow[j] = detail::pow_mod(k, j, n);
  auto product = detail::tabulate(n * m, [&](std::size_t x, std::size_t y) {
    std::size_t i1 = x % n, j1 = x / n, i2 = y % n, j2 = y / n;
    return (i1 + i2 * kpow[j1]) % n + n * ((j1 + j2) % m);
  });
  return GroupTable::from_product(n * m, std::move(product), detail::two_generator_labels(n, m, "a", "b"),
                                  "SD(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ")");
}

/// Symmetric group on n points, n in 2..5; permutations in lexicographic order.
inline GroupTable build_symmetric(std::size_t n) {
  if (n < 2 || n > 5) throw PreconditionError("symmetric group degree must be in 2..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return detail::permutation_group(perms, "S" + std::to_string(n));
}

/// Alternating group on n points, n in 3..5; even permutations in lexicographic order.
inline GroupTable build_alternating(std::size_t n) {
  if (n < 3 || n > 5) throw PreconditionError("alternating group degree must be in 3..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    if (detail::is_even_permutation(p)) perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return detail::permutation_group(perms, "A" + std::to_string(n));
}

}  // namespace gcover
