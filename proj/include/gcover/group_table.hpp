#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gcover/element_set.hpp"
#include "gcover/errors.hpp"

namespace gcover {

using Element = std::uint16_t;

/// Largest group the library will tabulate unless the caller raises it.
inline constexpr std::size_t kDefaultTableCap = 4096;
/// Hard ceiling imposed by the 16-bit element encoding.
inline constexpr std::size_t kMaxTableCap = 65536;
/// Above this order associativity is checked on random triples instead of exhaustively.
inline constexpr std::size_t kExhaustiveAssociativityLimit = 256;
inline constexpr std::size_t kAssociativitySamples = 1'000'000;
inline constexpr std::uint64_t kAssociativitySeed = 0x5eed'c0feULL;

inline void check_table_cap(std::size_t order, std::size_t cap) {
  if (cap > kMaxTableCap) cap = kMaxTableCap;
  if (order > cap)
    throw CapExceeded("group order " + std::to_string(order) + " exceeds table cap " + std::to_string(cap));
}

/// A finite group stored as its full multiplication table. Index 0 is the identity.
///
/// Tables are immutable and cheap to copy: copies share one underlying table, and
/// `same_group` tests that identity (it is what subgroup parent checks compare).
class GroupTable {
 public:
  GroupTable() = default;

  /// Builds and validates a table. `product` is row-major, n*n entries.
  /// Throws PreconditionError if the data is not a group with identity 0.
  static GroupTable from_product(std::size_t order, std::vector<Element> product, std::vector<std::string> labels,
                                 std::string spec) {
    if (order == 0) throw PreconditionError("group order must be positive");
    if (order > kMaxTableCap) throw CapExceeded("group order exceeds 16-bit element encoding");
    if (product.size() != order * order) throw PreconditionError("product table has wrong size");
    if (labels.size() != order) throw PreconditionError("label array has wrong size");
    auto d = std::make_shared<Data>();
    d->order = order;
    d->product = std::move(product);
    d->labels = std::move(labels);
    d->spec = std::move(spec);
    validate(*d);
    return GroupTable(std::move(d));
  }

  std::size_t order() const noexcept { return d_ ? d_->order : 0; }
  bool empty() const noexcept { return d_ == nullptr; }

  Element mul(std::size_t a, std::size_t b) const noexcept { return d_->product[a * d_->order + b]; }
  Element inv(std::size_t a) const noexcept { return d_->inverse[a]; }
  const std::vector<Element>& product() const noexcept { return d_->product; }
  const std::vector<Element>& inverse() const noexcept { return d_->inverse; }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  const std::string& label(std::size_t a) const { return d_->labels[a]; }
  const std::string& spec() const noexcept { return d_->spec; }

  bool same_group(const GroupTable& other) const noexcept { return d_ == other.d_; }

  /// Table equality: same order, product, labels and spec.
  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->order == b.d_->order && a.d_->product == b.d_->product && a.d_->labels == b.d_->labels &&
           a.d_->spec == b.d_->spec;
  }

  /// Copy of this table carrying a different spec string.
  GroupTable with_spec(std::string spec) const {
    auto d = std::make_shared<Data>(*d_);
    d->spec = std::move(spec);
    return GroupTable(std::move(d));
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> product;
    std::vector<Element> inverse;
    std::vector<std::string> labels;
    std::string spec;
  };

  explicit GroupTable(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static void validate(Data& d) {
    const std::size_t n = d.order;
    const auto at = [&](std::size_t a, std::size_t b) -> std::size_t { return d.product[a * n + b]; };
    for (std::size_t i = 0; i < n; ++i) {
      if (at(0, i) != i || at(i, 0) != i) throw PreconditionError("index 0 is not the identity");
    }
    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t stamp = 0;
    for (std::size_t r = 0; r < n; ++r) {
      ++stamp;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t v = at(r, c);
        if (v >= n || seen[v] == stamp) throw PreconditionError("row " + std::to_string(r) + " is not a permutation");
        seen[v] = stamp;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      ++stamp;
      for (std::size_t r = 0; r < n; ++r) {
        std::size_t v = at(r, c);
        if (seen[v] == stamp) throw PreconditionError("column " + std::to_string(c) + " is not a permutation");
        seen[v] = stamp;
      }
    }
    if (n <= kExhaustiveAssociativityLimit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t ab = at(a, b);
          for (std::size_t c = 0; c < n; ++c)
            if (at(ab, c) != at(a, at(b, c))) throw PreconditionError("table is not associative");
        }
    } else {
      std::mt19937_64 rng(kAssociativitySeed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
        std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        if (at(at(a, b), c) != at(a, at(b, c))) throw PreconditionError("table is not associative");
      }
    }
    d.inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (at(a, b) == 0) {
          d.inverse[a] = static_cast<Element>(b);
          break;
        }
  }

  std::shared_ptr<const Data> d_;
};

/// Least k >= 1 with a^k = identity.
inline std::size_t element_order(const GroupTable& g, std::size_t a) {
  if (a >= g.order()) throw PreconditionError("element index out of range");
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = g.mul(x, a)) ++k;
  return k;
}

inline std::vector<std::size_t> element_orders(const GroupTable& g) {
  std::vector<std::size_t> out(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) out[a] = element_order(g, a);
  return out;
}

inline std::size_t exponent(const GroupTable& g) {
  std::size_t e = 1;
  for (std::size_t a = 0; a < g.order(); ++a) e = std::lcm(e, element_order(g, a));
  return e;
}

inline bool is_abelian(const GroupTable& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

inline bool is_cyclic(const GroupTable& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    if (element_order(g, a) == g.order()) return true;
  return false;
}

/// Elements commuting with everything.
inline ElementSet center(const GroupTable& g) {
  ElementSet z(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.set(a);
  }
  return z;
}

inline std::size_t count_elements_of_order(const GroupTable& g, std::size_t k) {
  std::size_t c = 0;
  for (std::size_t a = 0; a < g.order(); ++a) c += element_order(g, a) == k;
  return c;
}

namespace detail {

inline bool is_power_of(std::size_t n, std::size_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

/// A finite group is nilpotent iff, for every prime p, the elements of p-power order
/// number exactly the p-part of |G| (each Sylow subgroup is then unique, hence normal).
inline bool is_nilpotent(const GroupTable& g) {
  const auto orders = element_orders(g);
  for (std::size_t p : detail::prime_divisors(g.order())) {
    std::size_t ppart = 1;
    for (std::size_t n = g.order(); n % p == 0; n /= p) ppart *= p;
    std::size_t c = 0;
    for (std::size_t o : orders) c += detail::is_power_of(o, p);
    if (c != ppart) return false;
  }
  return true;
}

}  // namespace gcover
