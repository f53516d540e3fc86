#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gcover/errors.hpp"
#include "gcover/group_table.hpp"
#include "gcover/subgroup_lattice.hpp"

namespace gcover {

/// Largest order accepted by the backtracking isomorphism test.
inline constexpr std::size_t kIsomorphismCap = 24;

struct QuotientDescriptor {
  GroupTable parent;
  Subgroup kernel;
  std::vector<std::size_t> coset_of;         ///< element index -> coset index
  std::vector<std::size_t> representatives;  ///< coset index -> least element of the coset
  GroupTable quotient;
};

/// G/N on coset indices. Cosets are numbered by their least element, so the kernel is coset 0.
inline QuotientDescriptor quotient(const GroupTable& g, const Subgroup& n) {
  if (!n.parent().same_group(g)) throw ParentMismatch();
  if (!is_normal(g, n)) throw PreconditionError("quotient kernel is not normal");
  QuotientDescriptor q;
  q.parent = g;
  q.kernel = n;
  const std::size_t none = g.order();
  q.coset_of.assign(g.order(), none);
  const auto kernel = n.members().elements();
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != none) continue;
    const std::size_t c = q.representatives.size();
    q.representatives.push_back(x);
    for (std::size_t k : kernel) q.coset_of[g.mul(x, k)] = c;
  }
  const std::size_t m = q.representatives.size();
  std::vector<Element> product(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      product[a * m + b] = static_cast<Element>(q.coset_of[g.mul(q.representatives[a], q.representatives[b])]);
  std::vector<std::string> labels;
  for (std::size_t r : q.representatives) labels.push_back(g.label(r) + "N");
  q.quotient = GroupTable::from_product(m, std::move(product), std::move(labels), g.spec() + " / N");
  return q;
}

/// Full scan: coset_of[x y] equals the quotient product of the cosets of x and y for all x, y,
/// and every coset has |N| elements.
inline bool quotient_well_defined(const QuotientDescriptor& q) {
  const GroupTable& g = q.parent;
  if (q.coset_of.empty() || q.coset_of[0] != 0) return false;
  std::vector<std::size_t> block(q.quotient.order(), 0);
  for (std::size_t c : q.coset_of) ++block[c];
  for (std::size_t b : block)
    if (b != q.kernel.size()) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (q.coset_of[g.mul(x, y)] != q.quotient.mul(q.coset_of[x], q.coset_of[y])) return false;
  return true;
}

inline bool is_klein_four(const GroupTable& q) { return q.order() == 4 && exponent(q) == 2; }
inline bool is_elem_abelian_8(const GroupTable& q) { return q.order() == 8 && exponent(q) == 2; }

/// Abelian of prime exponent (the trivial group excluded).
inline bool is_elementary_abelian(const GroupTable& g) {
  return g.order() > 1 && detail::is_prime(exponent(g)) && is_abelian(g);
}

/// Normal subgroups N whose quotient is C2 x C2, as lattice indices.
inline std::vector<std::size_t> klein_kernels(const GroupTable& g, const SubgroupLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t i : l.normal_indices()) {
    if (l[i].size() * 4 != g.order()) continue;
    if (is_klein_four(quotient(g, l[i]).quotient)) out.push_back(i);
  }
  return out;
}

inline std::size_t count_klein_quotients(const GroupTable& g, const SubgroupLattice& l) {
  return klein_kernels(g, l).size();
}

/// Normal subgroups of index 8 with exponent-2 quotient.
inline std::vector<std::size_t> elem_abelian_8_kernels(const GroupTable& g, const SubgroupLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t i : l.normal_indices()) {
    if (l[i].size() * 8 != g.order()) continue;
    if (is_elem_abelian_8(quotient(g, l[i]).quotient)) out.push_back(i);
  }
  return out;
}

/// Same group with element i renamed to perm[i]; perm[0] must be 0.
inline GroupTable relabel(const GroupTable& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n || perm[0] != 0) throw PreconditionError("relabeling must fix the identity");
  std::vector<Element> product(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[perm[a]] = g.label(a);
    for (std::size_t b = 0; b < n; ++b) product[perm[a] * n + perm[b]] = static_cast<Element>(perm[g.mul(a, b)]);
  }
  return GroupTable::from_product(n, std::move(product), std::move(labels), g.spec());
}

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const GroupTable& a, const GroupTable& b)
      : a_(a), b_(b), gens_(greedy_generators(a)), orders_a_(element_orders(a)), orders_b_(element_orders(b)) {}

  bool run() {
    std::vector<std::size_t> map(a_.order(), kUnset);
    std::vector<bool> used(b_.order(), false);
    map[0] = 0;
    used[0] = true;
    return extend(0, map, used);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Assign the image of generator t, then propagate phi(u x) = phi(u) phi(x) over the
  // subgroup generated by gens[0..t]. Any clash or non-injective image rejects the branch.
  bool extend(std::size_t t, const std::vector<std::size_t>& map, const std::vector<bool>& used) {
    if (t == gens_.size()) return true;
    const std::size_t x = gens_[t];
    if (map[x] != kUnset) return extend(t + 1, map, used);
    for (std::size_t y = 1; y < b_.order(); ++y) {
      if (used[y] || orders_b_[y] != orders_a_[x]) continue;
      auto m = map;
      auto u = used;
      m[x] = y;
      u[y] = true;
      if (propagate(t, m, u) && extend(t + 1, m, u)) return true;
    }
    return false;
  }

  bool propagate(std::size_t t, std::vector<std::size_t>& map, std::vector<bool>& used) const {
    std::vector<std::size_t> queue;
    for (std::size_t e = 0; e < a_.order(); ++e)
      if (map[e] != kUnset) queue.push_back(e);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t e = queue[head];
      for (std::size_t s = 0; s <= t; ++s) {
        const std::size_t x = gens_[s];
        const std::size_t ex = a_.mul(e, x);
        const std::size_t image = b_.mul(map[e], map[x]);
        if (map[ex] == kUnset) {
          if (used[image]) return false;
          map[ex] = image;
          used[image] = true;
          queue.push_back(ex);
        } else if (map[ex] != image) {
          return false;
        }
      }
    }
    return true;
  }

  const GroupTable& a_;
  const GroupTable& b_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> orders_a_, orders_b_;
};

inline std::vector<std::size_t> order_histogram(const GroupTable& g) {
  std::vector<std::size_t> h(g.order() + 1, 0);
  for (std::size_t o : element_orders(g)) ++h[o];
  return h;
}

}  // namespace detail

/// Backtracking isomorphism test for groups of order at most kIsomorphismCap.
/// Groups of different order are reported non-isomorphic without search.
inline bool is_isomorphic_small(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > kIsomorphismCap)
    throw CapExceeded("isomorphism search is limited to order " + std::to_string(kIsomorphismCap));
  if (is_abelian(a) != is_abelian(b)) return false;
  if (detail::order_histogram(a) != detail::order_histogram(b)) return false;
  return detail::IsoSearch(a, b).run();
}

/// Is there a normal N of index |target| with G/N isomorphic to target?
/// Elementary abelian targets are recognized by order, exponent and commutativity,
/// which also admits targets above the isomorphism cap (e.g. C5 x C5).
inline bool has_quotient_isomorphic_to(const GroupTable& g, const SubgroupLattice& l, const GroupTable& target) {
  if (g.order() % target.order()) return false;
  const bool elementary = is_elementary_abelian(target);
  const std::size_t texp = elementary ? exponent(target) : 0;
  for (std::size_t i : l.normal_indices()) {
    if (l[i].size() * target.order() != g.order()) continue;
    const GroupTable q = quotient(g, l[i]).quotient;
    if (elementary ? (is_abelian(q) && exponent(q) == texp) : is_isomorphic_small(q, target)) return true;
  }
  return false;
}

}  // namespace gcover
