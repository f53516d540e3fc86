#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcover/element_set.hpp"
#include "gcover/errors.hpp"
#include "gcover/group_table.hpp"

namespace gcover {

/// Enumeration gives up once this many distinct subgroups have been found.
inline constexpr std::size_t kMaxLatticeSize = 250'000;

/// A subgroup of a parent table, held as a bitset of element indices.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupTable parent, ElementSet members)
      : parent_(std::move(parent)), members_(std::move(members)), size_(members_.count()) {}

  const GroupTable& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(std::size_t e) const noexcept { return members_.test(e); }
  bool is_trivial() const noexcept { return size_ == 1; }
  bool is_proper() const noexcept { return size_ < parent_.order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent_.same_group(b.parent_) && a.members_ == b.members_;
  }

 private:
  GroupTable parent_;
  ElementSet members_;
  std::size_t size_ = 0;
};

/// Canonical order: by size, then by bitset value.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return value_less(a.members(), b.members());
}

namespace detail {

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_group(b.parent())) throw ParentMismatch();
}

/// Closes `seed` (which must contain the identity) under right multiplication by `gens`.
inline ElementSet close_under(const GroupTable& g, ElementSet seed, const std::vector<std::size_t>& gens) {
  std::vector<std::size_t> queue = seed.elements();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t x : gens) {
      const std::size_t v = g.mul(u, x);
      if (!seed.test(v)) {
        seed.set(v);
        queue.push_back(v);
      }
    }
  }
  return seed;
}

}  // namespace detail

/// Least subgroup containing `generators`.
inline Subgroup closure(const GroupTable& g, const std::vector<std::size_t>& generators) {
  ElementSet seed(g.order());
  seed.set(0);
  for (std::size_t x : generators) {
    if (x >= g.order()) throw PreconditionError("generator index out of range");
  }
  // A finite set closed under multiplication is a subgroup, so closing under the
  // generators from the identity is enough.
  return Subgroup(g, detail::close_under(g, std::move(seed), generators));
}

inline Subgroup trivial_subgroup(const GroupTable& g) { return closure(g, {}); }
inline Subgroup whole_group(const GroupTable& g) { return Subgroup(g, ElementSet::full(g.order())); }

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a, b);
  return Subgroup(a.parent(), a.members() & b.members());
}

inline bool is_subset(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a, b);
  return a.members().is_subset_of(b.members());
}

inline std::size_t index(const GroupTable& g, const Subgroup& h) {
  if (!h.parent().same_group(g)) throw ParentMismatch();
  return g.order() / h.size();
}

/// x h x^-1 in h for every x in g and h in h.
inline bool is_normal(const GroupTable& g, const Subgroup& h) {
  if (!h.parent().same_group(g)) throw ParentMismatch();
  const auto members = h.members().elements();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t xi = g.inv(x);
    for (std::size_t e : members)
      if (!h.contains(g.mul(g.mul(x, e), xi))) return false;
  }
  return true;
}

/// Greedy generating set: repeatedly take the element of largest order (lowest index on
/// ties) outside the subgroup generated so far.
inline std::vector<std::size_t> greedy_generators(const GroupTable& g) {
  const auto orders = element_orders(g);
  std::vector<std::size_t> by_order(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) { return orders[a] > orders[b]; });
  std::vector<std::size_t> gens;
  ElementSet span(g.order());
  span.set(0);
  for (std::size_t x : by_order) {
    if (span.test(x)) continue;
    gens.push_back(x);
    span = detail::close_under(g, std::move(span), gens);
    if (span.all()) break;
  }
  return gens;
}

/// All subgroups of a group, deduplicated and in canonical (size, bitset value) order.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;

  const GroupTable& parent() const noexcept { return parent_; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  bool is_maximal(std::size_t i) const { return maximal_[i]; }
  bool is_normal(std::size_t i) const { return normal_[i]; }

  /// Lattice index of a subgroup with the same parent, or size() if absent.
  std::size_t index_of(const Subgroup& h) const {
    auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), h, canonical_less);
    if (it != subgroups_.end() && *it == h) return static_cast<std::size_t>(it - subgroups_.begin());
    return subgroups_.size();
  }

  std::vector<std::size_t> maximal_indices() const { return filter([&](std::size_t i) { return maximal_[i]; }); }
  std::vector<std::size_t> normal_indices() const { return filter([&](std::size_t i) { return normal_[i]; }); }
  std::vector<std::size_t> proper_indices() const {
    return filter([&](std::size_t i) { return subgroups_[i].is_proper(); });
  }
  /// Proper subgroups other than the trivial one: the candidate members of a cover.
  std::vector<std::size_t> nontrivial_proper_indices() const {
    return filter([&](std::size_t i) { return subgroups_[i].is_proper() && !subgroups_[i].is_trivial(); });
  }

  friend SubgroupLattice all_subgroups(const GroupTable& g);

 private:
  template <typename Pred>
  std::vector<std::size_t> filter(Pred&& p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      if (p(i)) out.push_back(i);
    return out;
  }

  GroupTable parent_;
  std::vector<Subgroup> subgroups_;
  std::vector<bool> maximal_;
  std::vector<bool> normal_;
};

/// Enumerates every subgroup: seed with the cyclic subgroups, then repeatedly join each
/// known subgroup with each cyclic subgroup it does not contain, until nothing new appears.
inline SubgroupLattice all_subgroups(const GroupTable& g) {
  struct Found {
    ElementSet members;
    std::vector<std::size_t> gens;
  };
  const std::size_t n = g.order();
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet members, std::vector<std::size_t> gens) {
    auto [it, inserted] = seen.emplace(members, found.size());
    if (!inserted) return;
    if (found.size() >= kMaxLatticeSize)
      throw CapExceeded("subgroup lattice exceeds " + std::to_string(kMaxLatticeSize) + " entries");
    found.push_back({std::move(members), std::move(gens)});
  };

  // One generator per distinct cyclic subgroup.
  std::vector<std::size_t> cyclic_gens;
  {
    ElementSet trivial(n);
    trivial.set(0);
    add(trivial, {});
    for (std::size_t x = 1; x < n; ++x) {
      ElementSet c = detail::close_under(g, trivial, {x});
      if (seen.count(c)) continue;
      cyclic_gens.push_back(x);
      add(std::move(c), {x});
    }
  }

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t x : cyclic_gens) {
      if (found[head].members.test(x)) continue;
      std::vector<std::size_t> gens = found[head].gens;
      gens.push_back(x);
      ElementSet joined = detail::close_under(g, found[head].members, gens);
      if (seen.count(joined)) continue;
      add(std::move(joined), std::move(gens));
    }
  }

  SubgroupLattice l;
  l.parent_ = g;
  l.subgroups_.reserve(found.size());
  for (auto& f : found) l.subgroups_.emplace_back(g, std::move(f.members));
  std::sort(l.subgroups_.begin(), l.subgroups_.end(), canonical_less);

  const std::size_t s = l.subgroups_.size();
  l.maximal_.assign(s, false);
  for (std::size_t i = 0; i < s; ++i) {
    if (!l.subgroups_[i].is_proper()) continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < s && maximal; ++j) {
      const auto& other = l.subgroups_[j];
      if (other.is_proper() && other.size() > l.subgroups_[i].size() &&
          l.subgroups_[i].members().is_subset_of(other.members()))
        maximal = false;
    }
    l.maximal_[i] = maximal;
  }

  // Conjugation by a generating set suffices for normality.
  const auto gens = greedy_generators(g);
  l.normal_.assign(s, true);
  for (std::size_t i = 0; i < s; ++i) {
    const auto& h = l.subgroups_[i];
    bool normal = true;
    h.members().for_each([&](std::size_t e) {
      for (std::size_t x : gens)
        if (normal && !h.contains(g.mul(g.mul(x, e), g.inv(x)))) normal = false;
    });
    l.normal_[i] = normal;
  }
  return l;
}

inline std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& l) {
  std::vector<Subgroup> out;
  for (std::size_t i : l.maximal_indices()) out.push_back(l[i]);
  return out;
}

inline std::vector<Subgroup> proper_subgroups(const SubgroupLattice& l) {
  std::vector<Subgroup> out;
  for (std::size_t i : l.proper_indices()) out.push_back(l[i]);
  return out;
}

inline std::vector<Subgroup> subgroups_of_order(const SubgroupLattice& l, std::size_t m) {
  std::vector<Subgroup> out;
  for (const auto& h : l.subgroups())
    if (h.size() == m) out.push_back(h);
  return out;
}

inline std::vector<Subgroup> normal_subgroups(const SubgroupLattice& l) {
  std::vector<Subgroup> out;
  for (std::size_t i : l.normal_indices()) out.push_back(l[i]);
  return out;
}

/// Intersection of all maximal subgroups (the whole group when there are none).
inline Subgroup frattini(const SubgroupLattice& l) {
  ElementSet acc = ElementSet::full(l.parent().order());
  for (std::size_t i : l.maximal_indices()) acc &= l[i].members();
  return Subgroup(l.parent(), std::move(acc));
}

/// Minimal number of generators of a 2-group: log2 of the Frattini index.
inline std::size_t min_generators_2group(const GroupTable& g) {
  if (!detail::is_power_of(g.order(), 2)) throw PreconditionError("group order is not a power of 2");
  const auto phi = frattini(all_subgroups(g));
  std::size_t idx = index(g, phi), d = 0;
  while (idx > 1) {
    idx /= 2;
    ++d;
  }
  return d;
}

/// Is the subgroup (as a set) cyclic?
inline bool is_cyclic_subgroup(const Subgroup& h) {
  bool cyclic = false;
  const GroupTable& g = h.parent();
  h.members().for_each([&](std::size_t e) {
    if (!cyclic && element_order(g, e) == h.size()) cyclic = true;
  });
  return cyclic;
}

/// The subgroup as a standalone table; element i of the result is the i-th member in index order.
inline GroupTable subgroup_table(const Subgroup& h) {
  const GroupTable& g = h.parent();
  const auto members = h.members().elements();
  std::vector<std::size_t> pos(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
  const std::size_t m = members.size();
  std::vector<Element> product(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) product[a * m + b] = static_cast<Element>(pos[g.mul(members[a], members[b])]);
  std::vector<std::string> labels;
  for (std::size_t e : members) labels.push_back(g.label(e));
  return GroupTable::from_product(m, std::move(product), std::move(labels), "subgroup of " + g.spec());
}

}  // namespace gcover
