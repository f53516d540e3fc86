#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcover/constructors.hpp"
#include "gcover/errors.hpp"
#include "gcover/group_table.hpp"
#include "gcover/quotient.hpp"
#include "gcover/subgroup_lattice.hpp"

namespace gcover {

inline constexpr std::size_t kDefaultSigmaCap = 12;

/// Three distinct proper subgroups, identified by ascending lattice index.
struct CoverTriple {
  std::array<std::size_t, 3> indices{};
  std::array<Subgroup, 3> members;

  static CoverTriple from_lattice(const SubgroupLattice& l, std::size_t i, std::size_t j, std::size_t k) {
    std::array<std::size_t, 3> idx{i, j, k};
    std::sort(idx.begin(), idx.end());
    return {idx, {l[idx[0]], l[idx[1]], l[idx[2]]}};
  }

  friend bool operator==(const CoverTriple& a, const CoverTriple& b) { return a.indices == b.indices; }
};

struct SigmaResult {
  enum class Status { Value, NoCover, ExceedsCap };
  Status status = Status::NoCover;
  std::size_t value = 0;                    ///< meaningful only when status == Value
  std::vector<std::size_t> witness_indices;  ///< lattice indices, ascending
  std::vector<Subgroup> witness;

  bool finite() const noexcept { return status == Status::Value; }
  std::string to_string() const {
    switch (status) {
      case Status::Value: return std::to_string(value);
      case Status::NoCover: return "no-cover";
      case Status::ExceedsCap: return "exceeds-cap";
    }
    return {};
  }
};

/// Outcome of a "does every triple cover?" census, with the first failing triple in
/// canonical order when there is one.
struct TripleCensus {
  bool holds = false;
  bool any_candidate = false;  ///< at least one triple of the required kind exists
  std::optional<CoverTriple> counterexample;
};

struct UniqueCoverEquivalence {
  bool unique_cover = false;         ///< exactly one covering by three proper subgroups
  bool unique_klein_quotient = false;
  bool klein_without_e8 = false;     ///< a C2xC2 quotient and no C2xC2xC2 quotient

  bool consistent() const noexcept {
    return unique_cover == unique_klein_quotient && unique_klein_quotient == klein_without_e8;
  }
};

struct CorollaryECheck {
  bool prediction = false;  ///< 2 divides |G| and the Sylow 2-subgroup has Frattini index 4
  bool actual = false;      ///< c3(G) = 1
  bool agrees() const noexcept { return prediction == actual; }
};

enum class C3Method { Enumeration, QuotientCount };

inline bool is_cover(const GroupTable& g, const std::vector<Subgroup>& parts) {
  ElementSet acc(g.order());
  for (const auto& h : parts) {
    if (!h.parent().same_group(g)) throw ParentMismatch();
    acc |= h.members();
  }
  return acc.all();
}

/// No member lies inside the union of the other two.
inline bool is_irredundant_triple(const Subgroup& h1, const Subgroup& h2, const Subgroup& h3) {
  detail::require_same_parent(h1, h2);
  detail::require_same_parent(h1, h3);
  return !h1.members().is_subset_of(h2.members() | h3.members()) &&
         !h2.members().is_subset_of(h1.members() | h3.members()) &&
         !h3.members().is_subset_of(h1.members() | h2.members());
}

namespace detail {

/// Word-level helpers over equally sized bitsets, allocation free.
inline bool union_covers(const ElementSet& a, const ElementSet& b, const ElementSet& c) {
  const std::size_t words = a.word_count();
  const std::size_t n = a.universe();
  for (std::size_t w = 0; w < words; ++w) {
    ElementSet::Word need = (w + 1) * ElementSet::kWordBits <= n
                                ? ~ElementSet::Word{0}
                                : (ElementSet::Word{1} << (n % ElementSet::kWordBits)) - 1;
    if ((a.data()[w] | b.data()[w] | c.data()[w]) != need) return false;
  }
  return true;
}

inline bool subset_of_union(const ElementSet& a, const ElementSet& b, const ElementSet& c) {
  for (std::size_t w = 0; w < a.word_count(); ++w)
    if (a.data()[w] & ~(b.data()[w] | c.data()[w])) return false;
  return true;
}

inline bool irredundant(const ElementSet& a, const ElementSet& b, const ElementSet& c) {
  return !subset_of_union(a, b, c) && !subset_of_union(b, a, c) && !subset_of_union(c, a, b);
}

}  // namespace detail

/// Every unordered triple of distinct nontrivial proper subgroups whose union is G,
/// in ascending lexicographic order of lattice indices.
inline std::vector<CoverTriple> enumerate_three_covers(const GroupTable& g, const SubgroupLattice& l) {
  if (!l.parent().same_group(g)) throw ParentMismatch();
  const auto cand = l.nontrivial_proper_indices();
  const std::size_t n = g.order();
  std::size_t max_size = 0;
  for (std::size_t i : cand) max_size = std::max(max_size, l[i].size());
  std::vector<CoverTriple> out;
  // Candidates are in canonical order, so sizes are non-decreasing along `cand`. Three
  // subgroups share the identity, hence |A u B u C| <= |A| + |B| + |C| - 2.
  for (std::size_t a = 0; a < cand.size(); ++a) {
    const auto& ha = l[cand[a]];
    for (std::size_t b = a + 1; b < cand.size(); ++b) {
      const auto& hb = l[cand[b]];
      if (ha.size() + hb.size() + max_size < n + 2) continue;
      for (std::size_t c = b + 1; c < cand.size(); ++c) {
        const auto& hc = l[cand[c]];
        if (ha.size() + hb.size() + hc.size() < n + 2) continue;
        if (detail::union_covers(ha.members(), hb.members(), hc.members()))
          out.push_back(CoverTriple::from_lattice(l, cand[a], cand[b], cand[c]));
      }
    }
  }
  return out;
}

inline std::size_t c3(const GroupTable& g, const SubgroupLattice& l, C3Method method = C3Method::Enumeration) {
  if (method == C3Method::Enumeration) return enumerate_three_covers(g, l).size();
  return count_klein_quotients(g, l);
}

namespace detail {

class SigmaSearch {
 public:
  SigmaSearch(const GroupTable& g, const SubgroupLattice& l) : g_(g), l_(l), maximals_(l.maximal_indices()) {
    containing_.resize(g.order());
    for (std::size_t m = 0; m < maximals_.size(); ++m) {
      l[maximals_[m]].members().for_each([&](std::size_t e) { containing_[e].push_back(m); });
      max_size_ = std::max(max_size_, l[maximals_[m]].size());
    }
  }

  /// Greedy cover size (most new elements first); an upper bound on sigma.
  std::size_t greedy_bound() const {
    ElementSet covered = start();
    std::size_t used = 0;
    while (!covered.all()) {
      std::size_t best = maximals_.size(), gain = 0;
      for (std::size_t m = 0; m < maximals_.size(); ++m) {
        std::size_t c = (l_[maximals_[m]].members() | covered).count() - covered.count();
        if (c > gain) gain = c, best = m;
      }
      if (best == maximals_.size()) return static_cast<std::size_t>(-1);
      covered |= l_[maximals_[best]].members();
      ++used;
    }
    return used;
  }

  /// Can `k` maximal subgroups cover G? Branches on the uncovered element lying in the
  /// fewest maximal subgroups.
  bool feasible(std::size_t k) { return branch(start(), k); }

  /// Lexicographically least ascending list of k maximal-subgroup positions covering G.
  std::optional<std::vector<std::size_t>> least_witness(std::size_t k) const {
    std::vector<std::size_t> last(g_.order(), 0);
    for (std::size_t e = 0; e < g_.order(); ++e)
      for (std::size_t m : containing_[e]) last[e] = std::max(last[e], m + 1);
    std::vector<std::size_t> chosen;
    if (lex(start(), 0, k, last, chosen)) {
      std::vector<std::size_t> idx;
      for (std::size_t m : chosen) idx.push_back(maximals_[m]);
      return idx;
    }
    return std::nullopt;
  }

 private:
  ElementSet start() const {
    ElementSet s(g_.order());
    s.set(0);
    return s;
  }

  bool hopeless(const ElementSet& covered, std::size_t remaining) const {
    const std::size_t uncovered = g_.order() - covered.count();
    return max_size_ == 0 || uncovered > remaining * (max_size_ - 1);
  }

  bool branch(const ElementSet& covered, std::size_t remaining) {
    if (covered.all()) return true;
    if (remaining == 0 || hopeless(covered, remaining)) return false;
    auto memo = failed_.find(covered);
    if (memo != failed_.end() && memo->second >= remaining) return false;

    std::size_t pick = g_.order(), options = static_cast<std::size_t>(-1);
    for (std::size_t e = 0; e < g_.order(); ++e) {
      if (covered.test(e)) continue;
      if (containing_[e].size() < options) {
        options = containing_[e].size();
        pick = e;
      }
    }
    for (std::size_t m : containing_[pick])
      if (branch(covered | l_[maximals_[m]].members(), remaining - 1)) return true;

    auto& slot = failed_[covered];
    slot = std::max(slot, remaining);
    return false;
  }

  bool lex(const ElementSet& covered, std::size_t from, std::size_t remaining, const std::vector<std::size_t>& last,
           std::vector<std::size_t>& chosen) const {
    if (covered.all()) return true;
    if (remaining == 0 || hopeless(covered, remaining)) return false;
    for (std::size_t e = 0; e < g_.order(); ++e)
      if (!covered.test(e) && last[e] <= from) return false;
    for (std::size_t m = from; m < maximals_.size(); ++m) {
      chosen.push_back(m);
      if (lex(covered | l_[maximals_[m]].members(), m + 1, remaining - 1, last, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const GroupTable& g_;
  const SubgroupLattice& l_;
  std::vector<std::size_t> maximals_;
  std::vector<std::vector<std::size_t>> containing_;
  std::size_t max_size_ = 0;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> failed_;
};

}  // namespace detail

/// Minimal number of proper subgroups whose union is G, searched over maximal subgroups by
/// iterative deepening from k = 1. Cyclic groups (including the trivial group) have no cover.
inline SigmaResult sigma(const GroupTable& g, const SubgroupLattice& l, std::size_t cap = kDefaultSigmaCap) {
  if (!l.parent().same_group(g)) throw ParentMismatch();
  SigmaResult r;
  if (is_cyclic(g)) {
    r.status = SigmaResult::Status::NoCover;
    return r;
  }
  detail::SigmaSearch search(g, l);
  const std::size_t bound = std::min(search.greedy_bound(), cap);
  for (std::size_t k = 1; k <= bound; ++k) {
    if (!search.feasible(k)) continue;
    r.status = SigmaResult::Status::Value;
    r.value = k;
    r.witness_indices = *search.least_witness(k);
    for (std::size_t i : r.witness_indices) r.witness.push_back(l[i]);
    return r;
  }
  r.status = SigmaResult::Status::ExceedsCap;
  return r;
}

/// True iff some irredundant triple of proper subgroups exists and every one of them covers G.
inline TripleCensus any_three_irredundant_cover(const GroupTable& g, const SubgroupLattice& l) {
  if (!l.parent().same_group(g)) throw ParentMismatch();
  // The trivial subgroup is inside any union, so it never belongs to an irredundant triple.
  const auto cand = l.nontrivial_proper_indices();
  TripleCensus census;
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      for (std::size_t c = b + 1; c < cand.size(); ++c) {
        const auto &x = l[cand[a]].members(), &y = l[cand[b]].members(), &z = l[cand[c]].members();
        if (!detail::irredundant(x, y, z)) continue;
        census.any_candidate = true;
        if (!detail::union_covers(x, y, z)) {
          census.counterexample = CoverTriple::from_lattice(l, cand[a], cand[b], cand[c]);
          return census;
        }
      }
  census.holds = census.any_candidate;
  return census;
}

/// True iff there are at least three nontrivial proper subgroups and every triple of
/// distinct ones covers G.
inline TripleCensus any_three_distinct_cover(const GroupTable& g, const SubgroupLattice& l) {
  if (!l.parent().same_group(g)) throw ParentMismatch();
  const auto cand = l.nontrivial_proper_indices();
  TripleCensus census;
  census.any_candidate = cand.size() >= 3;
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      for (std::size_t c = b + 1; c < cand.size(); ++c)
        if (!detail::union_covers(l[cand[a]].members(), l[cand[b]].members(), l[cand[c]].members())) {
          census.counterexample = CoverTriple::from_lattice(l, cand[a], cand[b], cand[c]);
          return census;
        }
  census.holds = census.any_candidate;
  return census;
}

inline UniqueCoverEquivalence unique_three_cover_equivalence(const GroupTable& g, const SubgroupLattice& l) {
  UniqueCoverEquivalence r;
  const std::size_t klein = count_klein_quotients(g, l);
  r.unique_cover = c3(g, l, C3Method::Enumeration) == 1;
  r.unique_klein_quotient = klein == 1;
  r.klein_without_e8 = klein >= 1 && elem_abelian_8_kernels(g, l).empty();
  return r;
}

/// Elements of 2-power order; a subgroup (the Sylow 2-subgroup) whenever G is nilpotent.
inline Subgroup sylow_2_elements(const GroupTable& g) {
  ElementSet s(g.order());
  for (std::size_t e = 0; e < g.order(); ++e)
    if (detail::is_power_of(element_order(g, e), 2)) s.set(e);
  return Subgroup(g, std::move(s));
}

/// Compares the generator-count prediction for a nilpotent direct product against the
/// computed number of 3-covers. Parts must be nilpotent with pairwise coprime orders.
inline CorollaryECheck corollary_e_check(const std::vector<GroupTable>& parts, std::size_t cap = kDefaultTableCap) {
  if (parts.empty()) throw PreconditionError("corollary check needs at least one part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_nilpotent(parts[i])) throw PreconditionError("part " + parts[i].spec() + " is not nilpotent");
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (std::gcd(parts[i].order(), parts[j].order()) != 1)
        throw PreconditionError("parts " + parts[i].spec() + " and " + parts[j].spec() + " have non-coprime orders");
  }
  GroupTable g = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) g = build_direct_product(g, parts[i], cap);

  CorollaryECheck r;
  const Subgroup s2 = sylow_2_elements(g);
  if (s2.size() > 1) {
    const GroupTable sylow = subgroup_table(s2);
    r.prediction = index(sylow, frattini(all_subgroups(sylow))) == 4;
  }
  r.actual = c3(g, all_subgroups(g), C3Method::Enumeration) == 1;
  return r;
}

/// Nonabelian with every subgroup normal.
inline bool is_hamiltonian(const GroupTable& g, const SubgroupLattice& l) {
  return !is_abelian(g) && l.normal_indices().size() == l.size();
}

}  // namespace gcover
