#pragma once

// Catalog-wide checks of the covering results. Each suite yields one finding per group
// examined; a failed finding carries a witness (offending triple, kernel or value).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gcover/catalog.hpp"
#include "gcover/constructors.hpp"
#include "gcover/cover.hpp"
#include "gcover/group_spec.hpp"
#include "gcover/quotient.hpp"
#include "gcover/report.hpp"
#include "gcover/subgroup_lattice.hpp"

namespace gcover {

enum class Suite { TheoremA, TheoremB, CorollaryC, TheoremD, CorollaryE, CorollaryF, C3Formulas, All };

inline constexpr std::size_t kDefaultVerifyMaxOrder = 64;

inline std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "theorem-a") return Suite::TheoremA;
  if (name == "theorem-b") return Suite::TheoremB;
  if (name == "corollary-c") return Suite::CorollaryC;
  if (name == "theorem-d") return Suite::TheoremD;
  if (name == "corollary-e") return Suite::CorollaryE;
  if (name == "corollary-f") return Suite::CorollaryF;
  if (name == "c3-formulas") return Suite::C3Formulas;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

inline std::string suite_name(Suite s) {
  switch (s) {
    case Suite::TheoremA: return "theorem-a";
    case Suite::TheoremB: return "theorem-b";
    case Suite::CorollaryC: return "corollary-c";
    case Suite::TheoremD: return "theorem-d";
    case Suite::CorollaryE: return "corollary-e";
    case Suite::CorollaryF: return "corollary-f";
    case Suite::C3Formulas: return "c3-formulas";
    case Suite::All: return "all";
  }
  return {};
}

struct Finding {
  std::string suite;
  std::string spec;
  bool ok = true;
  std::string detail;
};

struct VerifyOptions {
  std::size_t max_order = kDefaultVerifyMaxOrder;
  std::size_t sigma_cap = kDefaultSigmaCap;
  std::size_t table_cap = kDefaultTableCap;
  std::size_t threads = 0;  ///< 0: hardware concurrency
};

struct VerifyOutcome {
  std::vector<Finding> findings;
  bool ok() const {
    return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.ok; });
  }
};

inline nlohmann::ordered_json to_json(const Finding& f) {
  nlohmann::ordered_json j;
  j["suite"] = f.suite;
  j["spec"] = f.spec;
  j["ok"] = f.ok;
  j["detail"] = f.detail;
  return j;
}

namespace detail {

inline std::string describe(const SubgroupLattice& l, std::size_t i) {
  return "#" + std::to_string(i) + "{size " + std::to_string(l[i].size()) + ", bits " + l[i].members().to_hex() + "}";
}

inline std::string describe(const SubgroupLattice& l, const CoverTriple& t) {
  return "[" + describe(l, t.indices[0]) + ", " + describe(l, t.indices[1]) + ", " + describe(l, t.indices[2]) + "]";
}

inline std::string yes_no(bool v) { return v ? "true" : "false"; }

struct Context {
  std::string spec;
  GroupTable group;
  SubgroupLattice lattice;
  const CatalogEntry* entry = nullptr;
};

/// Reference groups named in the characterizations of sigma = 3..6.
struct Targets {
  GroupTable klein = build_elementary_abelian(2, 2);
  GroupTable q8 = build_generalized_quaternion(8);
  GroupTable c3c3 = build_elementary_abelian(3, 2);
  GroupTable s3 = build_symmetric(3);
  GroupTable a4 = build_alternating(4);
  GroupTable c5c5 = build_elementary_abelian(5, 2);
  GroupTable d10 = build_dihedral(10);
  GroupTable f20 = build_semidirect_cyclic(5, 4, 2);
};

inline const Targets& targets() {
  static const Targets t;
  return t;
}

inline Finding finding(Suite s, const Context& c, bool ok, std::string detail) {
  return {suite_name(s), c.spec, ok, std::move(detail)};
}

inline std::vector<Finding> check_theorem_a(const Context& c, const VerifyOptions& opts) {
  const auto& g = c.group;
  const auto& l = c.lattice;
  const auto res = sigma(g, l, opts.sigma_cap);
  std::vector<std::string> problems;
  if (c.entry && c.entry->sigma && expectation_string(*c.entry->sigma) != res.to_string())
    problems.push_back("expected sigma " + expectation_string(*c.entry->sigma));
  if (res.finite()) {
    const std::size_t s = res.value;
    if (s == 1 || s == 2 || s == 7) problems.push_back("sigma takes a forbidden value");
    if (!is_cover(g, res.witness)) problems.push_back("witness does not cover");
  }
  if (res.status != SigmaResult::Status::NoCover) {
    const auto& t = targets();
    const bool finite = res.finite();
    const std::size_t s = finite ? res.value : 0;
    const bool klein = count_klein_quotients(g, l) > 0;
    const bool q4 = has_quotient_isomorphic_to(g, l, t.c3c3) || has_quotient_isomorphic_to(g, l, t.s3);
    const bool q5 = has_quotient_isomorphic_to(g, l, t.a4);
    const bool q6 = has_quotient_isomorphic_to(g, l, t.c5c5) || has_quotient_isomorphic_to(g, l, t.d10) ||
                    has_quotient_isomorphic_to(g, l, t.f20);
    const bool is3 = finite && s == 3, is4 = finite && s == 4, is5 = finite && s == 5, is6 = finite && s == 6;
    if (is3 != klein) problems.push_back("sigma=3 disagrees with C2xC2 quotient (" + yes_no(klein) + ")");
    if (is4 != (!is3 && q4)) problems.push_back("sigma=4 disagrees with C3xC3/S3 quotient (" + yes_no(q4) + ")");
    if (is5 != (!is3 && !is4 && q5)) problems.push_back("sigma=5 disagrees with A4 quotient (" + yes_no(q5) + ")");
    if (is6 != (!is3 && !is4 && !is5 && q6))
      problems.push_back("sigma=6 disagrees with C5xC5/D10/F20 quotient (" + yes_no(q6) + ")");
  }
  std::string detail = "sigma " + res.to_string();
  if (res.finite()) {
    detail += " witness [";
    for (std::size_t i = 0; i < res.witness_indices.size(); ++i)
      detail += (i ? ", " : "") + describe(l, res.witness_indices[i]);
    detail += "]";
  }
  for (const auto& p : problems) detail += "; " + p;
  return {finding(Suite::TheoremA, c, problems.empty(), detail)};
}

inline bool iso_to_any(const GroupTable& g, std::initializer_list<const GroupTable*> refs) {
  for (const auto* r : refs)
    if (is_isomorphic_small(g, *r)) return true;
  return false;
}

inline std::vector<Finding> check_triple_census(Suite s, const Context& c) {
  const auto& t = targets();
  const bool theorem_b = s == Suite::TheoremB;
  const auto census = theorem_b ? any_three_irredundant_cover(c.group, c.lattice)
                                : any_three_distinct_cover(c.group, c.lattice);
  const bool predicted = theorem_b ? iso_to_any(c.group, {&t.klein, &t.q8}) : iso_to_any(c.group, {&t.klein});
  std::string detail = "holds " + yes_no(census.holds) + ", expected " + yes_no(predicted);
  if (census.counterexample) detail += ", non-covering triple " + describe(c.lattice, *census.counterexample);
  else if (!census.any_candidate) detail += ", no candidate triple";
  return {finding(s, c, census.holds == predicted, detail)};
}

inline std::vector<Finding> check_theorem_d(const Context& c) {
  const auto d = unique_three_cover_equivalence(c.group, c.lattice);
  std::string detail = "(a,b,c) = (" + yes_no(d.unique_cover) + "," + yes_no(d.unique_klein_quotient) + "," +
                       yes_no(d.klein_without_e8) + ")";
  if (!d.consistent()) {
    for (std::size_t k : klein_kernels(c.group, c.lattice)) detail += ", klein kernel " + describe(c.lattice, k);
    for (std::size_t k : elem_abelian_8_kernels(c.group, c.lattice)) detail += ", E8 kernel " + describe(c.lattice, k);
  }
  return {finding(Suite::TheoremD, c, d.consistent(), detail)};
}

/// Splits a spec into nilpotent parts of pairwise coprime order by merging atoms whose
/// orders share a prime. Returns nothing when some part is not nilpotent.
inline std::optional<std::vector<GroupTable>> coprime_parts(const std::string& spec, std::size_t cap) {
  const auto atoms = parse_group_spec_ast(spec).atoms();
  std::vector<GroupTable> tables;
  for (const auto& a : atoms) tables.push_back(build_atom(a, cap));
  std::vector<std::size_t> root(tables.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      if (std::gcd(tables[i].order(), tables[j].order()) != 1) root[find(j)] = find(i);
  std::vector<GroupTable> parts;
  std::vector<std::size_t> part_root;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::size_t r = find(i);
    auto it = std::find(part_root.begin(), part_root.end(), r);
    if (it == part_root.end()) {
      part_root.push_back(r);
      parts.push_back(tables[i]);
    } else {
      auto& p = parts[static_cast<std::size_t>(it - part_root.begin())];
      p = build_direct_product(p, tables[i], cap);
    }
  }
  for (const auto& p : parts)
    if (!is_nilpotent(p)) return std::nullopt;
  return parts;
}

inline std::vector<Finding> check_corollary_e(const Context& c, const VerifyOptions& opts) {
  const auto parts = coprime_parts(c.spec, opts.table_cap);
  if (!parts) return {};
  const auto r = corollary_e_check(*parts, opts.table_cap);
  std::string detail = "parts [";
  for (std::size_t i = 0; i < parts->size(); ++i) detail += (i ? ", " : "") + (*parts)[i].spec();
  detail += "], prediction " + yes_no(r.prediction) + ", c3 == 1 " + yes_no(r.actual);
  return {finding(Suite::CorollaryE, c, r.agrees(), detail)};
}

inline std::vector<Finding> check_corollary_f(const Context& c) {
  if (!is_hamiltonian(c.group, c.lattice)) return {};
  std::size_t two_part = 1;
  for (std::size_t n = c.group.order(); n % 2 == 0; n /= 2) two_part *= 2;
  const bool predicted = two_part == 8;
  const bool unique = c3(c.group, c.lattice) == 1;
  std::string detail = "hamiltonian, 2-part " + std::to_string(two_part) + ", unique 3-cover " + yes_no(unique);
  return {finding(Suite::CorollaryF, c, predicted == unique, detail)};
}

inline std::vector<Finding> check_c3_formulas(const Context& c) {
  const auto& g = c.group;
  const auto& l = c.lattice;
  const std::size_t by_enum = c3(g, l, C3Method::Enumeration);
  const std::size_t by_quot = c3(g, l, C3Method::QuotientCount);
  std::vector<std::string> problems;
  if (by_enum != by_quot) problems.push_back("enumeration and quotient count disagree");
  if (c.entry && c.entry->c3 && *c.entry->c3 != by_enum)
    problems.push_back("expected c3 " + std::to_string(*c.entry->c3));

  const auto atoms = parse_group_spec_ast(c.spec).atoms();
  if (atoms.size() == 1) {
    const auto& a = atoms.front();
    if (a.kind == SpecAtom::Kind::ElementaryAbelian && a.params[0] == 2) {
      const std::size_t n = a.params[1];
      const std::size_t formula = ((std::size_t{1} << (2 * n - 1)) + 1 - 3 * (std::size_t{1} << (n - 1))) / 3;
      if (by_enum != formula) problems.push_back("closed form gives " + std::to_string(formula));
    }
    if (a.kind == SpecAtom::Kind::Dihedral) {
      const std::size_t half = a.params[0] / 2;
      const std::size_t expected = half % 2 == 0 ? 1 : 0;
      if (by_enum != expected) problems.push_back("dihedral rule gives " + std::to_string(expected));
      if (expected == 1) {
        // x is element 1 in the dihedral encoding.
        const Subgroup x2 = closure(g, {g.mul(1, 1)});
        const auto kernels = klein_kernels(g, l);
        if (kernels.size() != 1 || !(l[kernels.front()] == x2)) problems.push_back("Klein kernel is not <x^2>");
        for (const auto& t : enumerate_three_covers(g, l)) {
          Subgroup h = intersect(intersect(t.members[0], t.members[1]), t.members[2]);
          if (!(h == x2)) problems.push_back("cover intersection is not <x^2>");
        }
      }
    }
  }
  // Structure of every 3-cover: normal intersection containing all squares, Klein quotient.
  for (const auto& t : enumerate_three_covers(g, l)) {
    if (!is_irredundant_triple(t.members[0], t.members[1], t.members[2]))
      problems.push_back("redundant cover " + describe(l, t));
    const Subgroup h = intersect(intersect(t.members[0], t.members[1]), t.members[2]);
    bool squares = true;
    for (std::size_t x = 0; x < g.order(); ++x) squares = squares && h.contains(g.mul(x, x));
    if (!is_normal(g, h) || !squares || !is_klein_four(quotient(g, h).quotient))
      problems.push_back("cover " + describe(l, t) + " has a bad intersection");
  }
  std::string detail = "c3 " + std::to_string(by_enum) + " (enumeration), " + std::to_string(by_quot) + " (quotients)";
  for (const auto& p : problems) detail += "; " + p;
  return {finding(Suite::C3Formulas, c, problems.empty(), detail)};
}

/// Hamiltonian groups beyond the catalog, so both directions of the Q8 x A criterion are exercised.
inline const std::vector<std::string>& hamiltonian_extras() {
  static const std::vector<std::string> extras{"Q8 x C2", "Q8 x C5", "Q8 x C7", "Q8 x C2 x C3", "Q8 x C2^2",
                                               "Q8 x E(3,2)"};
  return extras;
}

inline std::vector<Finding> run_suite(Suite s, const Context& c, const VerifyOptions& opts) {
  switch (s) {
    case Suite::TheoremA: return check_theorem_a(c, opts);
    case Suite::TheoremB:
    case Suite::CorollaryC: return check_triple_census(s, c);
    case Suite::TheoremD: return check_theorem_d(c);
    case Suite::CorollaryE: return check_corollary_e(c, opts);
    case Suite::CorollaryF: return check_corollary_f(c);
    case Suite::C3Formulas: return check_c3_formulas(c);
    case Suite::All: break;
  }
  return {};
}

}  // namespace detail

/// Runs one suite (or all) over catalog entries of order <= max_order. Findings are grouped by
/// suite and listed in catalog order regardless of evaluation order.
inline VerifyOutcome verify(Suite suite, const VerifyOptions& opts = {},
                            const std::vector<CatalogEntry>& catalog = catalog_list()) {
  struct Item {
    std::string spec;
    const CatalogEntry* entry;
  };
  std::vector<Item> items;
  for (const auto& e : catalog) items.push_back({e.spec, &e});
  if (suite == Suite::CorollaryF || suite == Suite::All)
    for (const auto& s : detail::hamiltonian_extras()) items.push_back({s, nullptr});

  std::vector<Suite> suites;
  if (suite == Suite::All)
    suites = {Suite::TheoremA,   Suite::TheoremB,   Suite::CorollaryC, Suite::TheoremD,
              Suite::CorollaryE, Suite::CorollaryF, Suite::C3Formulas};
  else
    suites = {suite};

  using PerItem = std::vector<std::vector<Finding>>;
  auto results = parallel_map<PerItem>(
      items.size(),
      [&](std::size_t i) {
        PerItem per(suites.size());
        const GroupTable g = parse_group_spec(items[i].spec, {opts.table_cap});
        if (g.order() > opts.max_order) return per;
        detail::Context c{normalize_group_spec(items[i].spec), g, all_subgroups(g), items[i].entry};
        for (std::size_t s = 0; s < suites.size(); ++s) {
          // Extras exist only to exercise the hamiltonian criterion.
          if (!c.entry && suites[s] != Suite::CorollaryF) continue;
          per[s] = detail::run_suite(suites[s], c, opts);
        }
        return per;
      },
      opts.threads);

  VerifyOutcome out;
  for (std::size_t s = 0; s < suites.size(); ++s)
    for (const auto& per : results)
      for (const auto& f : per[s]) out.findings.push_back(f);
  return out;
}

}  // namespace gcover
