#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "gcover/cover.hpp"
#include "gcover/group_spec.hpp"
#include "gcover/quotient.hpp"
#include "gcover/subgroup_lattice.hpp"

namespace gcover {

struct AnalysisOptions {
  std::size_t table_cap = kDefaultTableCap;
  std::size_t sigma_cap = kDefaultSigmaCap;
};

struct AnalysisReport {
  std::string spec;
  std::size_t order = 0;
  bool abelian = false;
  std::size_t exponent = 0;
  std::size_t subgroup_count = 0;
  std::size_t maximal_count = 0;
  std::string sigma;  ///< decimal value, "no-cover" or "exceeds-cap"
  std::size_t c3 = 0;
  std::size_t klein_quotients = 0;
  bool theorem_b = false;
  bool corollary_c = false;
  std::array<bool, 3> theorem_d{};
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Table cap taken from GCOVER_MAX_ORDER when set to a positive integer.
inline std::size_t table_cap_from_env(std::size_t fallback = kDefaultTableCap) {
  const char* v = std::getenv("GCOVER_MAX_ORDER");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) return fallback;
  return static_cast<std::size_t>(std::min<unsigned long long>(n, kMaxTableCap));
}

inline AnalysisReport analyze(const GroupTable& g, const AnalysisOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.spec = g.spec();
  r.order = g.order();
  r.abelian = is_abelian(g);
  r.exponent = exponent(g);
  const SubgroupLattice l = all_subgroups(g);
  r.subgroup_count = l.size();
  r.maximal_count = l.maximal_indices().size();
  r.sigma = sigma(g, l, opts.sigma_cap).to_string();
  r.c3 = c3(g, l, C3Method::Enumeration);
  r.klein_quotients = count_klein_quotients(g, l);
  r.theorem_b = any_three_irredundant_cover(g, l).holds;
  r.corollary_c = any_three_distinct_cover(g, l).holds;
  const auto d = unique_three_cover_equivalence(g, l);
  r.theorem_d = {d.unique_cover, d.unique_klein_quotient, d.klein_without_e8};
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Parses and analyzes a spec. Parse errors surface as ParseError, oversized groups as CapExceeded.
inline AnalysisReport analyze(std::string_view spec, const AnalysisOptions& opts = {}) {
  return analyze(parse_group_spec(spec, {opts.table_cap}), opts);
}

/// JSON object with a fixed key order. elapsed_ms is written only when requested, so that
/// default output is byte-identical across runs.
inline nlohmann::ordered_json to_json(const AnalysisReport& r, bool with_timing = false) {
  nlohmann::ordered_json j;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["abelian"] = r.abelian;
  j["exponent"] = r.exponent;
  j["subgroup_count"] = r.subgroup_count;
  j["maximal_count"] = r.maximal_count;
  if (!r.sigma.empty() && std::all_of(r.sigma.begin(), r.sigma.end(), [](char c) { return c >= '0' && c <= '9'; }))
    j["sigma"] = std::stoull(r.sigma);
  else
    j["sigma"] = r.sigma;
  j["c3"] = r.c3;
  j["klein_quotients"] = r.klein_quotients;
  j["theorem_b"] = r.theorem_b;
  j["corollary_c"] = r.corollary_c;
  j["theorem_d"] = {r.theorem_d[0], r.theorem_d[1], r.theorem_d[2]};
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  AnalysisReport r;
  r.spec = j.at("spec").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.abelian = j.at("abelian").get<bool>();
  r.exponent = j.at("exponent").get<std::size_t>();
  r.subgroup_count = j.at("subgroup_count").get<std::size_t>();
  r.maximal_count = j.at("maximal_count").get<std::size_t>();
  const auto& s = j.at("sigma");
  r.sigma = s.is_string() ? s.get<std::string>() : std::to_string(s.get<std::size_t>());
  r.c3 = j.at("c3").get<std::size_t>();
  r.klein_quotients = j.at("klein_quotients").get<std::size_t>();
  r.theorem_b = j.at("theorem_b").get<bool>();
  r.corollary_c = j.at("corollary_c").get<bool>();
  const auto& d = j.at("theorem_d");
  r.theorem_d = {d.at(0).get<bool>(), d.at(1).get<bool>(), d.at(2).get<bool>()};
  r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
  return r;
}

inline std::string csv_header(bool with_timing = false) {
  std::string h =
      "spec,order,abelian,exponent,subgroup_count,maximal_count,sigma,c3,klein_quotients,theorem_b,corollary_c,"
      "theorem_d_a,theorem_d_b,theorem_d_c";
  return with_timing ? h + ",elapsed_ms" : h;
}

inline std::string to_csv(const AnalysisReport& r, bool with_timing = false) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << '"' << r.spec << "\"," << r.order << ',' << b(r.abelian) << ',' << r.exponent << ',' << r.subgroup_count
     << ',' << r.maximal_count << ',' << r.sigma << ',' << r.c3 << ',' << r.klein_quotients << ','
     << b(r.theorem_b) << ',' << b(r.corollary_c) << ',' << b(r.theorem_d[0]) << ',' << b(r.theorem_d[1]) << ','
     << b(r.theorem_d[2]);
  if (with_timing) os << ',' << r.elapsed_ms;
  return os.str();
}

inline std::string table_header() {
  std::ostringstream os;
  os << std::left << std::setw(18) << "spec" << std::right << std::setw(6) << "order" << std::setw(5) << "abl"
     << std::setw(5) << "exp" << std::setw(6) << "subs" << std::setw(6) << "max" << std::setw(13) << "sigma"
     << std::setw(5) << "c3" << std::setw(7) << "klein" << std::setw(5) << "B" << std::setw(5) << "C"
     << std::setw(8) << "D(abc)";
  return os.str();
}

inline std::string to_table_row(const AnalysisReport& r) {
  auto b = [](bool v) { return v ? "yes" : "no"; };
  std::string d;
  for (bool v : r.theorem_d) d += v ? 'T' : 'F';
  std::ostringstream os;
  os << std::left << std::setw(18) << r.spec << std::right << std::setw(6) << r.order << std::setw(5) << b(r.abelian)
     << std::setw(5) << r.exponent << std::setw(6) << r.subgroup_count << std::setw(6) << r.maximal_count
     << std::setw(13) << r.sigma << std::setw(5) << r.c3 << std::setw(7) << r.klein_quotients << std::setw(5)
     << b(r.theorem_b) << std::setw(5) << b(r.corollary_c) << std::setw(8) << d;
  return os.str();
}

/// Subgroup as {"index", "size", "bits"} where bits is the hex bitset over element indices.
inline nlohmann::ordered_json subgroup_json(const SubgroupLattice& l, std::size_t i) {
  nlohmann::ordered_json j;
  j["index"] = i;
  j["size"] = l[i].size();
  j["bits"] = l[i].members().to_hex();
  return j;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers; results keep index order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn, std::size_t threads = 0) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace gcover
