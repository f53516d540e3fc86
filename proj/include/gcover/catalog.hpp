#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gcover/catalog_data.hpp"
#include "gcover/errors.hpp"

namespace gcover {

/// Expected sigma: a number, or "no-cover" for cyclic groups.
using SigmaExpectation = std::variant<std::size_t, std::string>;

struct CatalogEntry {
  std::string spec;
  std::optional<SigmaExpectation> sigma;
  std::optional<std::size_t> c3;
  std::string note;
};

/// Reads a catalog: a JSON array of {"spec", "expected": {"sigma", "c3"}, "note"} objects.
inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw PreconditionError("catalog must be a JSON array");
  for (const auto& item : doc) {
    CatalogEntry e;
    e.spec = item.at("spec").get<std::string>();
    e.note = item.value("note", "");
    if (item.contains("expected")) {
      const auto& exp = item.at("expected");
      if (exp.contains("sigma")) {
        const auto& s = exp.at("sigma");
        if (s.is_string())
          e.sigma = s.get<std::string>();
        else
          e.sigma = s.get<std::size_t>();
      }
      if (exp.contains("c3")) e.c3 = exp.at("c3").get<std::size_t>();
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> catalog = parse_catalog(detail::kBuiltinCatalogJson);
  return catalog;
}

inline std::string expectation_string(const SigmaExpectation& s) {
  if (const auto* n = std::get_if<std::size_t>(&s)) return std::to_string(*n);
  return std::get<std::string>(s);
}

}  // namespace gcover
