#pragma once

#include <string>
#include <vector>

#include "twogroups/io.hpp"

namespace support {

inline std::string catalog_path(const std::string& file) { return std::string(TWOGROUPS_CATALOG_DIR) + "/" + file; }

inline twogroups::io::Json load(const std::string& file) {
  return twogroups::io::parse(twogroups::io::read_file(catalog_path(file)));
}

inline twogroups::CrossedModule xmod(const std::string& name) {
  return twogroups::io::read_crossed_module(load(name + ".json"));
}
inline twogroups::CoherentTwoGroup two_group(const std::string& name) {
  return twogroups::io::read_two_group(load(name + ".json"));
}
inline twogroups::EquivariantComplex complex(const std::string& name) {
  return twogroups::io::read_complex(load(name + ".json"));
}

/// Catalog crossed modules small enough for the cubic checks.
inline const std::vector<std::string>& small_xmods() {
  static const std::vector<std::string> names{"xm1", "xm2", "xm3", "xm4", "xm5", "xm6"};
  return names;
}

/// Functor check written against the raw tables: bijective on objects and
/// arrows, preserves endpoints, identities and every composite.
inline bool is_groupoid_iso(const twogroups::FiniteGroupoid& a, const twogroups::FiniteGroupoid& b,
                            const std::vector<std::size_t>& obj, const std::vector<std::size_t>& arr) {
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return false;
  if (obj.size() != a.object_count() || arr.size() != a.arrow_count()) return false;
  std::vector<bool> seen_o(b.object_count()), seen_a(b.arrow_count());
  for (std::size_t x : obj) {
    if (x >= b.object_count() || seen_o[x]) return false;
    seen_o[x] = true;
  }
  for (std::size_t g : arr) {
    if (g >= b.arrow_count() || seen_a[g]) return false;
    seen_a[g] = true;
  }
  for (std::size_t g = 0; g < a.arrow_count(); ++g)
    if (b.src(arr[g]) != obj[a.src(g)] || b.tgt(arr[g]) != obj[a.tgt(g)]) return false;
  for (std::size_t x = 0; x < a.object_count(); ++x)
    if (arr[a.ident(x)] != b.ident(obj[x])) return false;
  for (std::size_t h = 0; h < a.arrow_count(); ++h)
    for (std::size_t g = 0; g < a.arrow_count(); ++g)
      if (a.src(h) == a.tgt(g) && arr[a.comp(h, g)] != b.comp(arr[h], arr[g])) return false;
  return true;
}

}  // namespace support
