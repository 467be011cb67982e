#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tautcalc/rational.hpp"

namespace tautcalc {

/// Memo key for a psi-intersection number; exponents are kept sorted.
struct TauKey {
  int g = 0;
  std::vector<int> exponents;

  TauKey() = default;
  TauKey(int genus, std::vector<int> d);

  /// Textual form "g;d1,d2,..." used by the cache file.
  std::string to_string() const;
  static TauKey parse(const std::string& text);

  auto operator<=>(const TauKey&) const = default;
};

/// <tau_{d_1} ... tau_{d_n}>_g, the integral of prod psi_i^{d_i} over Mbar_{g,n}.
/// Zero unless sum d_i = 3g - 3 + n. Throws std::invalid_argument for unstable (g, n)
/// or negative exponents.
///
/// Values with n >= 2 are recomputed along a second recursion path (DVV on a
/// different insertion, or string/dilaton against DVV) before they are cached;
/// a disagreement throws std::logic_error.
Rational tau(int g, std::vector<int> exponents);

namespace witten {

/// Snapshot of the memo table, sorted by key.
std::vector<std::pair<TauKey, Rational>> cached_entries();

/// Merges "g;d1,...=p/q" lines into the memo table. Missing file is not an error.
void load_cache(const std::filesystem::path& path);
void save_cache(const std::filesystem::path& path);
void clear_cache();

}  // namespace witten
}  // namespace tautcalc
