#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert_ed/weyl.hpp"

namespace schubert_ed {

/// u is the minimal-length representative of u W_P iff u(alpha_i) > 0 for
/// every retained node i of Delta_P.
bool is_minimal_rep(const WeylElement& u, const ParabolicSubset& p);

/// Unique factorization w = w1 * w2 with w1 in W^P, w2 in W_P and
/// len(w) = len(w1) + len(w2). Computed by stripping right descents that lie
/// in Delta_P.
std::pair<WeylElement, WeylElement> project_to_wp(const WeylElement& w,
                                                  const ParabolicSubset& p);

/// Shared per-quotient data: w_0, w_P and dim G/P = len(w_0) - len(w_P).
struct CosetContext {
  const RootSystem* rs = nullptr;
  ParabolicSubset parabolic;
  WeylElement w0;
  WeylElement wp;
  int dim = 0;
};

CosetContext make_coset_context(const RootSystem& rs, const ParabolicSubset& p);

/// Poincare dual on W^P: the minimal representative of w_0 u w_P. It has
/// length dim - len(u) and the map is an involution. Throws if u is not in W^P.
WeylElement dual_rep(const CosetContext& ctx, const WeylElement& u);
WeylElement dual_rep(const WeylElement& u, const ParabolicSubset& p);

struct EnumerateOptions {
  int max_length = -1;        // stop after this stratum (-1: run to the top)
  uint64_t max_elements = 0;  // 0: unlimited; exceeded -> truncated result
};

/// W^P stratified by length. Strata are sorted by canonical matrix, so the
/// enumeration order is reproducible; supports[l][k] is the letter-support
/// bitmask of strata[l][k].
struct WpEnumeration {
  LieFamily family{};
  int rank = 0;
  ParabolicSubset parabolic;
  std::vector<std::vector<WeylElement>> strata;
  std::vector<std::vector<uint16_t>> supports;
  uint64_t total = 0;
  int dimension = 0;  // len of the longest element of W^P
  bool truncated = false;

  size_t stratum_size(int l) const {
    return (l >= 0 && l < static_cast<int>(strata.size())) ? strata[l].size() : 0;
  }
};

/// Breadth-first by length: stratum l+1 = { s_i u : u in stratum l,
/// len(s_i u) = l + 1, s_i u in W^P }, deduplicated by canonical form.
WpEnumeration enumerate_wp(const RootSystem& rs, const ParabolicSubset& p,
                           const EnumerateOptions& opts = {});

// ---- cache files ----
// One file per (family, rank, excluded set, code version). Binary layout:
// magic, format+code version, context header, per-stratum counts, then the
// elements (action matrix, inverse matrix, length, support). On load the
// identity |W^P| * |W_P| = |W| is recomputed; mismatches reject the file.

extern const char* const kCodeVersion;

std::string wp_cache_filename(LieFamily family, int rank, const ParabolicSubset& p);

bool save_wp_cache(const std::string& path, const WpEnumeration& e);

/// Returns nothing if the file is absent, malformed, stale (version or
/// context mismatch) or fails the integrity check.
std::optional<WpEnumeration> load_wp_cache(const std::string& path, const RootSystem& rs,
                                           const ParabolicSubset& p);

/// Loads from cache_dir when possible, otherwise enumerates (and saves when
/// a complete enumeration was produced). Empty cache_dir disables caching.
WpEnumeration enumerate_wp_cached(const RootSystem& rs, const ParabolicSubset& p,
                                  const EnumerateOptions& opts = {},
                                  const std::string& cache_dir = {});

}  // namespace schubert_ed
