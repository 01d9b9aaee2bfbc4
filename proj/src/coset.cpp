#include "schubert_ed/coset.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace schubert_ed {

const char* const kCodeVersion = "1";

bool is_minimal_rep(const WeylElement& u, const ParabolicSubset& p) {
  validate_parabolic(*u.rs, p);
  for (int n = 1; n <= p.rank; ++n)
    if (!p.is_excluded(n) && is_descent(u, Side::Right, n)) return false;
  return true;
}

std::pair<WeylElement, WeylElement> project_to_wp(const WeylElement& w,
                                                  const ParabolicSubset& p) {
  validate_parabolic(*w.rs, p);
  WeylElement w1 = w;
  WeylElement w2 = identity_element(*w.rs);
  for (;;) {
    int d = 0;
    for (int n = 1; n <= p.rank; ++n) {
      if (!p.is_excluded(n) && is_descent(w1, Side::Right, n)) {
        d = n;
        break;
      }
    }
    if (!d) break;
    mult_simple_right(w1, d);  // strip: w1' = w1 s_d, so w2' = s_d w2
    mult_simple_left(w2, d);
  }
  return {w1, w2};
}

CosetContext make_coset_context(const RootSystem& rs, const ParabolicSubset& p) {
  validate_parabolic(rs, p);
  CosetContext ctx;
  ctx.rs = &rs;
  ctx.parabolic = p;
  ctx.w0 = longest_element(rs);
  ctx.wp = longest_element(rs, p.retained_nodes());
  ctx.dim = ctx.w0.len - ctx.wp.len;
  return ctx;
}

WeylElement dual_rep(const CosetContext& ctx, const WeylElement& u) {
  if (!is_minimal_rep(u, ctx.parabolic))
    throw std::invalid_argument("dual_rep: element is not a minimal coset representative");
  WeylElement x = multiply(multiply(ctx.w0, u), ctx.wp);
  return project_to_wp(x, ctx.parabolic).first;  // already minimal; projection is a no-op
}

WeylElement dual_rep(const WeylElement& u, const ParabolicSubset& p) {
  return dual_rep(make_coset_context(*u.rs, p), u);
}

namespace {

struct PendingElement {
  WeylElement w;
  uint16_t support;
};

}  // namespace

WpEnumeration enumerate_wp(const RootSystem& rs, const ParabolicSubset& p,
                           const EnumerateOptions& opts) {
  validate_parabolic(rs, p);
  WpEnumeration e;
  e.family = rs.family;
  e.rank = rs.rank;
  e.parabolic = p;
  e.dimension = make_coset_context(rs, p).dim;

  std::vector<PendingElement> level{{identity_element(rs), 0}};
  uint64_t count = 0;

  while (!level.empty()) {
    std::sort(level.begin(), level.end(),
              [](const PendingElement& a, const PendingElement& b) { return a.w.m < b.w.m; });
    std::vector<WeylElement> stratum;
    std::vector<uint16_t> stratum_support;
    stratum.reserve(level.size());
    stratum_support.reserve(level.size());
    for (const PendingElement& pe : level) {
      stratum.push_back(pe.w);
      stratum_support.push_back(pe.support);
    }
    count += stratum.size();
    int cur_len = static_cast<int>(e.strata.size());
    e.strata.push_back(std::move(stratum));
    e.supports.push_back(std::move(stratum_support));

    if (opts.max_length >= 0 && cur_len >= opts.max_length) {
      e.truncated = cur_len < e.dimension;
      break;
    }
    if (opts.max_elements && count >= opts.max_elements && cur_len < e.dimension) {
      e.truncated = true;
      break;
    }

    std::unordered_map<Mat8, PendingElement, Mat8Hash> next;
    next.reserve(2 * level.size());
    for (size_t k = 0; k < e.strata.back().size(); ++k) {
      const WeylElement& u = e.strata.back()[k];
      uint16_t sup = e.supports.back()[k];
      for (int i = 1; i <= rs.rank; ++i) {
        if (is_descent(u, Side::Left, i)) continue;  // length would drop
        WeylElement v = u;
        mult_simple_left(v, i);
        if (!is_minimal_rep(v, p)) continue;
        next.emplace(v.m,
                     PendingElement{v, static_cast<uint16_t>(sup | (1u << (i - 1)))});
      }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [mat, pe] : next) level.push_back(pe);
  }

  e.total = count;
  if (!e.truncated && !e.strata.empty() &&
      static_cast<int>(e.strata.size()) - 1 != e.dimension)
    throw std::logic_error("enumeration finished below the quotient dimension");
  return e;
}

// ---------------------------------------------------------------- cache io

namespace {
constexpr char kMagic[8] = {'S', 'E', 'D', 'W', 'P', 'C', '0', '1'};

template <typename T>
void put(std::ofstream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <typename T>
bool get(std::ifstream& is, T& v) {
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return bool(is);
}
}  // namespace

std::string wp_cache_filename(LieFamily family, int rank, const ParabolicSubset& p) {
  std::string name = "wp_" + family_name(family) + std::to_string(rank) + "_x";
  bool first = true;
  for (int n : p.excluded_nodes()) {
    if (!first) name += "-";
    name += std::to_string(n);
    first = false;
  }
  name += std::string("_v") + kCodeVersion + ".bin";
  return name;
}

bool save_wp_cache(const std::string& path, const WpEnumeration& e) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) return false;
  os.write(kMagic, sizeof(kMagic));
  uint8_t vlen = static_cast<uint8_t>(std::strlen(kCodeVersion));
  put(os, vlen);
  os.write(kCodeVersion, vlen);
  put(os, static_cast<char>(e.family));
  put(os, static_cast<uint8_t>(e.rank));
  put(os, e.parabolic.excluded_mask);
  put(os, static_cast<uint8_t>(e.truncated ? 1 : 0));
  put(os, static_cast<uint16_t>(e.dimension));
  put(os, static_cast<uint32_t>(e.strata.size()));
  for (const auto& s : e.strata) put(os, static_cast<uint32_t>(s.size()));
  put(os, e.total);
  for (size_t l = 0; l < e.strata.size(); ++l) {
    for (size_t k = 0; k < e.strata[l].size(); ++k) {
      const WeylElement& w = e.strata[l][k];
      os.write(reinterpret_cast<const char*>(w.m.a.data()), w.m.a.size());
      os.write(reinterpret_cast<const char*>(w.minv.a.data()), w.minv.a.size());
      put(os, static_cast<uint16_t>(w.len));
      put(os, e.supports[l][k]);
    }
  }
  return bool(os);
}

std::optional<WpEnumeration> load_wp_cache(const std::string& path, const RootSystem& rs,
                                           const ParabolicSubset& p) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  uint8_t vlen;
  if (!get(is, vlen)) return std::nullopt;
  std::string ver(vlen, '\0');
  is.read(ver.data(), vlen);
  if (!is || ver != kCodeVersion) return std::nullopt;  // stale: ignore, never migrate

  char fam;
  uint8_t rank, truncated;
  uint32_t mask, n_strata;
  uint16_t dim;
  if (!get(is, fam) || !get(is, rank) || !get(is, mask) || !get(is, truncated) ||
      !get(is, dim) || !get(is, n_strata))
    return std::nullopt;
  if (fam != static_cast<char>(rs.family) || rank != rs.rank || mask != p.excluded_mask)
    return std::nullopt;
  if (n_strata > 4096) return std::nullopt;

  WpEnumeration e;
  e.family = rs.family;
  e.rank = rs.rank;
  e.parabolic = p;
  e.truncated = truncated != 0;
  e.dimension = dim;
  std::vector<uint32_t> counts(n_strata);
  for (auto& c : counts)
    if (!get(is, c)) return std::nullopt;
  if (!get(is, e.total)) return std::nullopt;

  uint64_t sum = 0;
  for (uint32_t c : counts) sum += c;
  if (sum != e.total) return std::nullopt;

  e.strata.resize(n_strata);
  e.supports.resize(n_strata);
  for (uint32_t l = 0; l < n_strata; ++l) {
    e.strata[l].resize(counts[l]);
    e.supports[l].resize(counts[l]);
    for (uint32_t k = 0; k < counts[l]; ++k) {
      WeylElement& w = e.strata[l][k];
      w.rs = &rs;
      is.read(reinterpret_cast<char*>(w.m.a.data()), w.m.a.size());
      is.read(reinterpret_cast<char*>(w.minv.a.data()), w.minv.a.size());
      uint16_t len, sup;
      if (!get(is, len) || !get(is, sup)) return std::nullopt;
      w.len = len;
      if (w.len != static_cast<int>(l)) return std::nullopt;
      e.supports[l][k] = sup;
    }
  }

  // integrity: |W^P| * |W_P| = |W| for complete enumerations
  if (!e.truncated && e.total * parabolic_order(rs, p) != rs.weyl_order) return std::nullopt;
  return e;
}

WpEnumeration enumerate_wp_cached(const RootSystem& rs, const ParabolicSubset& p,
                                  const EnumerateOptions& opts, const std::string& cache_dir) {
  if (cache_dir.empty()) return enumerate_wp(rs, p, opts);
  std::filesystem::path file =
      std::filesystem::path(cache_dir) / wp_cache_filename(rs.family, rs.rank, p);
  if (auto e = load_wp_cache(file.string(), rs, p)) {
    bool usable = !e->truncated &&
                  (opts.max_length < 0 || opts.max_length >= e->dimension) &&
                  (opts.max_elements == 0 || opts.max_elements >= e->total);
    if (usable) return std::move(*e);
  }
  WpEnumeration e = enumerate_wp(rs, p, opts);
  if (!e.truncated) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    save_wp_cache(file.string(), e);
  }
  return e;
}

}  // namespace schubert_ed
