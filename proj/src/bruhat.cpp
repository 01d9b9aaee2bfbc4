#include "schubert_ed/bruhat.hpp"

#include <stdexcept>

namespace schubert_ed {

BruhatCache::BruhatCache(const RootSystem& rs, size_t capacity)
    : rs_(&rs), half_capacity_(capacity / 2 > 0 ? capacity / 2 : 1) {}

void BruhatCache::clear() {
  current_.clear();
  previous_.clear();
}

void BruhatCache::remember(const PairKey& k, bool value) {
  if (current_.size() >= half_capacity_) {
    previous_ = std::move(current_);
    current_ = Memo();
    current_.reserve(half_capacity_);
  }
  current_.emplace(k, value);
}

bool BruhatCache::leq(const WeylElement& u, const WeylElement& w) {
  if (!u.rs || !w.rs || !u.rs->same_context(*rs_) || !w.rs->same_context(*rs_))
    throw std::invalid_argument("leq: elements from a different root system");
  ++calls_;

  const int rank = rs_->rank;
  WeylElement x = u, y = w;
  std::vector<PairKey> path;
  bool result;

  for (;;) {
    if (x.len == 0) { result = true; break; }
    if (x.len > y.len) { result = false; break; }
    if (x.len == y.len) { result = (x.m == y.m); break; }

    PairKey key{x.m, y.m};
    if (auto it = current_.find(key); it != current_.end()) { ++hits_; result = it->second; break; }
    if (auto it = previous_.find(key); it != previous_.end()) { ++hits_; result = it->second; break; }
    ++misses_;
    path.push_back(key);

    int s = 0;  // smallest left descent of y; exists since len(y) > 0
    for (int n = 1; n <= rank; ++n) {
      if (is_descent(y, Side::Left, n)) { s = n; break; }
    }
    if (is_descent(x, Side::Left, s)) mult_simple_left(x, s);
    mult_simple_left(y, s);
  }

  for (const PairKey& k : path) remember(k, result);
  return result;
}

bool projection_leq(BruhatCache& cache, const WeylElement& u, const WeylElement& w,
                    const ParabolicSubset& p) {
  if (!is_minimal_rep(u, p) || !is_minimal_rep(w, p))
    throw std::invalid_argument("projection_leq: arguments must lie in W^P");
  for (int node : p.excluded_nodes()) {
    ParabolicSubset single = ParabolicSubset::from_excluded(p.rank, {node});
    WeylElement ui = project_to_wp(u, single).first;
    WeylElement wi = project_to_wp(w, single).first;
    if (!cache.leq(ui, wi)) return false;
  }
  return true;
}

IncomparableScan incomparable_pairs_at(BruhatCache& cache, const WpEnumeration& e, int i,
                                       int j, uint64_t budget) {
  if (i < 0 || j < 0 || i > e.dimension || j > e.dimension)
    throw std::invalid_argument("incomparable_pairs_at: length out of range");
  IncomparableScan out;
  if (i >= static_cast<int>(e.strata.size()) || j >= static_cast<int>(e.strata.size())) {
    if (e.truncated) throw std::invalid_argument("incomparable_pairs_at: stratum not enumerated");
    return out;
  }
  for (const WeylElement& u : e.strata[i]) {
    for (const WeylElement& w : e.strata[j]) {
      if (budget && out.tested >= budget) {
        out.truncated = true;
        return out;
      }
      ++out.tested;
      if (!cache.leq(u, w)) out.pairs.emplace_back(u, w);
    }
  }
  return out;
}

}  // namespace schubert_ed
