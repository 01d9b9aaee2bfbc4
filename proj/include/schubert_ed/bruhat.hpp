#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert_ed/coset.hpp"

namespace schubert_ed {

/// Memoized Bruhat-order oracle.
///
/// leq(u, w) walks the lifting recursion: take the smallest-index left
/// descent s of w; if s is also a left descent of u compare (su, sw),
/// otherwise (u, sw). Every state visited on the walk is recorded with the
/// final answer. The memo is bounded: it holds two generations of at most
/// capacity/2 entries each, and rotating generations drops the oldest
/// insertions first (the oracle stays correct, dropped states are simply
/// recomputed).
///
/// Instances are not thread safe; concurrent scans give each worker its own
/// cache, which yields results identical to a sequential run.
class BruhatCache {
 public:
  explicit BruhatCache(const RootSystem& rs, size_t capacity = 1u << 20);

  bool leq(const WeylElement& u, const WeylElement& w);

  const RootSystem& root_system() const { return *rs_; }
  uint64_t calls() const { return calls_; }
  uint64_t hits() const { return hits_; }
  uint64_t misses() const { return misses_; }
  void clear();

 private:
  struct PairKey {
    Mat8 u, w;
    bool operator==(const PairKey& o) const { return u == o.u && w == o.w; }
  };
  struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
      size_t a = Mat8Hash{}(k.u), b = Mat8Hash{}(k.w);
      return a ^ (b * 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    }
  };
  using Memo = std::unordered_map<PairKey, bool, PairKeyHash>;

  void remember(const PairKey& k, bool value);

  const RootSystem* rs_;
  size_t half_capacity_;
  Memo current_, previous_;
  uint64_t calls_ = 0, hits_ = 0, misses_ = 0;
};

/// Prop 2.4 criterion: u <= w iff the projections to every single-node
/// quotient W^{P_j}, j excluded in p, compare. Requires u, w in W^P.
bool projection_leq(BruhatCache& cache, const WeylElement& u, const WeylElement& w,
                    const ParabolicSubset& p);

struct IncomparableScan {
  std::vector<std::pair<WeylElement, WeylElement>> pairs;  // u-major order
  uint64_t tested = 0;
  bool truncated = false;
};

/// All (u, w) with len(u) = i, len(w) = j and u not<= w, in deterministic
/// (u-major, canonical) order. budget caps the number of order tests; a
/// hit budget sets `truncated`.
IncomparableScan incomparable_pairs_at(BruhatCache& cache, const WpEnumeration& e, int i,
                                       int j, uint64_t budget = 0);

}  // namespace schubert_ed
