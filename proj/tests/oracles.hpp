#pragma once

// Test-side oracles, kept independent of the library code paths they check.

#include <vector>

#include "schubert_ed/bruhat.hpp"
#include "schubert_ed/coset.hpp"
#include "schubert_ed/weyl.hpp"

namespace schubert_ed::testing {

/// Length as a raw inversion count, straight from the action matrix.
inline int inversion_count(const RootSystem& rs, const Mat8& m) {
  int count = 0;
  for (const RootVec& r : rs.positive_roots)
    if (root_sign(apply(m, r, rs.rank), rs.rank) < 0) ++count;
  return count;
}

/// Subword-property oracle: u <= w iff some subsequence of one fixed reduced
/// word of w multiplies to u. Exponential; for rank <= 3 groups only.
inline bool subword_leq(const WeylElement& u, const WeylElement& w) {
  Word ww = reduced_word(w);
  const size_t n = ww.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    WeylElement prod = identity_element(*w.rs);
    for (size_t k = 0; k < n; ++k)
      if (mask & (size_t(1) << k)) mult_simple_right(prod, ww[k]);
    if (prod == u) return true;
  }
  return false;
}

/// Every element of W, via the trivial quotient W^B = W.
inline std::vector<WeylElement> full_weyl_group(const RootSystem& rs) {
  WpEnumeration e = enumerate_wp(rs, ParabolicSubset::full_exclusion(rs.rank));
  std::vector<WeylElement> out;
  for (const auto& s : e.strata) out.insert(out.end(), s.begin(), s.end());
  return out;
}

inline bool palindromic_strata(const WpEnumeration& e) {
  if (e.truncated) return false;
  int d = e.dimension;
  for (int l = 0; l <= d; ++l)
    if (e.stratum_size(l) != e.stratum_size(d - l)) return false;
  return true;
}

}  // namespace schubert_ed::testing
