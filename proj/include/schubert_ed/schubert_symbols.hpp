#pragma once

#include <map>
#include <vector>

#include "schubert_ed/coset.hpp"

namespace schubert_ed {

/// Combinatorial context of an orthogonal Grassmannian OG(m, N).
///
///   family B: N = 2n+1, k = n - m,     1 <= m <= n   (odd quadric case)
///   family D: N = 2n+2, k = n + 1 - m, 2 <= m <  n   (paper rank is n+1)
struct GrassContext {
  LieFamily family{};
  int n = 0, m = 0, k = 0, N = 0;

  static GrassContext odd_orthogonal(int n, int m);   // type B_n, node m
  static GrassContext even_orthogonal(int n, int m);  // type D_{n+1}, node m

  /// dim OG(m, N) = m(n+k) - m(m-1)/2.
  int dim() const { return m * (n + k) - m * (m - 1) / 2; }
  /// Threshold constant of the f-function: N - 2m - 1 (2k in type B, 2k-1 in D).
  int big_threshold() const { return N - 2 * m - 1; }
  bool operator==(const GrassContext& o) const {
    return family == o.family && n == o.n && m == o.m;
  }
};

/// A k-strict partition in the m x (n+k) rectangle with, in family D, the
/// type tag t (0 iff no part equals k, otherwise 1 or 2). The virtual part
/// lambda_0 = n+k+1 realizes the convention that (0, j) is always big.
struct KStrictPartition {
  std::vector<int> parts;  // weakly decreasing, padded with zeros to size m
  int t = 0;

  int weight() const;
  bool operator==(const KStrictPartition& o) const { return parts == o.parts && t == o.t; }
  bool operator<(const KStrictPartition& o) const {
    return parts != o.parts ? parts < o.parts : t < o.t;
  }
};

/// Throws std::invalid_argument when lambda breaks the context invariants
/// (shape, k-strictness, rectangle bound, type-tag consistency).
void validate_partition(const KStrictPartition& lambda, const GrassContext& ctx);

/// A Schubert symbol p_1 < ... < p_m inside [1, N] with p_i + p_j != N + 1;
/// in family B additionally n+1 is never used.
struct IndexSet {
  std::vector<int> p;
  bool operator==(const IndexSet& o) const { return p == o.p; }
  bool operator<(const IndexSet& o) const { return p < o.p; }
};

void validate_index_set(const IndexSet& s, const GrassContext& ctx);

/// All of P_N(k, n), in deterministic order. Type-D partitions with a part
/// equal to k appear twice, once per t in {1, 2}.
std::vector<KStrictPartition> enumerate_kstrict(const GrassContext& ctx);

/// lambda_i + lambda_j > N - 2m - 1 + (j - i), with lambda_0 = n+k+1.
/// Valid for 0 <= i < j <= m.
bool is_big_pair(const KStrictPartition& lambda, int i, int j, const GrassContext& ctx);

/// f(lambda, j) = #{ 1 <= i < j : (i, j) big }, j in [1, m].
int f_big_count(const KStrictPartition& lambda, int j, const GrassContext& ctx);

/// g(lambda, t, j) in {1, 2} (family D), with the n+j+t parity rule.
int g_function(const KStrictPartition& lambda, int j, const GrassContext& ctx);

/// The bijections onto Schubert symbols (Phi for B, Psi for D).
IndexSet phi_index_set(const KStrictPartition& lambda, const GrassContext& ctx);
IndexSet psi_index_set(const KStrictPartition& lambda, const GrassContext& ctx);
IndexSet index_set_of(const KStrictPartition& lambda, const GrassContext& ctx);

/// Poincare dual symbol; an involution complementing the weight to dim().
IndexSet dual_index_set(const IndexSet& s, const GrassContext& ctx);

/// Containment order on Schubert varieties. Family B: componentwise <=.
/// Family D: componentwise <= plus a family-parity condition at every level
/// whose complementary window makes both tails maximal isotropic; its
/// simplest instance is the middle clash q_i = n+2, p_i = n+1.
bool symbol_leq(const IndexSet& p, const IndexSet& q, const GrassContext& ctx);

/// f(lambda, m+1-j) + f(mu, j) <= n + k - lambda_{m+1-j} - mu_j for all j.
bool threshold_inequality_b(const KStrictPartition& lambda, const KStrictPartition& mu,
                            const GrassContext& ctx);

/// Family D: the g-sum bound g(lambda,t1,m+1-j) + g(mu,t2,j) >= 3 and the
/// f-inequality above, both for all j.
bool threshold_inequality_d(const KStrictPartition& lambda, const KStrictPartition& mu,
                            const GrassContext& ctx);

/// Weyl <-> symbol dictionary for W^{P_m} of the matching type (B_n or
/// D_{n+1}). symbol_of_weyl reads u as a signed permutation acting on the
/// isotropic basis positions [1, N]; the inverse direction is a lookup built
/// from the forward enumeration.
IndexSet symbol_of_weyl(const WeylElement& u, const GrassContext& ctx);

class SymbolDictionary {
 public:
  /// Builds the full bimap; rs must be B_n (resp. D_{n+1}) for ctx.
  SymbolDictionary(const RootSystem& rs, const GrassContext& ctx);

  const WeylElement& weyl_of(const IndexSet& s) const;
  const KStrictPartition& partition_of(const IndexSet& s) const;
  IndexSet symbol_of(const WeylElement& u) const { return symbol_of_weyl(u, ctx_); }
  const GrassContext& context() const { return ctx_; }
  const WpEnumeration& enumeration() const { return enumeration_; }
  size_t size() const { return by_symbol_.size(); }

 private:
  GrassContext ctx_;
  WpEnumeration enumeration_;
  std::map<IndexSet, WeylElement> by_symbol_;
  std::map<IndexSet, KStrictPartition> partition_by_symbol_;
};

WeylElement weyl_of_symbol(const IndexSet& s, const RootSystem& rs, const GrassContext& ctx);

}  // namespace schubert_ed
