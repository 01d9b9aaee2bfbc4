#include "schubert_ed/schubert_symbols.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schubert_ed {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

GrassContext GrassContext::odd_orthogonal(int n, int m) {
  require(n >= 1 && m >= 1 && m <= n, "odd orthogonal context needs 1 <= m <= n");
  GrassContext c;
  c.family = LieFamily::B;
  c.n = n;
  c.m = m;
  c.k = n - m;
  c.N = 2 * n + 1;
  return c;
}

GrassContext GrassContext::even_orthogonal(int n, int m) {
  require(m >= 2 && m < n, "even orthogonal context needs 2 <= m < n");
  GrassContext c;
  c.family = LieFamily::D;
  c.n = n;
  c.m = m;
  c.k = n + 1 - m;
  c.N = 2 * n + 2;
  return c;
}

int KStrictPartition::weight() const {
  int s = 0;
  for (int v : parts) s += v;
  return s;
}

namespace {

// lambda_i with the lambda_0 = n+k+1 convention; i is 0-based in [0, m].
int part_at(const KStrictPartition& lambda, int i, const GrassContext& ctx) {
  return i == 0 ? ctx.n + ctx.k + 1 : lambda.parts[i - 1];
}

bool has_part_equal_k(const KStrictPartition& lambda, const GrassContext& ctx) {
  for (int v : lambda.parts)
    if (v == ctx.k) return true;
  return false;
}

}  // namespace

void validate_partition(const KStrictPartition& lambda, const GrassContext& ctx) {
  require(static_cast<int>(lambda.parts.size()) == ctx.m,
          "partition must have exactly m parts (pad with zeros)");
  for (int i = 0; i < ctx.m; ++i) {
    int v = lambda.parts[i];
    require(v >= 0 && v <= ctx.n + ctx.k, "part outside the m x (n+k) rectangle");
    if (i + 1 < ctx.m) {
      require(v >= lambda.parts[i + 1], "parts must be weakly decreasing");
      require(!(v > ctx.k && v == lambda.parts[i + 1]), "part greater than k repeated");
    }
  }
  if (ctx.family == LieFamily::B) {
    require(lambda.t == 0, "type tag is only meaningful in family D");
  } else {
    if (has_part_equal_k(lambda, ctx))
      require(lambda.t == 1 || lambda.t == 2, "a part equals k: type tag t must be 1 or 2");
    else
      require(lambda.t == 0, "no part equals k: type tag t must be 0");
  }
}

void validate_index_set(const IndexSet& s, const GrassContext& ctx) {
  require(static_cast<int>(s.p.size()) == ctx.m, "index set must have m entries");
  for (int i = 0; i < ctx.m; ++i) {
    require(s.p[i] >= 1 && s.p[i] <= ctx.N, "index set entry outside [1, N]");
    if (i + 1 < ctx.m) require(s.p[i] < s.p[i + 1], "index set entries must increase");
    for (int j = i + 1; j < ctx.m; ++j)
      require(s.p[i] + s.p[j] != ctx.N + 1, "index set hits a complementary pair");
    if (ctx.family == LieFamily::B)
      require(s.p[i] != ctx.n + 1, "family B index sets avoid n+1");
  }
}

std::vector<KStrictPartition> enumerate_kstrict(const GrassContext& ctx) {
  std::vector<KStrictPartition> out;
  std::vector<int> cur;
  cur.reserve(ctx.m);

  auto emit = [&](const std::vector<int>& parts) {
    KStrictPartition lambda;
    lambda.parts = parts;
    if (ctx.family == LieFamily::D && has_part_equal_k(lambda, ctx)) {
      lambda.t = 1;
      out.push_back(lambda);
      lambda.t = 2;
      out.push_back(lambda);
    } else {
      lambda.t = 0;
      out.push_back(lambda);
    }
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == ctx.m) {
      emit(cur);
      return;
    }
    int prev = depth == 0 ? ctx.n + ctx.k : cur.back();
    for (int v = prev; v >= 0; --v) {
      if (v > ctx.k && v == prev && depth > 0) continue;  // no part > k repeats
      cur.push_back(v);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool is_big_pair(const KStrictPartition& lambda, int i, int j, const GrassContext& ctx) {
  require(0 <= i && i < j && j <= ctx.m, "subscript pair out of range");
  return part_at(lambda, i, ctx) + part_at(lambda, j, ctx) > ctx.big_threshold() + (j - i);
}

int f_big_count(const KStrictPartition& lambda, int j, const GrassContext& ctx) {
  require(1 <= j && j <= ctx.m, "f-function index out of range");
  int count = 0;
  for (int i = 1; i < j; ++i)
    if (is_big_pair(lambda, i, j, ctx)) ++count;
  return count;
}

int g_function(const KStrictPartition& lambda, int j, const GrassContext& ctx) {
  require(ctx.family == LieFamily::D, "g is defined for family D contexts");
  require(1 <= j && j <= ctx.m, "g-function index out of range");
  int lj = part_at(lambda, j, ctx);
  if (lj > ctx.k) return 1;
  if (lj == ctx.k && ctx.k < part_at(lambda, j - 1, ctx) && (ctx.n + j + lambda.t) % 2 == 0)
    return 1;
  return 2;
}

namespace {

int small_count(const KStrictPartition& lambda, int j, const GrassContext& ctx) {
  int count = 0;
  for (int i = 1; i < j; ++i)
    if (!is_big_pair(lambda, i, j, ctx)) ++count;
  return count;
}

}  // namespace

IndexSet phi_index_set(const KStrictPartition& lambda, const GrassContext& ctx) {
  require(ctx.family == LieFamily::B, "Phi is the family-B bijection");
  validate_partition(lambda, ctx);
  IndexSet s;
  s.p.resize(ctx.m);
  for (int j = 1; j <= ctx.m; ++j) {
    int lj = lambda.parts[j - 1];
    s.p[j - 1] = ctx.n + ctx.k + 1 - lj + small_count(lambda, j, ctx) + (lj <= ctx.k ? 1 : 0);
  }
  validate_index_set(s, ctx);
  return s;
}

IndexSet psi_index_set(const KStrictPartition& lambda, const GrassContext& ctx) {
  require(ctx.family == LieFamily::D, "Psi is the family-D bijection");
  validate_partition(lambda, ctx);
  IndexSet s;
  s.p.resize(ctx.m);
  for (int j = 1; j <= ctx.m; ++j) {
    int lj = lambda.parts[j - 1];
    s.p[j - 1] = ctx.n + ctx.k - lj + small_count(lambda, j, ctx) + g_function(lambda, j, ctx);
  }
  validate_index_set(s, ctx);
  return s;
}

IndexSet index_set_of(const KStrictPartition& lambda, const GrassContext& ctx) {
  return ctx.family == LieFamily::B ? phi_index_set(lambda, ctx) : psi_index_set(lambda, ctx);
}

IndexSet dual_index_set(const IndexSet& s, const GrassContext& ctx) {
  validate_index_set(s, ctx);
  IndexSet d;
  d.p.resize(ctx.m);
  for (int j = 1; j <= ctx.m; ++j) {
    int q = s.p[ctx.m - j];
    if (ctx.family == LieFamily::B) {
      d.p[j - 1] = 2 * ctx.n + 2 - q;
    } else {
      bool keep = (ctx.n % 2 == 0) && (q == ctx.n + 1 || q == ctx.n + 2);
      d.p[j - 1] = keep ? q : 2 * ctx.n + 3 - q;
    }
  }
  std::sort(d.p.begin(), d.p.end());
  validate_index_set(d, ctx);
  return d;
}

bool symbol_leq(const IndexSet& p, const IndexSet& q, const GrassContext& ctx) {
  validate_index_set(p, ctx);
  validate_index_set(q, ctx);
  for (int i = 0; i < ctx.m; ++i)
    if (p.p[i] > q.p[i]) return false;
  if (ctx.family == LieFamily::B) return true;

  // Even case: componentwise dominance alone overshoots. Whenever both
  // symbols have the same number of entries <= x and their remaining entries
  // all lie strictly inside the window (x, N+1-x), the tails span maximal
  // isotropic subspaces of a C^{2(r-x)} quadric; containment then forces the
  // two tails into the same family, i.e. |T_p cap T_q| = r - x (mod 2).
  // The familiar middle clash (q_i = n+2 against p_i = n+1) is the r-x = 1
  // instance of this condition.
  const int r = ctx.n + 1;
  for (int x = 0; x < r; ++x) {
    int cp = 0, cq = 0;
    for (int v : p.p) cp += v <= x;
    for (int v : q.p) cq += v <= x;
    if (cp != cq) continue;
    const int s = r - x;
    if (ctx.m - cp != s) continue;
    bool inside = true;
    int inter = 0;
    for (int i = cp; i < ctx.m; ++i) {
      if (p.p[i] >= ctx.N + 1 - x || q.p[i] >= ctx.N + 1 - x) inside = false;
    }
    if (!inside) continue;
    for (int i = cp; i < ctx.m; ++i)
      for (int j = cq; j < ctx.m; ++j) inter += p.p[i] == q.p[j];
    if (inter % 2 != s % 2) return false;
  }
  return true;
}

bool threshold_inequality_b(const KStrictPartition& lambda, const KStrictPartition& mu,
                            const GrassContext& ctx) {
  require(ctx.family == LieFamily::B, "family B inequality");
  validate_partition(lambda, ctx);
  validate_partition(mu, ctx);
  for (int j = 1; j <= ctx.m; ++j) {
    int lhs = f_big_count(lambda, ctx.m + 1 - j, ctx) + f_big_count(mu, j, ctx);
    int rhs = ctx.n + ctx.k - lambda.parts[ctx.m - j] - mu.parts[j - 1];
    if (lhs > rhs) return false;
  }
  return true;
}

bool threshold_inequality_d(const KStrictPartition& lambda, const KStrictPartition& mu,
                            const GrassContext& ctx) {
  require(ctx.family == LieFamily::D, "family D inequality");
  validate_partition(lambda, ctx);
  validate_partition(mu, ctx);
  for (int j = 1; j <= ctx.m; ++j) {
    if (g_function(lambda, ctx.m + 1 - j, ctx) + g_function(mu, j, ctx) < 3) return false;
    int lhs = f_big_count(lambda, ctx.m + 1 - j, ctx) + f_big_count(mu, j, ctx);
    int rhs = ctx.n + ctx.k - lambda.parts[ctx.m - j] - mu.parts[j - 1];
    if (lhs > rhs) return false;
  }
  return true;
}

// ------------------------------------------------------------- dictionary

namespace {

// Simple reflections as involutions of the position set [1, N], where
// position p pairs with N+1-p. Letters below the fork act as mirrored
// adjacent transpositions; the last letter flips the middle.
int position_image(const GrassContext& ctx, int letter, int x) {
  if (ctx.family == LieFamily::B) {
    int n = ctx.n, N = ctx.N;
    if (letter < n) {
      if (x == letter) return letter + 1;
      if (x == letter + 1) return letter;
      if (x == N - letter) return N + 1 - letter;
      if (x == N + 1 - letter) return N - letter;
      return x;
    }
    if (x == n) return n + 2;
    if (x == n + 2) return n;
    return x;
  }
  int r = ctx.n + 1;  // rank of D_{n+1}
  if (letter < r) {
    if (x == letter) return letter + 1;
    if (x == letter + 1) return letter;
    if (x == 2 * r - letter) return 2 * r + 1 - letter;
    if (x == 2 * r + 1 - letter) return 2 * r - letter;
    return x;
  }
  if (x == r - 1) return r + 1;
  if (x == r + 1) return r - 1;
  if (x == r) return r + 2;
  if (x == r + 2) return r;
  return x;
}

void check_context_pair(const WeylElement& u, const GrassContext& ctx) {
  const RootSystem& rs = *u.rs;
  bool ok = (ctx.family == LieFamily::B && rs.family == LieFamily::B && rs.rank == ctx.n) ||
            (ctx.family == LieFamily::D && rs.family == LieFamily::D && rs.rank == ctx.n + 1);
  require(ok, "Weyl element does not belong to the context's root system");
}

}  // namespace

IndexSet symbol_of_weyl(const WeylElement& u, const GrassContext& ctx) {
  check_context_pair(u, ctx);
  ParabolicSubset pm = ParabolicSubset::from_excluded(u.rs->rank, {ctx.m});
  require(is_minimal_rep(u, pm), "element is not a minimal representative for P_m");

  // the T-fixed point of the cell through u is u . span{e_1, ..., e_m}
  std::vector<int> pos(ctx.m);
  for (int i = 0; i < ctx.m; ++i) pos[i] = i + 1;
  Word word = reduced_word(u);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    for (int& x : pos) x = position_image(ctx, *it, x);
  std::sort(pos.begin(), pos.end());

  IndexSet cell;
  cell.p = std::move(pos);
  validate_index_set(cell, ctx);
  // the cell symbol grades by dimension; the Schubert symbol of [X_u] is its dual
  return dual_index_set(cell, ctx);
}

SymbolDictionary::SymbolDictionary(const RootSystem& rs, const GrassContext& ctx)
    : ctx_(ctx),
      enumeration_(enumerate_wp(rs, ParabolicSubset::from_excluded(rs.rank, {ctx.m}))) {
  for (const KStrictPartition& lambda : enumerate_kstrict(ctx)) {
    IndexSet s = index_set_of(lambda, ctx);
    if (!partition_by_symbol_.emplace(s, lambda).second)
      throw std::logic_error("Phi/Psi image collision");
  }
  if (partition_by_symbol_.size() != enumeration_.total)
    throw std::logic_error("partition count does not match |W^{P_m}|");

  for (const auto& stratum : enumeration_.strata)
    for (const WeylElement& u : stratum) {
      IndexSet s = symbol_of_weyl(u, ctx_);
      auto it = partition_by_symbol_.find(s);
      if (it == partition_by_symbol_.end())
        throw std::logic_error("Weyl symbol misses the Phi/Psi image");
      if (it->second.weight() != u.len)
        throw std::logic_error("symbol weight disagrees with the Weyl length");
      if (!by_symbol_.emplace(s, u).second)
        throw std::logic_error("Weyl-to-symbol map is not injective");
    }
}

const WeylElement& SymbolDictionary::weyl_of(const IndexSet& s) const {
  auto it = by_symbol_.find(s);
  require(it != by_symbol_.end(), "index set is not a symbol of this context");
  return it->second;
}

const KStrictPartition& SymbolDictionary::partition_of(const IndexSet& s) const {
  auto it = partition_by_symbol_.find(s);
  require(it != partition_by_symbol_.end(), "index set is not a symbol of this context");
  return it->second;
}

WeylElement weyl_of_symbol(const IndexSet& s, const RootSystem& rs, const GrassContext& ctx) {
  return SymbolDictionary(rs, ctx).weyl_of(s);
}

}  // namespace schubert_ed
