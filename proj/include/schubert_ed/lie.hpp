#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schubert_ed {

/// The nine simple families, with the node numbering of the usual Dynkin
/// diagram tables (chains 1..n; D forks at the last two nodes; E hangs
/// node 2 off node 4; B_n has alpha_n short, C_n has alpha_n long).
enum class LieFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

std::string family_name(LieFamily f);

/// Parses "A".."G" as well as fused names like "E7" or "F4".
/// On a fused name *rank_out is set; otherwise it is left untouched.
bool parse_family(const std::string& text, LieFamily& f, int* rank_out);

/// Rank constraints: A >= 1, B/C >= 2, D >= 4, E in {6,7,8}, F = 4, G = 2.
bool valid_rank(LieFamily f, int rank);
std::string rank_range_text(LieFamily f);

/// |W| by the classical product formulas.
uint64_t weyl_group_order(LieFamily f, int rank);

/// |R+| per family.
int positive_root_count(LieFamily f, int rank);

/// Coxeter number h of the family.
int coxeter_number_of(LieFamily f, int rank);

/// A parabolic subgroup datum: the set of *excluded* simple nodes
/// (Delta minus Delta_P), as a bitmask over 1-based node indices.
struct ParabolicSubset {
  int rank = 0;
  uint32_t excluded_mask = 0;

  static ParabolicSubset from_excluded(int rank, const std::vector<int>& nodes);
  /// All nodes excluded: W_P trivial, W^P = W.
  static ParabolicSubset full_exclusion(int rank);

  bool is_excluded(int node) const { return (excluded_mask >> node) & 1u; }
  bool is_retained(int node) const { return node >= 1 && node <= rank && !is_excluded(node); }
  std::vector<int> excluded_nodes() const;
  std::vector<int> retained_nodes() const;
  int excluded_count() const;
  bool proper() const { return excluded_mask != 0; }
};

}  // namespace schubert_ed
