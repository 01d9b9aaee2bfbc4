#pragma once

#include <utility>
#include <vector>

#include "schubert_ed/lie.hpp"
#include "schubert_ed/matrix.hpp"

namespace schubert_ed {

/// Root-system data for one simple type, in the simple-root basis.
///
/// The Cartan pairing is stored as cartan(i, j) = <alpha_j, alpha_i^vee>,
/// so the simple reflection acts by s_i(alpha_j) = alpha_j - cartan(i,j) alpha_i.
/// Node indices are 0-based internally; the public API of the higher modules
/// speaks 1-based node numbers matching the Dynkin diagram labels.
struct RootSystem {
  LieFamily family;
  int rank = 0;
  Mat8 cartan;                       // cartan(i,j) as above, 0-based
  std::vector<RootVec> positive_roots;
  std::array<Mat8, kMaxRank> simple_action{};  // matrix of s_i on the root lattice
  // nonzero off-diagonal cartan entries per node: (j, cartan(i,j))
  std::array<std::vector<std::pair<int, int>>, kMaxRank> neighbors{};
  uint64_t weyl_order = 0;
  int coxeter = 0;

  bool same_context(const RootSystem& o) const {
    return family == o.family && rank == o.rank;
  }
};

/// Builds the root system; throws std::invalid_argument on a rank that is
/// not admissible for the family. Positive roots are generated by closing
/// the simple roots under the simple reflections.
RootSystem build_root_system(LieFamily family, int rank);

int coxeter_number(const RootSystem& rs);

/// Throws if the subset does not match the root system.
void validate_parabolic(const RootSystem& rs, const ParabolicSubset& p);

/// One connected component of an induced subdiagram.
struct DiagramComponent {
  LieFamily family;
  int rank = 0;
  std::vector<int> nodes;  // 1-based nodes of rs, in diagram order
};

/// Decomposes the subdiagram induced on `nodes` (1-based) into simple
/// components, classifying each one. B and C are distinguished by which end
/// of the double edge is short, which never matters to the callers here
/// (Weyl order and effective good divisibility agree for B and C).
std::vector<DiagramComponent> decompose_subdiagram(const RootSystem& rs,
                                                   const std::vector<int>& nodes);

/// |W_P| for the parabolic generated by the retained nodes of p.
uint64_t parabolic_order(const RootSystem& rs, const ParabolicSubset& p);

}  // namespace schubert_ed
