#include "schubert_ed/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace schubert_ed {

namespace {

// Adds the Cartan entries of one edge. `mult` is the bond multiplicity and
// `short_node` the short-root end for mult > 1 (the short row carries -mult).
void add_edge(Mat8& cartan, int a, int b, int mult = 1, int short_node = -1) {
  if (mult == 1) {
    cartan(a, b) = -1;
    cartan(b, a) = -1;
    return;
  }
  int s = short_node, l = (short_node == a) ? b : a;
  cartan(s, l) = static_cast<int8_t>(-mult);
  cartan(l, s) = -1;
}

Mat8 cartan_matrix(LieFamily f, int r) {
  Mat8 c;
  for (int i = 0; i < r; ++i) c(i, i) = 2;
  switch (f) {
    case LieFamily::A:
      for (int i = 0; i + 1 < r; ++i) add_edge(c, i, i + 1);
      break;
    case LieFamily::B:
      for (int i = 0; i + 2 < r; ++i) add_edge(c, i, i + 1);
      add_edge(c, r - 2, r - 1, 2, r - 1);  // alpha_n short
      break;
    case LieFamily::C:
      for (int i = 0; i + 2 < r; ++i) add_edge(c, i, i + 1);
      add_edge(c, r - 2, r - 1, 2, r - 2);  // alpha_n long
      break;
    case LieFamily::D:
      for (int i = 0; i + 2 < r; ++i) add_edge(c, i, i + 1);
      add_edge(c, r - 3, r - 1);  // fork: nodes r-1 and r both meet r-2
      break;
    case LieFamily::E:
      add_edge(c, 0, 2);
      add_edge(c, 1, 3);
      for (int i = 2; i + 1 < r; ++i) add_edge(c, i, i + 1);
      break;
    case LieFamily::F:
      add_edge(c, 0, 1);
      add_edge(c, 1, 2, 2, 2);  // alpha_3, alpha_4 short
      add_edge(c, 2, 3);
      break;
    case LieFamily::G:
      add_edge(c, 0, 1, 3, 0);  // alpha_1 short
      break;
  }
  return c;
}

}  // namespace

RootSystem build_root_system(LieFamily family, int rank) {
  if (!valid_rank(family, rank))
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for type " +
                                family_name(family) + " (need " + rank_range_text(family) + ")");

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = cartan_matrix(family, rank);
  rs.weyl_order = weyl_group_order(family, rank);
  rs.coxeter = coxeter_number_of(family, rank);

  for (int i = 0; i < rank; ++i) {
    Mat8 s = Mat8::identity(rank);
    for (int j = 0; j < rank; ++j) {
      s(i, j) = static_cast<int8_t>((i == j ? 1 : 0) - rs.cartan(i, j));
      if (i != j && rs.cartan(i, j) != 0)
        rs.neighbors[i].emplace_back(j, rs.cartan(i, j));
    }
    rs.simple_action[i] = s;
  }

  // Close the simple roots under the simple reflections, keeping the
  // positive cone.
  std::set<RootVec> pos;
  std::vector<RootVec> work;
  for (int i = 0; i < rank; ++i) {
    RootVec v{};
    v[i] = 1;
    pos.insert(v);
    work.push_back(v);
  }
  while (!work.empty()) {
    RootVec v = work.back();
    work.pop_back();
    for (int i = 0; i < rank; ++i) {
      RootVec w = apply(rs.simple_action[i], v, rank);
      if (root_sign(w, rank) > 0 && pos.insert(w).second) work.push_back(w);
    }
  }
  rs.positive_roots.assign(pos.begin(), pos.end());
  return rs;
}

int coxeter_number(const RootSystem& rs) { return rs.coxeter; }

void validate_parabolic(const RootSystem& rs, const ParabolicSubset& p) {
  if (p.rank != rs.rank) throw std::invalid_argument("parabolic subset rank mismatch");
  if (p.excluded_mask >> (rs.rank + 1))
    throw std::invalid_argument("excluded node out of range for rank " + std::to_string(rs.rank));
}

std::vector<DiagramComponent> decompose_subdiagram(const RootSystem& rs,
                                                   const std::vector<int>& nodes) {
  std::vector<bool> in(rs.rank + 1, false), seen(rs.rank + 1, false);
  for (int n : nodes) {
    if (n < 1 || n > rs.rank) throw std::invalid_argument("node out of range");
    in[n] = true;
  }

  auto bond = [&](int a, int b) {  // 1-based; 0 if not adjacent
    return int(rs.cartan(a - 1, b - 1)) * int(rs.cartan(b - 1, a - 1));
  };

  std::vector<DiagramComponent> comps;
  for (int start : nodes) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y = 1; y <= rs.rank; ++y)
        if (in[y] && !seen[y] && bond(x, y) > 0) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    int size = static_cast<int>(comp.size());

    auto degree = [&](int x) {
      int d = 0;
      for (int y : comp)
        if (y != x && bond(x, y) > 0) ++d;
      return d;
    };

    DiagramComponent dc;
    dc.nodes = comp;
    dc.rank = size;
    dc.family = LieFamily::A;

    int triple = 0, double_a = 0, double_b = 0, branch = 0;
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j) {
        int m = bond(comp[i], comp[j]);
        if (m == 3) triple = 1;
        if (m == 2) { double_a = comp[i]; double_b = comp[j]; }
      }
    for (int x : comp)
      if (degree(x) >= 3) branch = x;

    if (triple) {
      dc.family = LieFamily::G;
    } else if (double_a) {
      if (size == 4 && degree(double_a) == 2 && degree(double_b) == 2) {
        dc.family = LieFamily::F;
      } else {
        // terminal double edge: B when the short end is the terminal one
        int short_end = (rs.cartan(double_a - 1, double_b - 1) == -2) ? double_a : double_b;
        dc.family = (degree(short_end) == 1) ? LieFamily::B : LieFamily::C;
        if (size == 2) dc.family = LieFamily::B;
      }
    } else if (branch) {
      std::vector<int> legs;
      for (int y : comp)
        if (y != branch && bond(branch, y) > 0) {
          int len = 1, prev = branch, cur = y;
          for (;;) {
            int next = 0;
            for (int z : comp)
              if (z != prev && z != cur && bond(cur, z) > 0) next = z;
            if (!next) break;
            prev = cur;
            cur = next;
            ++len;
          }
          legs.push_back(len);
        }
      std::sort(legs.begin(), legs.end());
      if (legs == std::vector<int>{1, 1, size - 3})
        dc.family = LieFamily::D;
      else
        dc.family = LieFamily::E;
    }
    comps.push_back(std::move(dc));
  }
  return comps;
}

uint64_t parabolic_order(const RootSystem& rs, const ParabolicSubset& p) {
  validate_parabolic(rs, p);
  uint64_t order = 1;
  for (const auto& c : decompose_subdiagram(rs, p.retained_nodes()))
    order *= weyl_group_order(c.family, c.rank);
  return order;
}

}  // namespace schubert_ed
