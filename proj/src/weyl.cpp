#include "schubert_ed/weyl.hpp"

#include <stdexcept>

namespace schubert_ed {

namespace {

inline int column_sign(const Mat8& m, int col, int rank) {
  for (int i = 0; i < rank; ++i) {
    int8_t v = m(i, col);
    if (v > 0) return 1;
    if (v < 0) return -1;
  }
  return 0;
}

inline void check_node(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank)
    throw std::invalid_argument("simple reflection index out of range: " + std::to_string(node));
}

inline void check_same_context(const WeylElement& u, const WeylElement& v) {
  if (!u.rs || !v.rs || !u.rs->same_context(*v.rs))
    throw std::invalid_argument("Weyl elements from different root systems");
}

}  // namespace

WeylElement identity_element(const RootSystem& rs) {
  WeylElement w;
  w.m = Mat8::identity(rs.rank);
  w.minv = w.m;
  w.len = 0;
  w.rs = &rs;
  return w;
}

WeylElement simple_reflection(const RootSystem& rs, int node) {
  check_node(rs, node);
  WeylElement w;
  w.m = rs.simple_action[node - 1];
  w.minv = w.m;
  w.len = 1;
  w.rs = &rs;
  return w;
}

bool is_descent(const WeylElement& w, Side side, int node) {
  const Mat8& m = (side == Side::Right) ? w.m : w.minv;
  return column_sign(m, node - 1, w.rs->rank) < 0;
}

std::vector<int> descents(const WeylElement& w, Side side) {
  std::vector<int> out;
  for (int i = 1; i <= w.rs->rank; ++i)
    if (is_descent(w, side, i)) out.push_back(i);
  return out;
}

void mult_simple_right(WeylElement& w, int node) {
  const RootSystem& rs = *w.rs;
  int i = node - 1;
  bool descent = is_descent(w, Side::Right, node);

  // m <- m * S_i : column operations using the original column i
  for (auto [j, c] : rs.neighbors[i])
    for (int r = 0; r < rs.rank; ++r)
      w.m(r, j) = static_cast<int8_t>(w.m(r, j) - c * w.m(r, i));
  for (int r = 0; r < rs.rank; ++r) w.m(r, i) = static_cast<int8_t>(-w.m(r, i));

  // minv <- S_i * minv : row operation on row i
  for (int cidx = 0; cidx < rs.rank; ++cidx) {
    int s = -int(w.minv(i, cidx));
    for (auto [l, c] : rs.neighbors[i]) s -= c * int(w.minv(l, cidx));
    w.minv(i, cidx) = static_cast<int8_t>(s);
  }

  w.len += descent ? -1 : 1;
}

void mult_simple_left(WeylElement& w, int node) {
  const RootSystem& rs = *w.rs;
  int i = node - 1;
  bool descent = is_descent(w, Side::Left, node);

  // m <- S_i * m
  for (int cidx = 0; cidx < rs.rank; ++cidx) {
    int s = -int(w.m(i, cidx));
    for (auto [l, c] : rs.neighbors[i]) s -= c * int(w.m(l, cidx));
    w.m(i, cidx) = static_cast<int8_t>(s);
  }

  // minv <- minv * S_i
  for (auto [j, c] : rs.neighbors[i])
    for (int r = 0; r < rs.rank; ++r)
      w.minv(r, j) = static_cast<int8_t>(w.minv(r, j) - c * w.minv(r, i));
  for (int r = 0; r < rs.rank; ++r) w.minv(r, i) = static_cast<int8_t>(-w.minv(r, i));

  w.len += descent ? -1 : 1;
}

WeylElement from_word(const RootSystem& rs, const Word& word) {
  WeylElement w = identity_element(rs);
  for (int letter : word) {
    check_node(rs, letter);
    mult_simple_right(w, letter);
  }
  return w;
}

int length(const WeylElement& w) { return w.len; }

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  check_same_context(u, v);
  const int rank = u.rs->rank;
  WeylElement out;
  out.rs = u.rs;
  out.m = schubert_ed::multiply(u.m, v.m, rank);
  out.minv = schubert_ed::multiply(v.minv, u.minv, rank);
  // length is the inversion count of the product
  out.len = 0;
  for (const RootVec& r : u.rs->positive_roots)
    if (root_sign(apply(out.m, r, rank), rank) < 0) ++out.len;
  return out;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement out = w;
  std::swap(out.m, out.minv);
  return out;
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& nodes) {
  for (int n : nodes) check_node(rs, n);
  WeylElement w = identity_element(rs);
  for (;;) {
    bool stepped = false;
    for (int n : nodes) {
      if (!is_descent(w, Side::Right, n)) {
        mult_simple_right(w, n);
        stepped = true;
        break;
      }
    }
    if (!stepped) return w;
  }
}

WeylElement longest_element(const RootSystem& rs) {
  std::vector<int> all;
  for (int i = 1; i <= rs.rank; ++i) all.push_back(i);
  return longest_element(rs, all);
}

Word reduced_word(const WeylElement& w) {
  Word out;
  out.reserve(static_cast<size_t>(w.len));
  WeylElement x = w;
  while (x.len > 0) {
    for (int i = 1; i <= x.rs->rank; ++i) {
      if (is_descent(x, Side::Left, i)) {
        out.push_back(i);
        mult_simple_left(x, i);
        break;
      }
    }
  }
  return out;
}

uint16_t support_mask(const WeylElement& w) {
  uint16_t mask = 0;
  WeylElement x = w;
  while (x.len > 0) {
    for (int i = 1; i <= x.rs->rank; ++i) {
      if (is_descent(x, Side::Left, i)) {
        mask |= static_cast<uint16_t>(1u << (i - 1));
        mult_simple_left(x, i);
        break;
      }
    }
  }
  return mask;
}

Word parse_word_digits(const std::string& text) {
  Word out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch < '1' || ch > '9')
      throw std::invalid_argument(std::string("invalid word character '") + ch + "'");
    out.push_back(ch - '0');
  }
  return out;
}

std::string word_to_digits(const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (int letter : word) {
    if (letter < 1 || letter > 9)
      throw std::invalid_argument("word letter out of digit range");
    out.push_back(static_cast<char>('0' + letter));
  }
  return out;
}

}  // namespace schubert_ed
