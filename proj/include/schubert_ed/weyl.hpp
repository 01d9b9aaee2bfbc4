#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubert_ed/root_system.hpp"

namespace schubert_ed {

/// A word in the simple reflections, 1-based letters, multiplied
/// left-to-right (s_{413} = s_4 s_1 s_3). Words need not be reduced.
using Word = std::vector<int>;

/// A Weyl group element in canonical form: the integer matrix of its action
/// on the simple-root basis (column j = image of alpha_j), together with the
/// matrix of the inverse and the cached length. Two elements of the same
/// root system are equal iff their action matrices are equal.
struct WeylElement {
  Mat8 m;     // action of w
  Mat8 minv;  // action of w^{-1}; left-descent tests read its columns
  int len = 0;
  const RootSystem* rs = nullptr;

  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool operator!=(const WeylElement& o) const { return !(m == o.m); }
  bool is_identity() const { return len == 0; }
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int node);

/// Product of the listed simple reflections, left-to-right.
/// Throws std::invalid_argument on an out-of-range letter.
WeylElement from_word(const RootSystem& rs, const Word& word);

int length(const WeylElement& w);

enum class Side { Left, Right };

/// node is a right descent of w iff w(alpha_node) < 0;
/// a left descent iff w^{-1}(alpha_node) < 0.
bool is_descent(const WeylElement& w, Side side, int node);
std::vector<int> descents(const WeylElement& w, Side side);

/// In-place w <- w * s_node (resp. s_node * w); length goes up or down by 1.
void mult_simple_right(WeylElement& w, int node);
void mult_simple_left(WeylElement& w, int node);

WeylElement multiply(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& w);

/// Longest element of the standard parabolic subgroup generated by the
/// retained nodes of `p` (use full_exclusion's complement... pass the node
/// set directly). Computed by greedy length ascent.
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& nodes);
/// Longest element w_0 of the full group.
WeylElement longest_element(const RootSystem& rs);

/// Deterministic reduced word: repeatedly strip the smallest-index left
/// descent. from_word(reduced_word(w)) == w and the word has length len(w).
Word reduced_word(const WeylElement& w);

/// Bitmask (bit node-1) of simple reflections appearing in reduced words
/// of w. Well defined: the support of an element does not depend on the
/// chosen reduced word.
uint16_t support_mask(const WeylElement& w);

/// Digit-string parsing of the s_{...} notation ("765432413").
Word parse_word_digits(const std::string& text);
std::string word_to_digits(const Word& word);

}  // namespace schubert_ed
