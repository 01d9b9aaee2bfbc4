#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "schubert_ed/weyl.hpp"

using namespace schubert_ed;
using namespace schubert_ed::testing;

TEST_CASE("from_word basics") {
  RootSystem a2 = build_root_system(LieFamily::A, 2);
  CHECK(from_word(a2, {}).len == 0);
  CHECK(from_word(a2, {1, 1}) == identity_element(a2));

  RootSystem f4 = build_root_system(LieFamily::F, 4);
  WeylElement w = from_word(f4, {4, 3, 2, 3, 4});
  CHECK(w.len == 5);  // the word is reduced
  CHECK(inversion_count(f4, w.m) == 5);

  CHECK_THROWS_AS(from_word(a2, {3}), std::invalid_argument);
}

TEST_CASE("length") {
  RootSystem b2 = build_root_system(LieFamily::B, 2);
  CHECK(length(identity_element(b2)) == 0);
  CHECK(length(longest_element(b2)) == 4);  // |R+| of B2

  RootSystem a2 = build_root_system(LieFamily::A, 2);
  CHECK(length(from_word(a2, {1, 2})) == 2);
}

TEST_CASE("cached length equals the inversion count everywhere in B3") {
  RootSystem b3 = build_root_system(LieFamily::B, 3);
  for (const WeylElement& w : full_weyl_group(b3))
    CHECK(w.len == inversion_count(b3, w.m));
}

TEST_CASE("descents") {
  RootSystem a2 = build_root_system(LieFamily::A, 2);
  CHECK(descents(identity_element(a2), Side::Right).empty());
  CHECK(descents(identity_element(a2), Side::Left).empty());

  RootSystem b3 = build_root_system(LieFamily::B, 3);
  CHECK(descents(simple_reflection(b3, 1), Side::Right) == std::vector<int>{1});

  WeylElement w0 = longest_element(a2);
  CHECK(descents(w0, Side::Right) == std::vector<int>{1, 2});
  CHECK(descents(w0, Side::Left) == std::vector<int>{1, 2});

  // right descents = {i : w(alpha_i) < 0}; left = right descents of inverse
  for (const WeylElement& w : full_weyl_group(b3))
    CHECK(descents(w, Side::Left) == descents(inverse(w), Side::Right));
}

TEST_CASE("multiply and inverse satisfy the group axioms") {
  RootSystem a2 = build_root_system(LieFamily::A, 2);
  WeylElement s1 = simple_reflection(a2, 1), s2 = simple_reflection(a2, 2);
  CHECK(multiply(s1, s2) != multiply(s2, s1));

  RootSystem b3 = build_root_system(LieFamily::B, 3);
  WeylElement id = identity_element(b3);
  for (const WeylElement& w : full_weyl_group(b3)) {
    CHECK(multiply(w, id) == w);
    CHECK(multiply(w, inverse(w)) == id);
    CHECK(length(inverse(w)) == length(w));
  }
}

TEST_CASE("longest elements") {
  RootSystem b2 = build_root_system(LieFamily::B, 2);
  CHECK(longest_element(b2, {}) == identity_element(b2));
  CHECK(longest_element(b2).len == 4);

  RootSystem e7 = build_root_system(LieFamily::E, 7);
  CHECK(longest_element(e7).len == 63);

  // l(w0 u) = l(w0) - l(u)
  for (LieFamily f : {LieFamily::A, LieFamily::B}) {
    RootSystem rs = build_root_system(f, 3);
    WeylElement w0 = longest_element(rs);
    for (const WeylElement& u : full_weyl_group(rs))
      CHECK(length(multiply(w0, u)) == w0.len - u.len);
  }
}

TEST_CASE("reduced words") {
  RootSystem a3 = build_root_system(LieFamily::A, 3);
  CHECK(reduced_word(identity_element(a3)).empty());
  CHECK(reduced_word(simple_reflection(a3, 3)) == Word{3});

  for (const WeylElement& w : full_weyl_group(a3)) {
    Word rw = reduced_word(w);
    CHECK(static_cast<int>(rw.size()) == w.len);
    CHECK(from_word(a3, rw) == w);
  }
}

TEST_CASE("group orders by full enumeration") {
  CHECK(full_weyl_group(build_root_system(LieFamily::A, 3)).size() == 24);
  CHECK(full_weyl_group(build_root_system(LieFamily::B, 3)).size() == 48);
  CHECK(full_weyl_group(build_root_system(LieFamily::D, 4)).size() == 192);
  CHECK(full_weyl_group(build_root_system(LieFamily::G, 2)).size() == 12);
}

TEST_CASE("support masks") {
  RootSystem a3 = build_root_system(LieFamily::A, 3);
  CHECK(support_mask(identity_element(a3)) == 0);
  CHECK(support_mask(from_word(a3, {1, 2})) == 0b011);
  CHECK(support_mask(from_word(a3, {2, 1, 2})) == 0b011);  // = s1 s2 s1
}

TEST_CASE("digit-string words") {
  CHECK(parse_word_digits("765432413") == Word{7, 6, 5, 4, 3, 2, 4, 1, 3});
  CHECK(word_to_digits({4, 1, 3}) == "413");
  CHECK_THROWS_AS(parse_word_digits("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_digits("102"), std::invalid_argument);
}
