#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "schubert_ed/bruhat.hpp"

using namespace schubert_ed;
using namespace schubert_ed::testing;

TEST_CASE("basic comparisons") {
  RootSystem a2 = build_root_system(LieFamily::A, 2);
  BruhatCache cache(a2);
  WeylElement id = identity_element(a2);
  WeylElement s1 = simple_reflection(a2, 1), s2 = simple_reflection(a2, 2);
  WeylElement w0 = longest_element(a2);

  CHECK(cache.leq(id, id));
  CHECK(cache.leq(id, w0));
  CHECK(cache.leq(s1, s1));
  CHECK_FALSE(cache.leq(s1, s2));
  CHECK(cache.leq(s1, w0));
  CHECK_FALSE(cache.leq(w0, s1));

  RootSystem b2 = build_root_system(LieFamily::B, 2);
  CHECK_THROWS_AS(cache.leq(id, identity_element(b2)), std::invalid_argument);
}

TEST_CASE("partial order axioms on full A3 and B3") {
  for (auto fam : {LieFamily::A, LieFamily::B}) {
    RootSystem rs = build_root_system(fam, 3);
    BruhatCache cache(rs);
    auto all = full_weyl_group(rs);
    const size_t n = all.size();

    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) le[i][j] = cache.leq(all[i], all[j]);

    for (size_t i = 0; i < n; ++i) {
      CHECK(le[i][i]);
      for (size_t j = 0; j < n; ++j) {
        if (le[i][j]) {
          CHECK(all[i].len <= all[j].len);
          if (all[i].len == all[j].len) CHECK(all[i] == all[j]);
          if (le[j][i]) CHECK(all[i] == all[j]);  // antisymmetry
        }
        for (size_t k = 0; k < n; ++k)
          if (le[i][j] && le[j][k]) CHECK(le[i][k]);  // transitivity
      }
    }
  }
}

TEST_CASE("agreement with the subword oracle on A3 and B2") {
  for (auto [fam, rank] : {std::pair{LieFamily::A, 3}, {LieFamily::B, 2}}) {
    RootSystem rs = build_root_system(fam, rank);
    BruhatCache cache(rs);
    auto all = full_weyl_group(rs);
    for (const WeylElement& u : all)
      for (const WeylElement& w : all) {
        CAPTURE(word_to_digits(reduced_word(u)));
        CAPTURE(word_to_digits(reduced_word(w)));
        CHECK(cache.leq(u, w) == subword_leq(u, w));
      }
  }
}

TEST_CASE("support inclusion is a sound pre-filter") {
  RootSystem b3 = build_root_system(LieFamily::B, 3);
  BruhatCache cache(b3);
  auto all = full_weyl_group(b3);
  for (const WeylElement& u : all)
    for (const WeylElement& w : all) {
      uint16_t su = support_mask(u), sw = support_mask(w);
      if ((su & ~sw) != 0) CHECK_FALSE(cache.leq(u, w));
    }
}

TEST_CASE("the E7 table-row-3 pair is incomparable") {
  RootSystem e7 = build_root_system(LieFamily::E, 7);
  BruhatCache cache(e7);
  WeylElement u = from_word(e7, parse_word_digits("765432413"));
  WeylElement w = from_word(e7, parse_word_digits("6245341324567541324561324532413"));
  CHECK_FALSE(cache.leq(u, w));

  // the hand reduction ends at s_432413 <= s_413, which obviously fails
  WeylElement ru = from_word(e7, parse_word_digits("432413"));
  WeylElement rw = from_word(e7, parse_word_digits("413"));
  CHECK_FALSE(cache.leq(ru, rw));
}

TEST_CASE("projection criterion agrees with the direct order") {
  struct Case {
    LieFamily family;
    int rank;
    std::vector<int> excluded;
  };
  for (const Case& c : {Case{LieFamily::B, 3, {1, 2}}, Case{LieFamily::A, 3, {1, 3}}}) {
    RootSystem rs = build_root_system(c.family, c.rank);
    auto p = ParabolicSubset::from_excluded(c.rank, c.excluded);
    WpEnumeration e = enumerate_wp(rs, p);
    BruhatCache cache(rs);
    CHECK(projection_leq(cache, identity_element(rs), identity_element(rs), p));
    for (const auto& su : e.strata)
      for (const WeylElement& u : su)
        for (const auto& sw : e.strata)
          for (const WeylElement& w : sw)
            CHECK(projection_leq(cache, u, w, p) == cache.leq(u, w));
  }

  RootSystem b3 = build_root_system(LieFamily::B, 3);
  auto p = ParabolicSubset::from_excluded(3, {1, 2});
  BruhatCache cache(b3);
  WeylElement bad = simple_reflection(b3, 3);  // not in W^P
  CHECK_THROWS_AS(projection_leq(cache, bad, bad, p), std::invalid_argument);
}

TEST_CASE("incomparable pair search") {
  RootSystem b2 = build_root_system(LieFamily::B, 2);
  auto p1 = ParabolicSubset::from_excluded(2, {1});
  WpEnumeration q3 = enumerate_wp(b2, p1);
  BruhatCache cache(b2);

  CHECK(incomparable_pairs_at(cache, q3, 0, 2).pairs.empty());

  // Q3: no incomparable pairs in the window i + j >= dim, i + (dim - j) <= 3
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      if (i + j >= q3.dimension && i + (q3.dimension - j) <= 3)
        CHECK(incomparable_pairs_at(cache, q3, i, j).pairs.empty());

  // F4(1): a witness pair with len(u) = 5 and len(w) = 7 = dim - 8 exists,
  // certifying e.d. = 12 (total degree 5 + (15 - 7) = 13)
  RootSystem f4 = build_root_system(LieFamily::F, 4);
  WpEnumeration e = enumerate_wp(f4, ParabolicSubset::from_excluded(4, {1}));
  CHECK(e.dimension == 15);
  BruhatCache fcache(f4);
  IncomparableScan scan = incomparable_pairs_at(fcache, e, 5, 7);
  CHECK(!scan.pairs.empty());
  for (const auto& [u, w] : scan.pairs)
    CHECK(u.len + (e.dimension - w.len) == 13);

  IncomparableScan cut = incomparable_pairs_at(fcache, e, 5, 7, 3);
  CHECK(cut.truncated);
  CHECK(cut.tested == 3);
}

TEST_CASE("a tiny memo with eviction stays correct") {
  RootSystem b3 = build_root_system(LieFamily::B, 3);
  BruhatCache big(b3);
  BruhatCache tiny(b3, 4);
  auto all = full_weyl_group(b3);
  for (const WeylElement& u : all)
    for (const WeylElement& w : all) CHECK(tiny.leq(u, w) == big.leq(u, w));
}
