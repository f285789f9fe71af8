#include "doctest.h"

#include <random>

#include "kakutani/errors.hpp"
#include "kakutani/report.hpp"
#include "kakutani/scheme.hpp"

using namespace kak;

namespace {

Scheme kakutani_third() { return Scheme::build({AtomSpec{rat(1, 3)}, AtomSpec{rat(2, 3)}}); }

Scheme half_sixth_third() {
  return Scheme::build({AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 6)}, AtomSpec{rat(1, 3)}});
}

Scheme half_geometric() {
  return Scheme::build(
      {AtomSpec{rat(1, 2)}, GeoTailSpec{rat(1, 3), rat(1, 3), TailDirection::ascending}});
}

}  // namespace

TEST_CASE("two-atom scheme places similarities left to right") {
  Scheme s = kakutani_third();
  CHECK(s.alpha({0, 0}) == rat(1, 3));
  CHECK(s.alpha({1, 0}) == rat(2, 3));
  CHECK(s.left({0, 0}) == 0);
  CHECK(s.left({1, 0}) == rat(1, 3));
  REQUIRE(s.zero_symbol().has_value());
  CHECK(s.zero_symbol()->block == 0);
}

TEST_CASE("three-atom scheme accumulates offsets") {
  Scheme s = half_sixth_third();
  CHECK(s.left({0, 0}) == 0);
  CHECK(s.left({1, 0}) == rat(1, 2));
  CHECK(s.left({2, 0}) == rat(2, 3));
}

TEST_CASE("ascending tail symbols sit at 1 - (1/2)3^-k") {
  Scheme s = half_geometric();
  for (long k = 0; k <= 6; ++k) {
    Rational expect = 1 - rat(1, 2) * pow_rat(rat(1, 3), static_cast<unsigned long>(k));
    CHECK(s.left({1, static_cast<std::uint32_t>(k)}) == expect);
    CHECK(s.alpha({1, static_cast<std::uint32_t>(k)}) ==
          rat(1, 3) * pow_rat(rat(1, 3), static_cast<unsigned long>(k)));
  }
}

TEST_CASE("descending tail accumulates at the block's left end and frees 0") {
  Scheme s = Scheme::build({GeoTailSpec{rat(1, 2), rat(1, 2), TailDirection::descending}});
  CHECK_FALSE(s.zero_symbol().has_value());
  // Depth k occupies [2^-(k+1), 2^-k).
  for (long k = 0; k <= 8; ++k) {
    CHECK(s.left({0, static_cast<std::uint32_t>(k)}) ==
          pow_rat(rat(1, 2), static_cast<unsigned long>(k + 1)));
  }
}

TEST_CASE("build rejects bad specs") {
  CHECK_THROWS_AS(Scheme::build({AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 3)}}), mass_not_one_error);
  CHECK_THROWS_AS(Scheme::build({AtomSpec{rat(0)}, AtomSpec{rat(1)}}), degenerate_block_error);
  CHECK_THROWS_AS(Scheme::build({AtomSpec{rat(3, 2)}}), degenerate_block_error);
  CHECK_THROWS_AS(Scheme::build({GeoTailSpec{rat(2, 3), rat(1, 2), TailDirection::ascending}}),
                  degenerate_block_error);  // mass 4/3
  CHECK_THROWS_AS(Scheme::build({}), degenerate_block_error);
}

TEST_CASE("truncated alphabet keeps exactly the symbols above lambda") {
  Scheme s = kakutani_third();
  auto syms = s.truncated_alphabet(rat(1, 2));
  REQUIRE(syms.size() == 1);
  CHECK(syms[0].alpha == rat(2, 3));

  Scheme g = half_geometric();
  auto gs = g.truncated_alphabet(rat(1, 10));
  REQUIRE(gs.size() == 3);
  CHECK(gs[0].alpha == rat(1, 2));
  CHECK(gs[1].alpha == rat(1, 3));
  CHECK(gs[2].alpha == rat(1, 9));
  CHECK(gs[0].left < gs[1].left);
  CHECK(gs[1].left < gs[2].left);

  CHECK(g.truncated_alphabet(rat(2)).empty());
}

TEST_CASE("descending tail's truncated alphabet is ordered by left endpoint") {
  Scheme s = Scheme::build({GeoTailSpec{rat(1, 2), rat(1, 2), TailDirection::descending}});
  auto syms = s.truncated_alphabet(rat(1, 8));
  REQUIRE(syms.size() == 3);
  // Smallest depth sits rightmost here.
  CHECK(syms[0].sym.depth == 2);
  CHECK(syms[2].sym.depth == 0);
}

TEST_CASE("word alpha and left endpoint") {
  Scheme s = kakutani_third();
  CHECK(word_alpha(s, {}) == 1);
  CHECK(word_left_endpoint(s, {}) == 0);
  Word w22{{Symbol{1, 0}, Symbol{1, 0}}};
  CHECK(word_alpha(s, w22) == rat(4, 9));
  CHECK(word_left_endpoint(s, w22) == rat(5, 9));
  Word w222{{Symbol{1, 0}, Symbol{1, 0}, Symbol{1, 0}}};
  CHECK(word_left_endpoint(s, w222) == rat(19, 27));

  Scheme f2 = half_sixth_third();
  Word w13{{Symbol{0, 0}, Symbol{2, 0}}};
  CHECK(word_alpha(f2, w13) == rat(1, 6));
}

TEST_CASE("config round-trip is bit exact") {
  for (const auto& [name, s] : bundled_schemes()) {
    CAPTURE(name);
    CHECK(Scheme::parse(s.serialize()) == s);
  }
}

TEST_CASE("config parser rejects malformed input") {
  CHECK_THROWS_AS(Scheme::parse("block = atom 1/2\nblock = atom 1/2\n"), config_error);
  CHECK_THROWS_AS(Scheme::parse("schema_version = 2\nblock = atom 1/2\n"), config_error);
  CHECK_THROWS_AS(Scheme::parse("schema_version = 1\nfoo = bar\n"), config_error);
  CHECK_THROWS_AS(
      Scheme::parse("schema_version = 1\nblock = tail first=1/3 ratio=1/3 dir=up\n"),
      config_error);
  CHECK_THROWS_AS(Scheme::parse("schema_version = 1\nblock = atom 1/2\nblock = atom 1/3\n"),
                  mass_not_one_error);
}

TEST_CASE("affine composition law holds on random words") {
  std::mt19937_64 rng(7);
  for (const auto& [name, s] : bundled_schemes()) {
    CAPTURE(name);
    for (int rep = 0; rep < 25; ++rep) {
      auto draw = [&]() {
        Word w;
        Rational a = 1;
        while (true) {
          auto syms = s.truncated_alphabet(rat(1, 30) / a);
          if (syms.empty()) break;
          std::uniform_int_distribution<std::size_t> pick(0, syms.size());
          std::size_t i = pick(rng);
          if (i == syms.size()) break;
          w.symbols.push_back(syms[i].sym);
          a *= syms[i].alpha;
        }
        return w;
      };
      Word v = draw(), w = draw();
      Word vw = v;
      vw.symbols.insert(vw.symbols.end(), w.symbols.begin(), w.symbols.end());
      CHECK(word_left_endpoint(s, vw) ==
            word_left_endpoint(s, v) + word_alpha(s, v) * word_left_endpoint(s, w));
      CHECK(word_alpha(s, vw) == word_alpha(s, v) * word_alpha(s, w));
    }
  }
}

TEST_CASE("distinct word intervals are nested or disjoint") {
  std::mt19937_64 rng(11);
  for (const auto& [name, s] : bundled_schemes()) {
    CAPTURE(name);
    for (int rep = 0; rep < 40; ++rep) {
      auto draw = [&]() {
        Word w;
        Rational a = 1;
        while (true) {
          auto syms = s.truncated_alphabet(rat(1, 50) / a);
          if (syms.empty()) break;
          std::uniform_int_distribution<std::size_t> pick(0, syms.size());
          std::size_t i = pick(rng);
          if (i == syms.size()) break;
          w.symbols.push_back(syms[i].sym);
          a *= syms[i].alpha;
        }
        return w;
      };
      Word v = draw(), w = draw();
      Rational lv = word_left_endpoint(s, v), av = word_alpha(s, v);
      Rational lw = word_left_endpoint(s, w), aw = word_alpha(s, w);
      bool disjoint = lv + av <= lw || lw + aw <= lv;
      bool nested = (lv <= lw && lw + aw <= lv + av) || (lw <= lv && lv + av <= lw + aw);
      CHECK((disjoint || nested));
    }
  }
}
