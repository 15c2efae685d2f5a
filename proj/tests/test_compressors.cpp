#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "strattr/compressors.hpp"
#include "strattr/generators.hpp"

using namespace strattr;

TEST_CASE("bwt of conjugates") {
  CHECK(bwt_conjugates(Word("aaa")).str() == "aaa");
  CHECK(bwt_conjugates(Word("abaab")).str() == "bbaaa");
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 30, 1 + rng() % 4);
    const Word w(s);
    REQUIRE(bwt_conjugates(w).str() == oracle::bwt_rotations(s));
    // constant on the conjugacy class
    CHECK(bwt_conjugates(w.rotation(rng() % s.size())).str() == oracle::bwt_rotations(s));
  }
}

TEST_CASE("bwt with sentinel") {
  const BwtOutput a = bwt_sentinel(Word("a"));
  CHECK(a.transformed == "a$");
  CHECK(a.runs.size() == 2);
  const BwtOutput b = bwt_sentinel(Word("abaab"));
  CHECK(b.transformed == oracle::bwt_sentinel("abaab"));
  CHECK(b.transformed == "bba$aa");
  CHECK_THROWS_AS(bwt_sentinel(Word("a$b")), std::domain_error);
  CHECK(bwt_sentinel(Word("a$b"), '#').transformed.size() == 4);

  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 40, 1 + rng() % 4);
    const Word w(s);
    const BwtOutput out = bwt_sentinel(w);
    REQUIRE(out.transformed == oracle::bwt_sentinel(s));
    for (std::size_t r = 0; r < out.transformed.size(); ++r) {
      if (out.transformed[r] == '$') {
        CHECK_FALSE(out.text_position_of[r].has_value());
      } else {
        REQUIRE(out.text_position_of[r].has_value());
        CHECK(s[*out.text_position_of[r] - 1] == out.transformed[r]);
      }
    }
    // runs partition the output and alternate symbols
    std::size_t next = 1;
    for (std::size_t i = 0; i < out.runs.size(); ++i) {
      CHECK(out.runs[i].start == next);
      next = out.runs[i].end + 1;
      if (i > 0) CHECK(out.runs[i].symbol != out.runs[i - 1].symbol);
    }
    CHECK(next == out.transformed.size() + 1);
    CHECK(invert_bwt(out) == w);
  }
}

TEST_CASE("bwt attractors") {
  CHECK(attractor_from_bwt(Word("aaaa")).positions() == std::vector<std::size_t>{4});
  CHECK(attractor_from_bwt(Word("abaab")).positions() == std::vector<std::size_t>{3, 4, 5});
  std::mt19937_64 rng(47);
  for (int t = 0; t < 300; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 40, 1 + rng() % 4);
    const Word w(s);
    const std::size_t r = bwt_sentinel(w).runs.size();
    for (RunEndpoint e : {RunEndpoint::first, RunEndpoint::last}) {
      const Attractor g = attractor_from_bwt(w, e);
      CHECK(g.size() <= r);
      REQUIRE(oracle::is_attractor(s, g.positions()));
    }
  }
  // Standard words cluster under the rotation BWT (two runs), but the
  // sentinel splits them again: aba already needs 3 positions, and longer
  // words reach 7.
  std::size_t largest = 0;
  for (const auto& s : oracle::standard_words(40)) {
    if (s.size() < 2) continue;
    const Word w(s, Alphabet("ab"));
    CHECK(equal_letter_runs(bwt_conjugates(w).str()).size() <= 2);
    const Attractor g = attractor_from_bwt(w);
    CHECK(g.size() == bwt_sentinel(w).runs.size() - 1);
    CHECK(oracle::is_attractor(s, g.positions()));
    largest = std::max(largest, g.size());
  }
  CHECK(largest > 3);
}

TEST_CASE("clustering test") {
  CHECK(is_clustered_sturmian(Word("abaab")));
  CHECK_FALSE(is_clustered_sturmian(Word("abab")));
  CHECK_FALSE(is_clustered_sturmian(Word("aaaa")));
  CHECK(is_clustered_sturmian(Word("a")));
  CHECK_THROWS_AS(is_clustered_sturmian(Word("abc")), std::domain_error);
}

TEST_CASE("run-length attractor") {
  CHECK(attractor_from_rle(Word("aaabb")).positions() == std::vector<std::size_t>{3, 5});
  CHECK(attractor_from_rle(Word("aaaabbb")).positions() == std::vector<std::size_t>{4, 7});
  CHECK_THROWS_AS(attractor_from_rle(Word("aba")), std::domain_error);
}

TEST_CASE("LZ parse follows the previous-phrase rule") {
  const LzParse a = lz_parse(Word("aaaa"));
  REQUIRE(a.size() == 3);
  CHECK(a.phrases[0].kind == LzPhrase::Kind::literal);
  CHECK(a.phrases[1].length == 1);
  CHECK(a.phrases[1].source_start == 1);
  CHECK(a.phrases[2].length == 2);
  CHECK(attractor_from_lz(Word("aaaa")).positions() == std::vector<std::size_t>{1, 2, 4});

  const LzParse self = lz_parse(Word("aaaa"), LzVariant::self_referential);
  REQUIRE(self.size() == 2);
  CHECK(self.phrases[1].length == 3);

  CHECK(attractor_from_lz(Word("abcd")).positions() == std::vector<std::size_t>{1, 2, 3, 4});

  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 60, 1 + rng() % 4);
    const Word w(s);
    for (LzVariant v : {LzVariant::previous_phrases, LzVariant::self_referential}) {
      const LzParse p = lz_parse(w, v);
      const auto naive = oracle::lz(s, v == LzVariant::self_referential);
      REQUIRE(p.size() == naive.size());
      for (std::size_t i = 0; i < naive.size(); ++i) {
        CHECK(p.phrases[i].position == naive[i].start);
        CHECK(p.phrases[i].length == naive[i].length);
        if (naive[i].source != 0) {
          // sources may differ, but must hold the same text
          CHECK(s.substr(p.phrases[i].source_start - 1, naive[i].length) ==
                s.substr(naive[i].start - 1, naive[i].length));
          if (v == LzVariant::previous_phrases) {
            CHECK(p.phrases[i].source_start - 1 + p.phrases[i].length <= p.phrases[i].position - 1);
          }
        }
      }
      CHECK(lz_decode(p, w.alphabet_ptr()) == w);
    }
    const Attractor g = attractor_from_lz(w);
    CHECK(g.size() == lz_parse(w).size());
    REQUIRE(oracle::is_attractor(s, g.positions()));
  }
}

TEST_CASE("LZ phrase count never drops when the word grows") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 50; ++t) {
    const std::string s = oracle::random_word(rng, 40, 2 + rng() % 2);
    std::size_t prev = 0;
    for (std::size_t len = 1; len <= s.size(); ++len) {
      const std::size_t c = lz_parse(Word(s.substr(0, len))).size();
      CHECK(c >= prev);
      CHECK(c <= prev + 1);
      prev = c;
    }
  }
}

TEST_CASE("collage systems") {
  CollageSystem single;
  single.add_terminal("A0", 'a');
  CHECK(collage_expand(single).str() == "a");
  CHECK(collage_size(single) == 1);

  for (std::size_t n = 1; n <= 12; ++n) {
    const CollageSystem g = thue_morse_collage(n);
    CHECK(collage_size(g) == 2 * n + 1);
    REQUIRE(collage_expand(g).str() == oracle::thue_morse(n));
    const Attractor a = attractor_from_collage(g);
    CHECK(a.size() <= collage_size(g));
    if (n <= 7) CHECK(oracle::is_attractor(oracle::thue_morse(n), a.positions()));
  }

  CollageSystem p;
  const auto a = p.add_terminal("A", 'a');
  const auto b = p.add_terminal("B", 'b');
  const auto ab = p.add_concat("X", a, b);
  const auto x3 = p.add_power("Y", ab, 3);
  const auto s = p.add_slice("Z", x3, 2, 5);
  p.set_axiom(x3);
  CHECK(collage_expand(p).str() == "ababab");
  CHECK(is_attractor(collage_expand(p), attractor_from_collage(p)));
  p.set_axiom(s);
  CHECK(collage_expand(p).str() == "baba");
  CHECK_THROWS_AS(attractor_from_collage(p), std::domain_error);

  CHECK_THROWS_AS(p.add_power("W", a, 1), std::domain_error);
  CHECK_THROWS_AS(p.add_slice("V", ab, 2, 3), std::domain_error);
  CHECK_THROWS_AS(p.add_concat("U", a, 99), std::domain_error);
  // X -> X Y ; Y -> X is cyclic
  std::vector<CollageRule> cyclic{{"X", collage::Concat{0, 1}}, {"Y", collage::Concat{0, 0}}};
  CHECK_THROWS_AS(CollageSystem(cyclic, 0), std::domain_error);
  CHECK_THROWS_AS(collage_expand(thue_morse_collage(25)), resource_error);
}
