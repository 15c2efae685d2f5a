#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "strattr/suffix_array.hpp"
#include "strattr/word.hpp"

using namespace strattr;

TEST_CASE("alphabet keeps declared order") {
  const Alphabet a("cab");
  CHECK(a.size() == 3);
  CHECK(a.rank('c') == 0);
  CHECK(a.rank('b') == 2);
  CHECK_FALSE(a.contains('d'));
  CHECK(Alphabet::infer("banana").symbols() == "abn");
  CHECK_THROWS_AS(Alphabet("aba"), std::domain_error);
  CHECK_THROWS_AS(Alphabet(""), std::domain_error);
}

TEST_CASE("word access is 1-based") {
  const Word w("adcbaadcbadc");
  CHECK(w.size() == 12);
  CHECK(w.at(1) == 'a');
  CHECK(w.at(12) == 'c');
  CHECK_THROWS_AS(w.at(0), std::out_of_range);
  CHECK_THROWS_AS(w.at(13), std::out_of_range);
  CHECK(w.factor(5, 6).str() == "aa");
  CHECK(w.prefix(3).str() == "adc");
  CHECK(w.suffix(2).str() == "dc");
  CHECK(w.reversed().str() == "cdabcdaabcda");
  CHECK_THROWS_AS(Word("ab", Alphabet("a")), std::domain_error);
  CHECK_THROWS_AS(Word(""), std::domain_error);
}

TEST_CASE("distinct factor counts") {
  CHECK(distinct_factor_count(Word("aaaa"), 2) == 1);
  CHECK(distinct_factor_count(Word("abbabaab"), 2) == 4);
  CHECK(distinct_factor_count(Word("adcbaadcbadc"), 1) == 4);
  CHECK_THROWS_AS(distinct_factor_count(Word("ab"), 0), std::out_of_range);
  CHECK_THROWS_AS(distinct_factor_count(Word("ab"), 3), std::out_of_range);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 30, 1 + rng() % 3);
    const Word w(s);
    const auto profile = factor_complexity(w);
    for (std::size_t k = 1; k <= s.size(); ++k) {
      REQUIRE(distinct_factor_count(w, k) == oracle::distinct_count(s, k));
      REQUIRE(profile[k] == oracle::distinct_count(s, k));
      CHECK(profile[k] <= s.size() - k + 1);
    }
  }
}

TEST_CASE("longest repeated factor") {
  CHECK(longest_repeated_factor_length(Word("abcd")) == 0);
  CHECK(longest_repeated_factor_length(Word("aaaa")) == 3);
  // "adcba" occurs at 1 and 6
  CHECK(longest_repeated_factor_length(Word("adcbaadcbadc")) == 5);
  CHECK(oracle::longest_repeated("adcbaadcbadc") == 5);
  CHECK_THROWS_AS(longest_repeated_factor_length(Word()), std::out_of_range);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 25, 1 + rng() % 3);
    const std::size_t r = longest_repeated_factor_length(Word(s));
    REQUIRE(r == oracle::longest_repeated(s));
    CHECK(r < s.size());
    const bool unary = s.find_first_not_of(s[0]) == std::string::npos;
    if (s.size() >= 2) CHECK((r == s.size() - 1) == unary);
  }
}

TEST_CASE("palindromic prefixes and suffixes") {
  CHECK(longest_palindromic_proper_prefix(Word("abaababaaba")) == 6);
  CHECK(longest_palindromic_proper_prefix(Word("ababaababaababa")) == 10);
  CHECK(longest_palindromic_proper_prefix(Word("aa")) == 1);
  CHECK(longest_palindromic_proper_prefix(Word("ab")) == 1);
  CHECK(longest_palindromic_suffix(Word("abaab")) == 4);
  CHECK(longest_palindromic_suffix(Word("aab")) == 1);
  CHECK(is_palindrome(Word("abba")));
  CHECK_FALSE(is_palindrome(Word("abab")));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 400; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 20, 1 + rng() % 3);
    const Word w(s);
    REQUIRE(longest_palindromic_proper_prefix(w) == oracle::longest_pal_proper_prefix(s));
    CHECK(is_palindrome(w) == (w.reversed() == w));
  }
}

TEST_CASE("conjugates and Lyndon conjugates") {
  const auto c = conjugates(Word("ab"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].str() == "ab");
  CHECK(c[1].str() == "ba");
  const auto triple = conjugates(Word("aaa"));
  CHECK(triple.size() == 3);
  for (const auto& x : triple) CHECK(x.str() == "aaa");

  bool found = false;
  for (const auto& x : conjugates(Word("babbaaa"))) found = found || x.str() == "aaababb";
  CHECK(found);
  CHECK(lyndon_conjugate(Word("babbaaa")).str() == "aaababb");
  CHECK(lyndon_conjugate(Word("a")).str() == "a");
  CHECK(lyndon_conjugate(Word("cacbcac")).str() == "acbcacc");
  CHECK_THROWS_AS(lyndon_conjugate(Word("abab")), std::domain_error);
  CHECK(are_conjugate(Word("babbaaa"), Word("ababbaa")));
  CHECK_FALSE(are_conjugate(Word("ab"), Word("aa")));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 15, 2 + rng() % 2);
    const Word w(s);
    if (!is_primitive(w)) continue;
    const Word l = lyndon_conjugate(w);
    for (const auto& x : conjugates(w)) CHECK_FALSE(lex_less(x, l));
    CHECK(is_primitive(l));
  }
}

TEST_CASE("periods") {
  CHECK(has_period(Word("abaab"), 3));
  CHECK_FALSE(has_period(Word("abaab"), 2));
  CHECK_FALSE(is_primitive(Word("abab")));
  CHECK(is_primitive(Word("aab")));
  CHECK(smallest_period(Word("abaababaaba")) == 5);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 20, 1 + rng() % 2);
    const Word w(s);
    CHECK(smallest_period(w) == oracle::smallest_period(s));
    for (std::size_t p = 1; p <= s.size(); ++p) {
      // duality: p is a period iff w[1, n-p] = w[p+1, n]
      const bool dual = s.substr(0, s.size() - p) == s.substr(p);
      REQUIRE(has_period(w, p) == dual);
    }
    const auto ps = periods(w);
    for (std::size_t p = 1; p <= s.size(); ++p) {
      CHECK((std::find(ps.begin(), ps.end(), p) != ps.end()) == oracle::has_period(s, p));
    }
  }
}

TEST_CASE("suffix array matches naive suffix sort") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 40, 1 + rng() % 4);
    const SuffixIndex idx = build_suffix_index(Word(s));
    std::vector<std::size_t> naive(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) naive[i] = i;
    std::sort(naive.begin(), naive.end(),
              [&](std::size_t a, std::size_t b) { return s.substr(a) < s.substr(b); });
    REQUIRE(idx.sa == naive);
    for (std::size_t r = 1; r < s.size(); ++r) {
      std::size_t l = 0;
      while (naive[r - 1] + l < s.size() && naive[r] + l < s.size() &&
             s[naive[r - 1] + l] == s[naive[r] + l]) {
        ++l;
      }
      CHECK(idx.lcp[r] == l);
    }
  }
}
