#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "strattr/compressors.hpp"
#include "strattr/generators.hpp"

using namespace strattr;

TEST_CASE("Thue-Morse words") {
  CHECK(thue_morse(0).str() == "a");
  CHECK(thue_morse(2).str() == "abba");
  CHECK(thue_morse(3).str() == "abbabaab");
  for (std::size_t n = 0; n <= 10; ++n) {
    const std::string t = thue_morse(n).str();
    REQUIRE(t == oracle::thue_morse(n));
    CHECK(t.size() == std::size_t{1} << n);
    if (n < 10) {
      std::string bar = t;
      for (char& c : bar) c = c == 'a' ? 'b' : 'a';
      CHECK(thue_morse(n + 1).str() == t + bar);
    }
  }
  // overlap-free: no factor cxcxc
  const std::string t = thue_morse(10).str();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t p = 1; i + 2 * p < t.size(); ++p) {
      bool overlap = true;
      for (std::size_t j = 0; j <= p && overlap; ++j) overlap = t[i + j] == t[i + j + p];
      REQUIRE_FALSE(overlap);
    }
  }
  CHECK_THROWS_AS(thue_morse(5, 16), resource_error);
}

TEST_CASE("standard Sturmian recurrence") {
  const auto base = standard_sequence(DirectiveSequence{});
  REQUIRE(base.size() == 2);
  CHECK(base[0].str() == "b");
  CHECK(base[1].str() == "a");
  const auto s = standard_sequence(DirectiveSequence{{1, 1, 1}});
  CHECK(s[2].str() == "ab");
  CHECK(s[3].str() == "aba");
  CHECK(s[4].str() == "abaab");
  CHECK(standard_sturmian(DirectiveSequence{{1, 1, 1}}).str() == "abaab");
  CHECK_THROWS_AS((DirectiveSequence{{1, 0}}.validate()), std::domain_error);
  CHECK_THROWS_AS((standard_sturmian(DirectiveSequence{{1, 2, 3, 4, 5, 6, 7}}, 100)), resource_error);

  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::size_t> q{rng() % 4};
    const std::size_t m = rng() % 6;
    for (std::size_t i = 0; i < m; ++i) q.push_back(1 + rng() % 4);
    const std::string w = standard_sturmian(DirectiveSequence{q}).str();
    REQUIRE(w == oracle::standard_word(q));
    if (w.size() >= 2) {
      const std::string tail = w.substr(w.size() - 2);
      CHECK((tail == "ab" || tail == "ba"));
    }
  }
}

TEST_CASE("standard membership against enumeration") {
  const auto stand = oracle::standard_words(14);
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) s.push_back(mask >> i & 1 ? 'b' : 'a');
      const Word w(s, Alphabet("ab"));
      REQUIRE(is_standard(w) == (stand.count(s) == 1));
    }
  }
  CHECK_THROWS_AS(is_standard(Word("abc")), std::domain_error);
}

TEST_CASE("PER decompositions") {
  const auto d = per_decomposition(Word("abaababaababa"));
  CHECK(d.q.str() == "abaaba");
  CHECK(d.x == 'b');
  CHECK(d.y == 'a');
  CHECK(d.p.str() == "aba");
  const auto e = per_decomposition(Word("ababaababaabababa"));
  CHECK(e.q.str() == "ababaababa");
  CHECK(e.x == 'a');
  CHECK(e.y == 'b');
  CHECK(e.p.str() == "aba");
  CHECK_THROWS_AS(per_decomposition(Word("abab")), std::domain_error);
  CHECK_THROWS_AS(per_decomposition(Word("aab")), std::domain_error);
  // pi unary: no x != y
  CHECK_THROWS_AS(per_decomposition(Word("aaab")), std::domain_error);

  for (const auto& s : oracle::standard_words(80)) {
    if (s.size() < 4) continue;
    const std::string pi = s.substr(0, s.size() - 2);
    if (pi.find_first_not_of(pi[0]) == std::string::npos) continue;
    const auto r = per_decomposition(Word(s));
    const std::string q = r.q.str(), p = r.p.str();
    CHECK(oracle::is_pal(q));
    CHECK(oracle::is_pal(p));
    CHECK(r.x != r.y);
    CHECK(q + r.x + r.y + p == pi);
    CHECK(p + r.y + r.x + q == pi);
    CHECK(q.size() + p.size() + 2 == pi.size());
    CHECK(q.size() >= p.size());
    CHECK(oracle::has_period(pi, q.size() + 2));
    CHECK(oracle::has_period(pi, p.size() + 2));
    CHECK(std::gcd(q.size() + 2, p.size() + 2) == 1);
    CHECK(is_per(Word(pi)));
  }
}

TEST_CASE("palindromic closure") {
  CHECK(palindromic_right_closure(Word("aba")).str() == "aba");
  CHECK(palindromic_right_closure(Word("abaa")).str() == "abaaba");
  CHECK(pal_closure(Word("cab")).word.str() == "cacbcac");
  CHECK(pal_closure(Word("aaaadc")).word.str() == "aaaadaaaacaaaadaaaa");
  CHECK_THROWS_AS(pal_closure(Word()), std::domain_error);

  const PalTrace t = pal_closure(Word("aaaadc"));
  CHECK(t.insertion_positions.at('a') == 4);
  CHECK(t.insertion_positions.at('d') == 5);
  CHECK(t.insertion_positions.at('c') == 10);

  std::mt19937_64 rng(67);
  for (int i = 0; i < 300; ++i) {
    const std::string s = oracle::random_word(rng, 1 + rng() % 15, 1 + rng() % 3);
    REQUIRE(palindromic_right_closure(Word(s)).str() == oracle::closure(s));
  }
  for (int i = 0; i < 100; ++i) {
    const std::string v = oracle::random_word(rng, 1 + rng() % 8, 2 + rng() % 3);
    const PalTrace tr = pal_closure(Word(v));
    const std::string p = tr.word.str();
    CHECK(oracle::is_pal(p));
    std::size_t last = 0;
    for (const auto& [letter, pos] : tr.steps) {
      CHECK(p[pos - 1] == letter);
      CHECK(pos > last);
      last = pos;
    }
    for (const auto& [letter, pos] : tr.insertion_positions) CHECK(p[pos - 1] == letter);
    if (v.size() >= 2) {
      const std::string shorter = pal_closure(Word(v.substr(0, v.size() - 1))).word.str();
      CHECK(p.substr(0, shorter.size()) == shorter);
    }
  }
}

TEST_CASE("epistandard families") {
  EpistandardSpec i{EpistandardFamily::type_i, 4, 4, 0, ""};
  CHECK(epistandard_directive(i).str() == "aaaadc");
  CHECK(epistandard(i).str() == "aaaadaaaacaaaadaaaab");

  EpistandardSpec ii5{EpistandardFamily::type_ii, 5, 1, 0, ""};
  CHECK(epistandard_directive(ii5).str() == "aeadc");
  CHECK(epistandard(ii5).str() == "aeaaeadaeaaeacaeaaeadaeaaeab");
  ii5.ell = 1;
  CHECK(epistandard_directive(ii5).str() == "aedac");
  CHECK(epistandard(ii5).str() == "aeadaeaaeadaeacaeadaeaaeadaeab");

  // k = 4, ell = 0 read literally gives a1 a4 a1 a3
  EpistandardSpec ii4{EpistandardFamily::type_ii, 4, 1, 0, ""};
  CHECK(epistandard_directive(ii4).str() == "adac");
  CHECK(pal_closure(Word("adca")).word.str() + "b" == "adacadaadacadab");

  EpistandardSpec iii{EpistandardFamily::type_iii, 3, 1, 0, "cba"};
  CHECK(epistandard_directive(iii).str() == "cab");
  CHECK(epistandard(iii).str() == "cacbcac");
  CHECK(epistandard_appended_letter(iii) == '\0');

  CHECK_THROWS_AS((epistandard(EpistandardSpec{EpistandardFamily::type_i, 2, 1, 0, ""})), std::domain_error);
  CHECK_THROWS_AS((epistandard(EpistandardSpec{EpistandardFamily::type_i, 3, 0, 0, ""})), std::domain_error);
  CHECK_THROWS_AS((epistandard(EpistandardSpec{EpistandardFamily::type_ii, 3, 1, 0, ""})), std::domain_error);
  CHECK_THROWS_AS((epistandard(EpistandardSpec{EpistandardFamily::type_ii, 5, 1, 2, ""})), std::domain_error);
  CHECK_THROWS_AS((epistandard(EpistandardSpec{EpistandardFamily::type_iii, 3, 1, 0, "aab"})), std::domain_error);
  CHECK(parse_epistandard_family("type-ii") == EpistandardFamily::type_ii);
  CHECK_THROWS_AS(parse_epistandard_family("iv"), std::domain_error);
}

TEST_CASE("de Bruijn words") {
  CHECK(de_bruijn_circular(2, 1).str() == "ab");
  CHECK(de_bruijn_circular(2, 4).str() == "aaaabaabbababbbb");
  CHECK(de_bruijn_linear(2, 4).size() == 19);
  CHECK(de_bruijn_linear(2, 3).size() == 10);
  CHECK_THROWS_AS(de_bruijn_circular(1, 3), std::domain_error);
  CHECK_THROWS_AS(de_bruijn_circular(2, 0), std::domain_error);
  CHECK_THROWS_AS(de_bruijn_circular(2, 30), resource_error);

  for (std::size_t sigma = 2; sigma <= 4; ++sigma) {
    for (std::size_t k = 1; sigma == 2 ? k <= 8 : k <= 4; ++k) {
      const std::string c = de_bruijn_circular(sigma, k).str();
      const std::string l = de_bruijn_linear(sigma, k).str();
      std::size_t n = 1;
      for (std::size_t i = 0; i < k; ++i) n *= sigma;
      REQUIRE(c.size() == n);
      REQUIRE(l.size() == n + k - 1);
      REQUIRE(oracle::distinct_count(l, k) == n);
      const std::string cyc = c + c.substr(0, k - 1);
      std::set<std::string> seen;
      for (std::size_t i = 0; i < n; ++i) CHECK(seen.insert(cyc.substr(i, k)).second);
      CHECK(oracle::factors(l).size() >= n);
    }
  }
}

TEST_CASE("standard directive enumeration") {
  const auto ds = standard_directives(40);
  std::set<std::string> got;
  std::size_t last_len = 0;
  for (const auto& d : ds) {
    const Word w = standard_sturmian(d);
    CHECK(w.size() >= last_len);
    last_len = w.size();
    got.insert(w.str());
  }
  CHECK(got.size() == ds.size());
  std::set<std::string> want;
  for (const auto& s : oracle::standard_words(40)) {
    if (s.size() >= 2) want.insert(s);
  }
  CHECK(got == want);
  CHECK(standard_directives(1).empty());
}
