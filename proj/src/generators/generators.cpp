#include "strattr/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "strattr/compressors.hpp"

namespace strattr {

Word thue_morse(std::size_t n, std::size_t length_cap) {
  if (n >= 63) throw resource_error("Thue-Morse index too large");
  check_length_cap(std::size_t{1} << n, length_cap, "Thue-Morse word");
  std::string t = "a";
  t.reserve(std::size_t{1} << n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t half = t.size();
    for (std::size_t j = 0; j < half; ++j) t.push_back(t[j] == 'a' ? 'b' : 'a');
  }
  return Word(t, Alphabet("ab"));
}

void DirectiveSequence::validate() const {
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i] == 0) {
      throw std::domain_error("directive entry q_" + std::to_string(i) + " must be positive");
    }
  }
}

std::vector<Word> standard_sequence(const DirectiveSequence& d, std::size_t length_cap) {
  d.validate();
  const auto ab = std::make_shared<const Alphabet>("ab");
  std::vector<std::string> s{"b", "a"};
  for (std::size_t i = 0; i < d.q.size(); ++i) {
    const std::string& cur = s.back();
    const std::string& prev = s[s.size() - 2];
    // Overflow-safe length check before building.
    const std::size_t room = length_cap - std::min(length_cap, prev.size());
    if (d.q[i] != 0 && cur.size() > room / d.q[i]) {
      throw resource_error("standard word exceeds length cap " + std::to_string(length_cap));
    }
    std::string next;
    next.reserve(cur.size() * d.q[i] + prev.size());
    for (std::size_t r = 0; r < d.q[i]; ++r) next += cur;
    next += prev;
    s.push_back(std::move(next));
  }
  std::vector<Word> out;
  out.reserve(s.size());
  for (const auto& t : s) out.emplace_back(t, ab);
  return out;
}

Word standard_sturmian(const DirectiveSequence& d, std::size_t length_cap) {
  return standard_sequence(d, length_cap).back();
}

std::vector<DirectiveSequence> standard_directives(std::size_t max_length) {
  // Lengths only: |s_{i+1}| = q * |s_i| + |s_{i-1}|, starting from |s_0| = |s_1| = 1.
  std::vector<std::pair<std::size_t, DirectiveSequence>> found;
  DirectiveSequence cur;
  auto extend = [&](auto&& self, std::size_t prev, std::size_t last) -> void {
    for (std::size_t q = cur.q.empty() ? 0 : 1;; ++q) {
      const std::size_t next = q * last + prev;
      if (next > max_length) break;
      cur.q.push_back(q);
      if (next >= 2) found.emplace_back(next, cur);
      self(self, last, next);  // q0 = 0 gives s_2 = b, which still extends
      cur.q.pop_back();
    }
  };
  extend(extend, 1, 1);
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) {
              return a.first != b.first ? a.first < b.first : a.second.q < b.second.q;
            });
  std::vector<DirectiveSequence> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

namespace {

// Coprime pairs (p, q), p < q, p + q = |v| + 2, both periods of v.
std::vector<std::pair<std::size_t, std::size_t>> per_period_pairs(const Word& v) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t total = v.size() + 2;
  for (std::size_t p = 1; 2 * p <= total; ++p) {
    const std::size_t q = total - p;
    if (std::gcd(p, q) != 1) continue;
    if (has_period(v, p) && has_period(v, q)) out.emplace_back(p, q);
  }
  return out;
}

void require_binary(const Word& w) {
  if (w.alphabet().size() > 2 || w.distinct_symbols() > 2) {
    throw std::domain_error("standard words are binary, got alphabet \"" +
                            std::string(w.alphabet().symbols()) + "\"");
  }
}

}  // namespace

bool is_per(const Word& v) { return !per_period_pairs(v).empty(); }

bool is_standard(const Word& w) {
  require_binary(w);
  if (w.empty()) return false;
  bool standard = false;
  if (w.size() == 1) {
    standard = true;
  } else {
    const char x = w.at(w.size() - 1), y = w.at(w.size());
    standard = x != y && is_per(w.prefix(w.size() - 2));
  }
  // Every standard word is a conjugate of itself, so it must cluster.
  if (standard && w.size() >= 2 && !is_clustered_sturmian(w)) {
    throw theorem_violation("standard word \"" + w.str() + "\" has an unclustered BWT");
  }
  return standard;
}

PerDecomposition per_decomposition(const Word& w) {
  if (w.size() < 4) throw std::domain_error("PER decomposition needs |w| >= 4");
  if (!is_standard(w)) throw std::domain_error("\"" + w.str() + "\" is not a standard word");
  const Word pi = w.prefix(w.size() - 2);
  for (const auto& [p, q] : per_period_pairs(pi)) {
    if (p < 2) continue;  // period 1: pi is unary and has no x != y
    PerDecomposition d;
    d.q = pi.prefix(q - 2);
    d.x = pi.at(q - 1);
    d.y = pi.at(q);
    d.p = pi.suffix(p - 2);
    if (d.x == d.y || !is_palindrome(d.q) || !is_palindrome(d.p)) continue;
    if (d.p.str() + d.y + d.x + d.q.str() != pi.str()) continue;
    return d;
  }
  throw std::domain_error("pi(\"" + w.str() + "\") has no factorization QxyP = PyxQ");
}

Word palindromic_right_closure(const Word& w) {
  const std::size_t s = longest_palindromic_suffix(w);
  std::string head = w.str().substr(0, w.size() - s);
  std::reverse(head.begin(), head.end());
  return Word(w.str() + head, w.alphabet_ptr());
}

PalTrace pal_closure(const Word& directive, std::size_t length_cap) {
  if (directive.empty()) throw std::domain_error("Pal needs a non-empty directive word");
  PalTrace trace;
  Word p("", directive.alphabet_ptr());
  for (char x : directive.str()) {
    const std::size_t position = p.size() + 1;
    // |Pal(wx)| <= 2|Pal(w)| + 1
    check_length_cap(position, length_cap, "palindromic closure");
    p = palindromic_right_closure(p + x);
    check_length_cap(p.size(), length_cap, "palindromic closure");
    trace.insertion_positions[x] = position;
    trace.steps.emplace_back(x, position);
  }
  trace.word = std::move(p);
  return trace;
}

void EpistandardSpec::validate() const {
  if (k < 3) throw std::domain_error("epistandard families need k >= 3");
  if (!letters.empty()) {
    if (letters.size() != k) {
      throw std::domain_error("expected " + std::to_string(k) + " letters, got \"" + letters + "\"");
    }
    std::string sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::domain_error("letters must be distinct: \"" + letters + "\"");
    }
  } else if (k > 26) {
    throw std::domain_error("k > 26 needs explicit letters");
  }
  switch (family) {
    case EpistandardFamily::type_i:
      if (m < 1) throw std::domain_error("type i needs m >= 1");
      break;
    case EpistandardFamily::type_ii:
      if (k < 4) throw std::domain_error("type ii needs k >= 4");
      if (ell > k - 4) throw std::domain_error("type ii needs 0 <= ell <= k - 4");
      break;
    case EpistandardFamily::type_iii:
      break;
  }
}

std::string EpistandardSpec::resolved_letters() const {
  if (!letters.empty()) return letters;
  return std::string(Alphabet::first_letters(k).symbols());
}

Word epistandard_directive(const EpistandardSpec& spec) {
  spec.validate();
  const std::string a = spec.resolved_letters();
  const std::size_t k = spec.k;
  auto letter = [&](std::size_t i) { return a[i - 1]; };  // a_i
  std::string v;
  switch (spec.family) {
    case EpistandardFamily::type_i:
      v.assign(spec.m, letter(1));
      for (std::size_t i = k; i >= 3; --i) v.push_back(letter(i));
      break;
    case EpistandardFamily::type_ii:
      v.push_back(letter(1));
      for (std::size_t i = k; i >= k - spec.ell; --i) v.push_back(letter(i));
      v.push_back(letter(1));
      for (std::size_t i = k - spec.ell - 1; i >= 3; --i) v.push_back(letter(i));
      break;
    case EpistandardFamily::type_iii:
      v.push_back(letter(1));
      for (std::size_t i = k; i >= 2; --i) v.push_back(letter(i));
      break;
  }
  return Word(v);
}

char epistandard_appended_letter(const EpistandardSpec& spec) {
  spec.validate();
  if (spec.family == EpistandardFamily::type_iii) return '\0';
  return spec.resolved_letters()[1];
}

Word epistandard(const EpistandardSpec& spec, std::size_t length_cap) {
  const Word v = epistandard_directive(spec);
  std::string t = pal_closure(v, length_cap).word.str();
  if (const char x = epistandard_appended_letter(spec); x != '\0') t.push_back(x);
  check_length_cap(t.size(), length_cap, "epistandard word");
  return Word(t);
}

std::string to_string(EpistandardFamily family) {
  switch (family) {
    case EpistandardFamily::type_i:
      return "i";
    case EpistandardFamily::type_ii:
      return "ii";
    case EpistandardFamily::type_iii:
      return "iii";
  }
  return "?";
}

EpistandardFamily parse_epistandard_family(std::string_view text) {
  if (text.starts_with("type-")) text.remove_prefix(5);
  if (text == "i" || text == "1") return EpistandardFamily::type_i;
  if (text == "ii" || text == "2") return EpistandardFamily::type_ii;
  if (text == "iii" || text == "3") return EpistandardFamily::type_iii;
  throw std::domain_error("unknown epistandard family \"" + std::string(text) + "\"");
}

namespace {

std::size_t checked_power(std::size_t sigma, std::size_t k, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n > cap / sigma) {
      throw resource_error("de Bruijn word of order " + std::to_string(k) + " over " +
                           std::to_string(sigma) + " letters exceeds length cap " +
                           std::to_string(cap));
    }
    n *= sigma;
  }
  return n;
}

}  // namespace

Word de_bruijn_circular(std::size_t sigma, std::size_t k, std::size_t length_cap) {
  if (sigma < 2) throw std::domain_error("de Bruijn words need sigma >= 2");
  if (k < 1) throw std::domain_error("de Bruijn words need k >= 1");
  const Alphabet alpha = Alphabet::first_letters(sigma);
  const std::size_t n = checked_power(sigma, k, length_cap);

  // FKM: visit Lyndon words in lex order, keeping those whose length divides k.
  std::string out;
  out.reserve(n);
  std::vector<std::size_t> a(k + 1, 0);
  std::size_t i = 1;
  while (true) {
    if (k % i == 0) {
      for (std::size_t j = 1; j <= i; ++j) out.push_back(alpha.symbol(a[j]));
    }
    // Next prenecklace: copy the period, then bump the last non-max letter.
    for (std::size_t j = i + 1; j <= k; ++j) a[j] = a[j - i];
    i = k;
    while (i > 0 && a[i] == sigma - 1) --i;
    if (i == 0) break;
    ++a[i];
  }
  return Word(out, alpha);
}

Word de_bruijn_linear(std::size_t sigma, std::size_t k, std::size_t length_cap) {
  const Word c = de_bruijn_circular(sigma, k, length_cap);
  check_length_cap(c.size() + k - 1, length_cap, "linear de Bruijn word");
  return c + c.prefix(k - 1);
}

}  // namespace strattr
