#include "strattr/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "strattr/suffix_array.hpp"

namespace strattr {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw std::domain_error("alphabet must contain at least one symbol");
  rank_.fill(-1);
  for (std::size_t r = 0; r < symbols_.size(); ++r) {
    auto& slot = rank_[static_cast<unsigned char>(symbols_[r])];
    if (slot >= 0) {
      throw std::domain_error(std::string("duplicate alphabet symbol '") + symbols_[r] + "'");
    }
    slot = static_cast<std::int16_t>(r);
  }
}

Alphabet Alphabet::infer(std::string_view text) {
  std::set<unsigned char> seen(text.begin(), text.end());
  std::string symbols(seen.begin(), seen.end());
  return Alphabet(symbols);
}

Alphabet Alphabet::first_letters(std::size_t sigma) {
  if (sigma == 0 || sigma > 26) throw std::domain_error("alphabet size must be in [1, 26]");
  std::string symbols;
  for (std::size_t r = 0; r < sigma; ++r) symbols.push_back(static_cast<char>('a' + r));
  return Alphabet(symbols);
}

namespace {

std::shared_ptr<const Alphabet> default_alphabet() {
  static const auto a = std::make_shared<const Alphabet>("a");
  return a;
}

}  // namespace

Word::Word() : alphabet_(default_alphabet()) {}

Word::Word(std::string_view text) : text_(text) {
  if (text_.empty()) throw std::domain_error("cannot infer an alphabet from the empty word");
  alphabet_ = std::make_shared<const Alphabet>(Alphabet::infer(text_));
}

Word::Word(std::string_view text, Alphabet alphabet)
    : Word(text, std::make_shared<const Alphabet>(std::move(alphabet))) {}

Word::Word(std::string_view text, std::shared_ptr<const Alphabet> alphabet)
    : text_(text), alphabet_(std::move(alphabet)) {
  for (char c : text_) {
    if (!alphabet_->contains(c)) {
      throw std::domain_error(std::string("symbol '") + c + "' is not in the alphabet \"" +
                              std::string(alphabet_->symbols()) + "\"");
    }
  }
}

char Word::at(std::size_t position) const {
  if (position < 1 || position > text_.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside [1, " +
                            std::to_string(text_.size()) + "]");
  }
  return text_[position - 1];
}

Word Word::factor(std::size_t i, std::size_t j) const {
  if (i < 1 || j > text_.size() || i > j + 1) {
    throw std::out_of_range("factor [" + std::to_string(i) + ", " + std::to_string(j) +
                            "] outside a word of length " + std::to_string(text_.size()));
  }
  return Word(std::string_view(text_).substr(i - 1, j + 1 - i), alphabet_);
}

Word Word::prefix(std::size_t length) const { return factor(1, length); }

Word Word::suffix(std::size_t length) const {
  if (length > text_.size()) throw std::out_of_range("suffix longer than word");
  return factor(text_.size() - length + 1, text_.size());
}

Word Word::reversed() const {
  std::string r(text_.rbegin(), text_.rend());
  return Word(r, alphabet_);
}

Word Word::rotation(std::size_t shift) const {
  if (text_.empty()) return *this;
  shift %= text_.size();
  return Word(text_.substr(shift) + text_.substr(0, shift), alphabet_);
}

Word Word::power(std::size_t exponent) const {
  std::string out;
  out.reserve(text_.size() * exponent);
  for (std::size_t e = 0; e < exponent; ++e) out += text_;
  return Word(out, alphabet_);
}

Word Word::operator+(const Word& other) const {
  if (alphabet_ == other.alphabet_ || alphabet() == other.alphabet()) {
    return Word(text_ + other.text_, alphabet_);
  }
  return Word(text_ + other.text_);
}

Word Word::operator+(char symbol) const {
  std::string t = text_ + symbol;
  if (alphabet_->contains(symbol)) return Word(t, alphabet_);
  return Word(t);
}

std::vector<int> Word::codes() const {
  std::vector<int> out(text_.size());
  for (std::size_t i = 0; i < text_.size(); ++i) out[i] = alphabet_->rank(text_[i]);
  return out;
}

std::size_t Word::distinct_symbols() const {
  std::array<bool, 256> seen{};
  std::size_t count = 0;
  for (char c : text_) {
    auto& s = seen[static_cast<unsigned char>(c)];
    if (!s) {
      s = true;
      ++count;
    }
  }
  return count;
}

bool lex_less(const Word& a, const Word& b) {
  const Alphabet& alpha = a.alphabet();
  const std::string& x = a.str();
  const std::string& y = b.str();
  const std::size_t m = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] != y[i]) return alpha.rank(x[i]) < alpha.rank(y[i]);
  }
  return x.size() < y.size();
}

std::vector<std::size_t> prefix_function(const std::vector<int>& s) {
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

bool is_palindrome(const Word& w) {
  const std::string& t = w.str();
  return std::equal(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.rbegin());
}

namespace {

// Borders of x·#·y, where # is a code absent from both. The longest border
// is the longest prefix of x that is a suffix of y.
std::vector<std::size_t> cross_borders(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> s;
  s.reserve(x.size() + y.size() + 1);
  s.insert(s.end(), x.begin(), x.end());
  s.push_back(-1);
  s.insert(s.end(), y.begin(), y.end());
  return prefix_function(s);
}

std::vector<int> reversed_codes(const Word& w) {
  std::vector<int> c = w.codes();
  std::reverse(c.begin(), c.end());
  return c;
}

}  // namespace

std::size_t longest_palindromic_proper_prefix(const Word& w) {
  if (w.empty()) throw std::out_of_range("longest palindromic proper prefix of the empty word");
  // Palindromic prefixes of w are the borders of w·#·reverse(w).
  const std::vector<std::size_t> pi = cross_borders(w.codes(), reversed_codes(w));
  std::size_t len = pi.back();
  while (len >= w.size() && len > 0) len = pi[len - 1];
  return len;
}

std::size_t longest_palindromic_suffix(const Word& w) {
  if (w.empty()) return 0;
  return cross_borders(reversed_codes(w), w.codes()).back();
}

std::vector<Word> conjugates(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t s = 0; s < w.size(); ++s) out.push_back(w.rotation(s));
  return out;
}

bool are_conjugate(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  return (u.str() + u.str()).find(v.str()) != std::string::npos;
}

std::size_t least_rotation_shift(const Word& w) {
  // Two-candidate minimum rotation scan (linear time).
  const std::vector<int> c = w.codes();
  const std::size_t n = c.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int a = c[(i + k) % n];
    const int b = c[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word lyndon_conjugate(const Word& w) {
  if (w.empty() || !is_primitive(w)) {
    throw std::domain_error("Lyndon conjugate requires a primitive word, got \"" + w.str() + "\"");
  }
  return w.rotation(least_rotation_shift(w));
}

std::size_t smallest_period(const Word& w) {
  if (w.empty()) throw std::out_of_range("period of the empty word");
  return w.size() - prefix_function(w.codes()).back();
}

bool has_period(const Word& w, std::size_t p) {
  if (p == 0) return false;
  const std::string& t = w.str();
  for (std::size_t i = 0; i + p < t.size(); ++i) {
    if (t[i] != t[i + p]) return false;
  }
  return true;
}

std::vector<std::size_t> periods(const Word& w) {
  std::vector<std::size_t> out;
  if (w.empty()) return out;
  const std::vector<std::size_t> pi = prefix_function(w.codes());
  for (std::size_t b = pi.back();; b = pi[b - 1]) {
    out.push_back(w.size() - b);
    if (b == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_primitive(const Word& w) {
  if (w.empty()) return false;
  const std::size_t p = smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

std::vector<std::size_t> factor_complexity(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> profile(n + 1, 0);
  profile[0] = 1;
  if (n == 0) return profile;
  const SuffixIndex idx = build_suffix_index(w);
  // Suffix at rank r contributes the new factors of lengths (lcp[r], |suffix|].
  std::vector<long long> diff(n + 2, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t len = n - idx.sa[r];
    const std::size_t lo = idx.lcp[r] + 1;
    if (lo <= len) {
      diff[lo] += 1;
      diff[len + 1] -= 1;
    }
  }
  long long run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    run += diff[k];
    profile[k] = static_cast<std::size_t>(run);
  }
  return profile;
}

std::size_t distinct_factor_count(const Word& w, std::size_t k) {
  if (k < 1 || k > w.size()) {
    throw std::out_of_range("factor length " + std::to_string(k) + " outside [1, " +
                            std::to_string(w.size()) + "]");
  }
  return factor_complexity(w)[k];
}

std::size_t longest_repeated_factor_length(const Word& w) {
  if (w.empty()) throw std::out_of_range("longest repeated factor of the empty word");
  const SuffixIndex idx = build_suffix_index(w);
  return *std::max_element(idx.lcp.begin(), idx.lcp.end());
}

}  // namespace strattr
