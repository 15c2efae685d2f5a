#include <algorithm>
#include <map>
#include <stdexcept>

#include "strattr/compressors.hpp"

namespace strattr {

namespace {

// Online suffix automaton of the consumed prefix. first_end is the 0-based
// end of the leftmost occurrence of the state's strings.
class SuffixAutomaton {
 public:
  SuffixAutomaton() { states_.push_back({}); }

  void extend(int c, std::size_t end) {
    const std::size_t cur = states_.size();
    states_.push_back({states_[last_].len + 1, 0, end, {}});
    std::size_t p = last_;
    bool has_p = true;
    while (has_p && !states_[p].next.contains(c)) {
      states_[p].next[c] = cur;
      if (p == 0) {
        has_p = false;
      } else {
        p = states_[p].link;
      }
    }
    if (!has_p) {
      states_[cur].link = 0;
    } else {
      const std::size_t q = states_[p].next[c];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const std::size_t clone = states_.size();
        State copy = states_[q];
        copy.len = states_[p].len + 1;
        states_.push_back(copy);
        while (true) {
          auto it = states_[p].next.find(c);
          if (it == states_[p].next.end() || it->second != q) break;
          it->second = clone;
          if (p == 0) break;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last_ = cur;
  }

  // Longest prefix of codes[from..] that is a factor; also the leftmost end.
  std::pair<std::size_t, std::size_t> longest_prefix(const std::vector<int>& codes,
                                                     std::size_t from) const {
    std::size_t state = 0, len = 0;
    while (from + len < codes.size()) {
      auto it = states_[state].next.find(codes[from + len]);
      if (it == states_[state].next.end()) break;
      state = it->second;
      ++len;
    }
    return {len, states_[state].first_end};
  }

 private:
  struct State {
    std::size_t len = 0;
    std::size_t link = 0;
    std::size_t first_end = 0;
    std::map<int, std::size_t> next;
  };
  std::vector<State> states_;
  std::size_t last_ = 0;
};

// Longest match of w[i..] against sources starting before i, overlap allowed.
// Z-function of w[i..] # w[0..]; returns (length, 0-based source start).
std::pair<std::size_t, std::size_t> longest_previous_factor(const std::vector<int>& codes,
                                                            std::size_t i) {
  std::vector<int> s(codes.begin() + static_cast<std::ptrdiff_t>(i), codes.end());
  const std::size_t m = s.size();
  s.push_back(-1);
  s.insert(s.end(), codes.begin(), codes.end());
  std::vector<std::size_t> z(s.size(), 0);
  for (std::size_t k = 1, l = 0, r = 0; k < s.size(); ++k) {
    if (k < r) z[k] = std::min(r - k, z[k - l]);
    while (k + z[k] < s.size() && s[z[k]] == s[k + z[k]]) ++z[k];
    if (k + z[k] > r) {
      l = k;
      r = k + z[k];
    }
  }
  std::size_t best = 0, source = 0;
  for (std::size_t j = 0; j < i; ++j) {
    const std::size_t len = z[m + 1 + j];
    if (len > best) {
      best = len;
      source = j;
    }
  }
  return {best, source};
}

}  // namespace

LzParse lz_parse(const Word& w, LzVariant variant) {
  LzParse parse;
  parse.text_length = w.size();
  parse.variant = variant;
  const std::vector<int> codes = w.codes();
  const std::size_t n = codes.size();

  SuffixAutomaton sam;
  std::size_t consumed = 0;  // symbols fed to the automaton
  std::size_t i = 0;
  while (i < n) {
    std::size_t len = 0, source = 0;
    if (variant == LzVariant::previous_phrases) {
      const auto [l, first_end] = sam.longest_prefix(codes, i);
      len = l;
      if (len > 0) source = first_end + 1 - len;
    } else {
      std::tie(len, source) = longest_previous_factor(codes, i);
    }

    LzPhrase phrase;
    phrase.position = i + 1;
    if (len == 0) {
      phrase.kind = LzPhrase::Kind::literal;
      phrase.length = 1;
      phrase.symbol = w.str()[i];
    } else {
      phrase.kind = LzPhrase::Kind::copy;
      phrase.length = len;
      phrase.source_start = source + 1;
    }
    parse.phrases.push_back(phrase);
    i += phrase.length;
    if (variant == LzVariant::previous_phrases) {
      for (; consumed < i; ++consumed) sam.extend(codes[consumed], consumed);
    }
  }
  return parse;
}

Word lz_decode(const LzParse& parse, const std::shared_ptr<const Alphabet>& alphabet) {
  std::string out;
  out.reserve(parse.text_length);
  for (const LzPhrase& ph : parse.phrases) {
    if (ph.position != out.size() + 1) throw std::domain_error("LZ phrases are not contiguous");
    if (ph.kind == LzPhrase::Kind::literal) {
      out.push_back(ph.symbol);
      continue;
    }
    if (ph.source_start < 1 || ph.source_start > out.size()) {
      throw std::domain_error("LZ copy source outside the decoded prefix");
    }
    // Byte-wise copy handles overlapping (self-referential) sources.
    for (std::size_t k = 0; k < ph.length; ++k) out.push_back(out[ph.source_start - 1 + k]);
  }
  return Word(out, alphabet);
}

Attractor attractor_from_lz(const Word& w, LzVariant variant) {
  const LzParse parse = lz_parse(w, variant);
  std::vector<std::size_t> ends;
  ends.reserve(parse.size());
  for (const LzPhrase& ph : parse.phrases) ends.push_back(ph.end());
  return Attractor(std::move(ends), w.size());
}

}  // namespace strattr
