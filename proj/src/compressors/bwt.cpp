#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "strattr/compressors.hpp"
#include "strattr/suffix_array.hpp"

namespace strattr {

std::vector<Run> equal_letter_runs(std::string_view s) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j + 1 < s.size() && s[j + 1] == s[i]) ++j;
    runs.push_back({i + 1, j + 1, s[i]});
    i = j + 1;
  }
  return runs;
}

Word bwt_conjugates(const Word& w) {
  const std::vector<int> codes = w.codes();
  const std::vector<std::size_t> order = sort_cyclic_shifts(codes);
  const std::size_t n = w.size();
  std::string out(n, '\0');
  for (std::size_t r = 0; r < n; ++r) out[r] = w.str()[(order[r] + n - 1) % n];
  return Word(out, w.alphabet_ptr());
}

BwtOutput bwt_sentinel(const Word& w, char sentinel) {
  if (w.str().find(sentinel) != std::string::npos) {
    throw std::domain_error(std::string("word contains the sentinel '") + sentinel + "'");
  }
  const std::size_t n = w.size();
  std::vector<int> codes(n + 1);
  const std::vector<int> base = w.codes();
  for (std::size_t i = 0; i < n; ++i) codes[i] = base[i] + 1;
  codes[n] = 0;
  // Rotations of w$ sort exactly like its suffixes since $ is unique and smallest.
  const std::vector<std::size_t> sa = sort_cyclic_shifts(codes);

  BwtOutput out;
  out.sentinel = sentinel;
  out.alphabet = w.alphabet_ptr();
  out.transformed.resize(n + 1);
  out.text_position_of.resize(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    const std::size_t start = sa[r];
    if (start == 0) {
      out.transformed[r] = sentinel;
      out.text_position_of[r] = std::nullopt;
    } else {
      out.transformed[r] = w.str()[start - 1];
      out.text_position_of[r] = start;  // 1-based position of w[start - 1]
    }
  }
  out.runs = equal_letter_runs(out.transformed);
  return out;
}

Word invert_bwt(const BwtOutput& bwt) {
  const std::string& L = bwt.transformed;
  const std::size_t len = L.size();
  if (len == 0) throw std::domain_error("empty BWT");
  const Alphabet& alpha = *bwt.alphabet;
  auto code = [&](char c) { return c == bwt.sentinel ? 0 : alpha.rank(c) + 1; };

  // LF mapping: row r maps to C[c] + occ(c, r).
  std::vector<std::size_t> count(alpha.size() + 1, 0);
  for (char c : L) {
    const int k = code(c);
    if (k < 0) throw std::domain_error("BWT symbol outside the alphabet");
    ++count[static_cast<std::size_t>(k)];
  }
  std::vector<std::size_t> first(count.size(), 0);
  for (std::size_t k = 1; k < count.size(); ++k) first[k] = first[k - 1] + count[k - 1];
  std::vector<std::size_t> lf(len);
  std::vector<std::size_t> seen(count.size(), 0);
  std::size_t sentinel_row = len;
  for (std::size_t r = 0; r < len; ++r) {
    const auto k = static_cast<std::size_t>(code(L[r]));
    lf[r] = first[k] + seen[k]++;
    if (L[r] == bwt.sentinel) sentinel_row = r;
  }
  if (sentinel_row == len || count[0] != 1) throw std::domain_error("BWT must hold one sentinel");

  // Row 0 is the rotation starting with $, i.e. $w; its last symbol is w[n].
  std::string text(len - 1, '\0');
  std::size_t r = 0;
  for (std::size_t i = len - 1; i-- > 0;) {
    text[i] = L[r];
    r = lf[r];
  }
  return Word(text, bwt.alphabet);
}

Attractor attractor_from_bwt(const Word& w, RunEndpoint endpoint, char sentinel) {
  const BwtOutput bwt = bwt_sentinel(w, sentinel);
  std::vector<std::size_t> positions;
  for (const Run& run : bwt.runs) {
    // The sentinel is unique, so its run has length 1 and holds no text symbol.
    if (run.symbol == sentinel) continue;
    const std::size_t row = endpoint == RunEndpoint::first ? run.start : run.end;
    positions.push_back(*bwt.text_position_of[row - 1]);
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return Attractor(std::move(positions), w.size());
}

bool is_clustered_sturmian(const Word& w) {
  if (w.distinct_symbols() > 2 || w.alphabet().size() > 2) {
    throw std::domain_error("clustering test needs a binary alphabet, got \"" +
                            std::string(w.alphabet().symbols()) + "\"");
  }
  if (w.empty()) return false;
  const std::string b = bwt_conjugates(w).str();
  // Larger letter first: b^p a^q.
  const Alphabet& alpha = w.alphabet();
  std::size_t p = 0;
  while (p < b.size() && alpha.rank(b[p]) == static_cast<int>(alpha.size()) - 1 &&
         alpha.size() == 2) {
    ++p;
  }
  for (std::size_t i = p; i < b.size(); ++i) {
    if (b[i] != b[p]) return false;
  }
  if (alpha.size() == 2 && p < b.size() && alpha.rank(b[p]) != 0) return false;
  const std::size_t q = b.size() - p;
  return std::gcd(p, q) == 1;
}

Attractor attractor_from_rle(const Word& w) {
  if (w.empty()) throw std::out_of_range("run-length attractor of the empty word");
  std::vector<std::size_t> ends;
  std::string seen;
  for (const Run& run : equal_letter_runs(w.str())) {
    if (seen.find(run.symbol) != std::string::npos) {
      throw std::domain_error(std::string("letter '") + run.symbol + "' heads more than one run");
    }
    seen.push_back(run.symbol);
    ends.push_back(run.end);
  }
  return Attractor(std::move(ends), w.size());
}

}  // namespace strattr
