#include "strattr/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "records.hpp"
#include "strattr/families.hpp"

namespace strattr::cli {

namespace {

struct Global {
  bool json_out = false;
  bool text_out = false;
  bool timings = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t length_cap = kDefaultLengthCap;
  std::size_t jobs = 1;
  std::string sentinel = std::string(1, kDefaultSentinel);
  std::string alphabet;

  Limits limits() const { return {node_budget, length_cap}; }
  char sentinel_char() const {
    if (sentinel.size() != 1) throw std::domain_error("--sentinel must be a single character");
    return sentinel[0];
  }
};

struct Inputs {
  std::vector<std::string> words;
  std::string file;
  std::vector<std::string> gens;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_count(std::string_view text, const std::string& what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::domain_error("bad " + what + ": \"" + std::string(text) + "\"");
  }
  return v;
}

std::vector<std::size_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_count(part, what));
  return out;
}

// "a:b" or a single value
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    const std::size_t v = parse_count(parts[0], "range");
    return {v, v};
  }
  if (parts.size() != 2) throw std::domain_error("bad range \"" + text + "\", expected A:B");
  const std::size_t lo = parse_count(parts[0], "range"), hi = parse_count(parts[1], "range");
  if (lo > hi) throw std::domain_error("empty range \"" + text + "\"");
  return {lo, hi};
}

Word make_word(const std::string& text, const Global& g) {
  if (text.empty()) throw std::domain_error("empty word");
  if (text.find(g.sentinel_char()) != std::string::npos) {
    throw std::domain_error("word \"" + text + "\" contains the sentinel '" + g.sentinel + "'");
  }
  check_length_cap(text.size(), g.length_cap, "input word");
  return g.alphabet.empty() ? Word(text) : Word(text, Alphabet(g.alphabet));
}

EpistandardSpec epistandard_spec(const std::string& family, std::size_t k,
                                 std::optional<std::size_t> extra, const std::string& letters) {
  EpistandardSpec spec;
  spec.family = parse_epistandard_family(family);
  spec.k = k;
  if (extra && spec.family == EpistandardFamily::type_i) spec.m = *extra;
  if (extra && spec.family == EpistandardFamily::type_ii) spec.ell = *extra;
  spec.letters = letters;
  spec.validate();
  return spec;
}

// tm:N | sturmian:q0,q1,... | debruijn:S:K[:circular] | epistandard:F:K[:M_or_ELL] |
// pal:DIRECTIVE[:LETTER]
Word generate(const std::string& spec, const Global& g) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  const auto bad = [&] { return std::domain_error("bad generator spec \"" + spec + "\""); };
  if (kind == "tm") {
    if (parts.size() != 2) throw bad();
    return thue_morse(parse_count(parts[1], "n"), g.length_cap);
  }
  if (kind == "sturmian") {
    if (parts.size() != 2) throw bad();
    return standard_sturmian({parse_list(parts[1], "directive")}, g.length_cap);
  }
  if (kind == "debruijn") {
    if (parts.size() < 3 || parts.size() > 4) throw bad();
    const std::size_t sigma = parse_count(parts[1], "sigma"), k = parse_count(parts[2], "k");
    if (parts.size() == 4) {
      if (parts[3] != "circular") throw bad();
      return de_bruijn_circular(sigma, k, g.length_cap);
    }
    return de_bruijn_linear(sigma, k, g.length_cap);
  }
  if (kind == "epistandard") {
    if (parts.size() < 3 || parts.size() > 4) throw bad();
    std::optional<std::size_t> extra;
    if (parts.size() == 4) extra = parse_count(parts[3], "parameter");
    return epistandard(epistandard_spec(parts[1], parse_count(parts[2], "k"), extra, ""),
                       g.length_cap);
  }
  if (kind == "pal") {
    if (parts.size() < 2 || parts.size() > 3 || parts[1].empty()) throw bad();
    Word w = pal_closure(Word(parts[1]), g.length_cap).word;
    if (parts.size() == 3) {
      if (parts[2].size() != 1) throw bad();
      w = Word(w.str() + parts[2]);
    }
    return w;
  }
  throw bad();
}

std::vector<Word> resolve(const Inputs& in, const Global& g) {
  std::vector<Word> out;
  for (const auto& w : in.words) out.push_back(make_word(w, g));
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw std::domain_error("cannot read \"" + in.file + "\"");
    std::string line;
    std::size_t before = out.size();
    while (std::getline(f, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) out.push_back(make_word(line, g));
    }
    if (out.size() == before) throw std::domain_error("\"" + in.file + "\" holds no word");
  }
  for (const auto& spec : in.gens) {
    Word w = generate(spec, g);
    out.push_back(make_word(w.str(), g));
  }
  if (out.empty()) throw std::domain_error("no input word: use -w, -f or --gen");
  return out;
}

void add_inputs(CLI::App* sub, Inputs& in) {
  sub->add_option("-w,--word", in.words, "word given inline (repeatable)");
  sub->add_option("-f,--file", in.file, "file with one word per line");
  sub->add_option("--gen", in.gens, "generator spec, e.g. tm:5 or sturmian:1,2 (repeatable)");
}

// Results land at their own index, so the output does not depend on scheduling.
std::vector<json> par_map(std::size_t count, const Global& g,
                          const std::function<json(std::size_t)>& f) {
  std::vector<json> out(count);
  std::vector<std::exception_ptr> errors(count);
  const auto timed = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out[i] = f(i);
    } catch (...) {
      errors[i] = std::current_exception();
      return;
    }
    if (g.timings) {
      out[i]["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(g.jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) timed(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) timed(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// A report is "not an attractor" as soon as one record says so.
int records_exit_code(const json& records) {
  for (const auto& r : records) {
    if (r.contains("valid") && !r["valid"].get<bool>()) return kExitNotAttractor;
  }
  return kExitOk;
}

void emit(const json& report, const Global& g, std::ostream& out) {
  if (g.text_out) {
    out << render_text(report);
  } else {
    out << report.dump(2) << '\n';
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat(const json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items()) {
    if (x.is_object()) return false;
    if (x.is_array()) {
      for (const auto& e : x) {
        if (e.is_structured()) return false;
      }
    }
  }
  return true;
}

std::string cell_text(const json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : ",") + scalar_text(e);
  return s.empty() ? "{}" : s;
}

void render_value(std::ostream& os, const std::string& key, const json& v, std::size_t indent);

void render_table(std::ostream& os, const json& rows, std::size_t indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [k, x] : row.items()) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      line.push_back(row.contains(cols[i]) ? cell_text(row[cols[i]]) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  const auto print = [&](const std::vector<std::string>& line) {
    os << std::string(indent, ' ');
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << '\n';
  };
  print(cols);
  for (const auto& line : cells) print(line);
}

void render_value(std::ostream& os, const std::string& key, const json& v, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render_value(os, k, x, indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    os << pad << key << ":\n";
    bool flat = true;
    for (const auto& e : v) flat = flat && is_flat(e);
    if (flat) {
      render_table(os, v, indent + 2);
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) render_value(os, "[" + std::to_string(i + 1) + "]", v[i], indent + 2);
    }
  } else {
    os << pad << key << ": " << cell_text(v) << '\n';
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  for (const auto& [k, v] : report.items()) {
    if (k == "command" && v.is_array()) {
      std::string s;
      for (const auto& a : v) s += (s.empty() ? "" : " ") + a.get<std::string>();
      os << "command: " << s << '\n';
    } else {
      render_value(os, k, v, 0);
    }
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"String attractors: verification, minimization, compressors and word families",
               "strattr"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json_out, "JSON report (default for everything but gen)");
  app.add_flag("--text", g.text_out, "plain-text report");
  app.add_flag("--timings", g.timings, "add elapsed_ms to each record (not deterministic)");
  app.add_option("--budget", g.node_budget, "node budget for exact searches")
      ->envname("STRATTR_NODE_BUDGET");
  app.add_option("--length-cap", g.length_cap, "largest word length accepted or generated")
      ->envname("STRATTR_LENGTH_CAP");
  app.add_option("--jobs", g.jobs, "process independent words on N threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--sentinel", g.sentinel, "reserved end marker, never part of a word");
  app.add_option("--alphabet", g.alphabet, "declared alphabet (ordered), overrides inference");

  const auto fall = [](CLI::App* s) { s->fallthrough(); };

  // attr
  auto* attr = app.add_subcommand("attr", "verify, minimize and bound attractors");
  attr->require_subcommand(1);
  fall(attr);
  Inputs verify_in, min_in, bounds_in;
  std::string positions;
  bool exhaustive = false, no_exact = false;
  auto* verify = attr->add_subcommand("verify", "check a position set");
  fall(verify);
  add_inputs(verify, verify_in);
  verify->add_option("-g,--positions", positions, "1-based positions, comma separated")->required();
  auto* minimize = attr->add_subcommand("min", "smallest attractor (lexicographically least)");
  fall(minimize);
  add_inputs(minimize, min_in);
  minimize->add_flag("--exhaustive", exhaustive, "plain subset enumeration (|w| <= 24)");
  auto* bounds = attr->add_subcommand("bounds", "lower and upper bounds on gamma*");
  fall(bounds);
  add_inputs(bounds, bounds_in);
  bounds->add_flag("--no-exact", no_exact, "skip the exact search");

  // compressors
  Inputs bwt_in, lz_in;
  std::string endpoint = "first";
  bool self_ref = false;
  auto* bwt = app.add_subcommand("bwt", "BWT runs and the attractor they induce");
  fall(bwt);
  add_inputs(bwt, bwt_in);
  bwt->add_option("--endpoint", endpoint, "run endpoint giving the position")
      ->check(CLI::IsMember({"first", "last"}));
  auto* lz = app.add_subcommand("lz", "LZ parse and the attractor of phrase ends");
  fall(lz);
  add_inputs(lz, lz_in);
  lz->add_flag("--self-ref", self_ref, "sources may overlap the phrase");
  auto* collage_cmd = app.add_subcommand("collage", "collage systems");
  collage_cmd->require_subcommand(1);
  fall(collage_cmd);
  std::size_t collage_n = 0;
  auto* collage_tm = collage_cmd->add_subcommand("tm", "Thue-Morse collage system");
  fall(collage_tm);
  collage_tm->add_option("--n", collage_n, "index n of t_n")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "generate words");
  gen->require_subcommand(1);
  fall(gen);
  std::string output;
  gen->add_option("-o,--output", output, "write to a file instead of stdout");
  std::size_t gen_n = 0, gen_sigma = 2, gen_k = 1, gen_extra = 0;
  std::string gen_directive, gen_family = "i", gen_letters, gen_append;
  bool circular = false;
  auto* gen_tm = gen->add_subcommand("tm", "Thue-Morse word t_n");
  fall(gen_tm);
  gen_tm->add_option("--n", gen_n)->required();
  auto* gen_st = gen->add_subcommand("sturmian", "standard Sturmian word");
  fall(gen_st);
  gen_st->add_option("--directive", gen_directive, "q0,q1,...")->required();
  auto* gen_epi = gen->add_subcommand("epistandard", "circularly balanced epistandard word");
  fall(gen_epi);
  gen_epi->add_option("--family", gen_family, "i, ii or iii");
  gen_epi->add_option("--k", gen_k)->required();
  auto* gen_epi_m = gen_epi->add_option("--m", gen_extra, "type i exponent");
  auto* gen_epi_ell = gen_epi->add_option("--ell", gen_extra, "type ii offset");
  gen_epi_m->excludes(gen_epi_ell);
  gen_epi->add_option("--letters", gen_letters, "letters a_1..a_k");
  auto* gen_db = gen->add_subcommand("debruijn", "de Bruijn word");
  fall(gen_db);
  gen_db->add_option("--sigma", gen_sigma);
  gen_db->add_option("--k", gen_k)->required();
  gen_db->add_flag("--circular", circular, "omit the (k-1)-letter tail");
  auto* gen_pal = gen->add_subcommand("pal", "iterated palindromic closure");
  fall(gen_pal);
  gen_pal->add_option("--directive", gen_directive)->required();
  gen_pal->add_option("--append", gen_append, "letter added after the closure");

  // family
  auto* family = app.add_subcommand("family", "certified attractors of word families");
  family->require_subcommand(1);
  fall(family);
  bool fam_exact = false;
  std::string sweep, fam_directive, fam_family = "i", fam_letters, fam_append;
  std::optional<std::size_t> fam_n, fam_k, fam_m, fam_ell;
  std::size_t fam_sigma = 2;
  const auto common = [&](CLI::App* s) {
    fall(s);
    s->add_flag("--exact", fam_exact, "also run the exact minimizer");
    s->add_option("--sweep", sweep, "range A:B of the main parameter");
  };
  auto* fam_st = family->add_subcommand("sturmian", "standard Sturmian words (sweep: lengths)");
  common(fam_st);
  fam_st->add_option("--directive", fam_directive, "q0,q1,...");
  auto* fam_tm = family->add_subcommand("tm", "Thue-Morse words (sweep: n)");
  common(fam_tm);
  fam_tm->add_option("--n", fam_n);
  auto* fam_epi = family->add_subcommand("epistandard", "epistandard words (sweep: k)");
  common(fam_epi);
  fam_epi->add_option("--family", fam_family, "i, ii or iii");
  fam_epi->add_option("--k", fam_k);
  fam_epi->add_option("--m", fam_m, "type i exponent");
  fam_epi->add_option("--ell", fam_ell, "type ii offset");
  fam_epi->add_option("--letters", fam_letters, "letters a_1..a_k");
  fam_epi->add_option("--directive", fam_directive, "explicit directive word for Pal");
  fam_epi->add_option("--append", fam_append, "letter added after the closure");
  auto* fam_db = family->add_subcommand("debruijn", "linear de Bruijn words (sweep: k)");
  common(fam_db);
  fam_db->add_option("--sigma", fam_sigma);
  fam_db->add_option("--k", fam_k);

  // suite
  auto* suite = app.add_subcommand("suite", "every golden example and theorem check");
  fall(suite);
  bool mutate = false;
  suite->add_flag("--mutate", mutate, "corrupt one golden attractor (must fail)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  if (g.json_out && g.text_out) {
    err << "error: --json and --text are exclusive\n";
    return kExitError;
  }

  const Limits limits = g.limits();
  json report = {{"schema_version", kSchemaVersion}, {"command", args}};
  const auto finish = [&](std::vector<json> records) {
    report["records"] = records;
    const int code = records_exit_code(report["records"]);
    report["status"] = code == kExitOk ? "ok" : "not_attractor";
    emit(report, g, out);
    return code;
  };
  const auto over_words = [&](const Inputs& in, const std::function<json(const Word&)>& f) {
    const std::vector<Word> words = resolve(in, g);
    return finish(par_map(words.size(), g, [&](std::size_t i) { return f(words[i]); }));
  };
  const auto over_range = [&](std::optional<std::size_t> single, const char* name,
                              const std::function<json(std::size_t)>& f) {
    std::pair<std::size_t, std::size_t> r;
    if (!sweep.empty()) {
      if (single) throw std::domain_error(std::string("give either --") + name + " or --sweep");
      r = parse_range(sweep);
    } else if (single) {
      r = {*single, *single};
    } else {
      throw std::domain_error(std::string("missing --") + name + " or --sweep");
    }
    return finish(par_map(r.second - r.first + 1, g, [&](std::size_t i) { return f(r.first + i); }));
  };

  try {
    if (verify->parsed()) {
      return over_words(verify_in, [&](const Word& w) {
        return verify_record(w, Attractor(parse_list(positions, "position"), w.size()));
      });
    }
    if (minimize->parsed()) {
      return over_words(min_in, [&](const Word& w) { return min_record(w, limits, exhaustive); });
    }
    if (bounds->parsed()) {
      return over_words(bounds_in, [&](const Word& w) { return bounds_record(w, limits, !no_exact); });
    }
    if (bwt->parsed()) {
      const char s = g.sentinel_char();
      const RunEndpoint e = endpoint == "last" ? RunEndpoint::last : RunEndpoint::first;
      return over_words(bwt_in, [&](const Word& w) { return bwt_record(w, s, e); });
    }
    if (lz->parsed()) {
      const LzVariant v = self_ref ? LzVariant::self_referential : LzVariant::previous_phrases;
      return over_words(lz_in, [&](const Word& w) { return lz_record(w, v); });
    }
    if (collage_tm->parsed()) return finish({collage_tm_record(collage_n, limits)});

    if (gen->parsed()) {
      Word w;
      json rec;
      if (gen_tm->parsed()) {
        w = thue_morse(gen_n, g.length_cap);
        rec["generator"] = "tm:" + std::to_string(gen_n);
      } else if (gen_st->parsed()) {
        w = standard_sturmian({parse_list(gen_directive, "directive")}, g.length_cap);
        rec["generator"] = "sturmian:" + gen_directive;
      } else if (gen_epi->parsed()) {
        std::optional<std::size_t> extra;
        if (gen_epi_m->count() || gen_epi_ell->count()) extra = gen_extra;
        w = epistandard(epistandard_spec(gen_family, gen_k, extra, gen_letters), g.length_cap);
        rec["generator"] = "epistandard:" + gen_family + ":" + std::to_string(gen_k) +
                           (extra ? ":" + std::to_string(*extra) : "");
      } else if (gen_db->parsed()) {
        w = circular ? de_bruijn_circular(gen_sigma, gen_k, g.length_cap)
                     : de_bruijn_linear(gen_sigma, gen_k, g.length_cap);
        rec["generator"] = "debruijn:" + std::to_string(gen_sigma) + ":" + std::to_string(gen_k) +
                           (circular ? ":circular" : "");
      } else {
        if (gen_append.size() > 1) throw std::domain_error("--append takes one letter");
        w = pal_closure(Word(gen_directive), g.length_cap).word;
        if (!gen_append.empty()) w = Word(w.str() + gen_append);
        rec["generator"] = "pal:" + gen_directive + (gen_append.empty() ? "" : ":" + gen_append);
      }
      rec["word"] = w.str();
      rec["length"] = w.size();
      std::ofstream file;
      if (!output.empty()) {
        file.open(output);
        if (!file) throw std::domain_error("cannot write \"" + output + "\"");
      }
      std::ostream& dest = output.empty() ? out : file;
      if (g.json_out || g.text_out) {
        report["records"] = json::array({rec});
        report["status"] = "ok";
        emit(report, g, dest);
      } else {
        dest << w.str() << '\n';
      }
      return kExitOk;
    }

    if (fam_st->parsed()) {
      std::vector<DirectiveSequence> ds;
      if (!sweep.empty()) {
        if (!fam_directive.empty()) throw std::domain_error("give either --directive or --sweep");
        const auto [lo, hi] = parse_range(sweep);
        for (auto& d : standard_directives(hi)) {
          if (standard_sturmian(d).size() >= lo) ds.push_back(std::move(d));
        }
      } else if (!fam_directive.empty()) {
        ds.push_back({parse_list(fam_directive, "directive")});
      } else {
        throw std::domain_error("missing --directive or --sweep");
      }
      return finish(par_map(ds.size(), g,
                            [&](std::size_t i) { return sturmian_record(ds[i], limits, fam_exact); }));
    }
    if (fam_tm->parsed()) {
      return over_range(fam_n, "n", [&](std::size_t n) { return tm_record(n, limits, fam_exact); });
    }
    if (fam_epi->parsed()) {
      if (!fam_directive.empty()) {
        if (fam_k || !sweep.empty()) throw std::domain_error("--directive excludes --k and --sweep");
        if (fam_append.size() > 1) throw std::domain_error("--append takes one letter");
        const Word d(fam_directive);
        const char a = fam_append.empty() ? '\0' : fam_append[0];
        return finish({epistandard_directive_record(d, a, limits, fam_exact)});
      }
      const std::optional<std::size_t> extra = fam_m ? fam_m : fam_ell;
      return over_range(fam_k, "k", [&](std::size_t k) {
        return epistandard_spec_record(epistandard_spec(fam_family, k, extra, fam_letters), limits,
                                       fam_exact);
      });
    }
    if (fam_db->parsed()) {
      return over_range(fam_k, "k", [&](std::size_t k) {
        return debruijn_record(fam_sigma, k, limits, fam_exact);
      });
    }

    if (suite->parsed()) {
      const auto checks = golden_suite({.mutate = mutate, .node_budget = g.node_budget});
      json records = json::array();
      std::size_t passed = 0, failed = 0, reported = 0;
      for (const auto& c : checks) {
        const char* status = !c.pass ? "report" : *c.pass ? "pass" : "fail";
        records.push_back({{"anchor", c.anchor}, {"claim", c.claim}, {"status", status},
                           {"detail", c.detail}});
        if (!c.pass) {
          ++reported;
        } else if (*c.pass) {
          ++passed;
        } else {
          ++failed;
          err << "FAIL " << c.anchor << ": " << c.detail << '\n';
        }
      }
      report["records"] = records;
      report["summary"] = {{"passed", passed}, {"failed", failed}, {"reported", reported}};
      report["mutated"] = mutate;
      report["status"] = failed ? "failed" : "ok";
      emit(report, g, out);
      return failed ? kExitError : kExitOk;
    }
  } catch (const theorem_violation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kExitError;
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << "error: nothing to do\n";
  return kExitError;
}

}  // namespace strattr::cli
