#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"
#include "strattr/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = strattr::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<std::size_t> positions(const json& j) { return j.get<std::vector<std::size_t>>(); }

// Scoped environment variable.
struct Env {
  std::string name;
  Env(std::string n, const std::string& value) : name(std::move(n)) {
    ::setenv(name.c_str(), value.c_str(), 1);
  }
  ~Env() { ::unsetenv(name.c_str()); }
};

}  // namespace

TEST_CASE("attr verify") {
  auto ok = cli({"attr", "verify", "-w", "adcbaadcbadc", "-g", "4,6,8,11"});
  CHECK(ok.code == 0);
  auto r = ok.report();
  CHECK(r["schema_version"] == 1);
  CHECK(r["records"][0]["valid"] == true);
  CHECK_FALSE(r["records"][0].contains("witness"));

  auto bad = cli({"attr", "verify", "-w", "adcbaadcbadc", "-g", "1,2,3,4"});
  CHECK(bad.code == 2);
  r = bad.report();
  CHECK(r["status"] == "not_attractor");
  CHECK(r["records"][0]["witness"]["factor"] == "aa");
  // aa occurs once, at 5..6
  CHECK(r["records"][0]["witness"]["occurrences"] == json::parse(R"([{"start":5,"length":2}])"));

  CHECK(cli({"attr", "verify", "-w", "abc", "-g", "1,9"}).code == 1);
  CHECK(cli({"attr", "verify", "-w", "abc", "-g", "1,x"}).code == 1);
  CHECK(cli({"attr", "verify", "-w", "abc"}).code == 1);
  CHECK(cli({"attr", "verify", "-w", "", "-g", "1"}).code == 1);
  CHECK(cli({"attr", "verify", "-w", "ab$", "-g", "1"}).code == 1);
  CHECK(cli({"--sentinel", "#", "attr", "verify", "-w", "ab$", "-g", "1,2,3"}).code == 0);
}

TEST_CASE("several inputs, file and generator specs") {
  const auto path = std::filesystem::temp_directory_path() / "strattr_words.txt";
  {
    std::ofstream f(path);
    f << "abab\n\nbaab\r\n";
  }
  auto o = cli({"attr", "min", "-w", "adcbaadcbadc", "-f", path.string(), "--gen", "tm:3"});
  REQUIRE(o.code == 0);
  const auto r = o.report();
  REQUIRE(r["records"].size() == 4);
  for (const auto& rec : r["records"]) {
    CHECK(rec["optimal"] == true);
    const auto [g, first] = oracle::min_attractor(rec["word"].get<std::string>());
    CHECK(rec["gamma_star"] == g);
    CHECK(positions(rec["positions"]) == first);
  }
  CHECK(r["records"][3]["word"] == "abbabaab");
  std::filesystem::remove(path);
  CHECK(cli({"attr", "min", "-f", "/nonexistent/words"}).code == 1);
  CHECK(cli({"attr", "min", "--gen", "nope:3"}).code == 1);
  CHECK(cli({"attr", "min"}).code == 1);
}

TEST_CASE("exhaustive minimum on t_3") {
  const auto r = cli({"attr", "min", "--gen", "tm:3", "--exhaustive"}).report()["records"][0];
  CHECK(r["gamma_star"] == 3);
  CHECK(r["rejected_below"] == 28);
}

TEST_CASE("declared alphabet") {
  const auto r = cli({"--alphabet", "abc", "attr", "bounds", "-w", "abab"}).report()["records"][0];
  CHECK(r["bounds"]["alphabet"] == 2);  // only occurring letters must be hit
  CHECK(cli({"--alphabet", "ab", "attr", "bounds", "-w", "abc"}).code == 1);
}

TEST_CASE("attr bounds") {
  const auto r = cli({"attr", "bounds", "-w", "adcbaadcbadc"}).report()["records"][0];
  CHECK(r["gamma_star"] == 4);
  CHECK(r["consistent"] == true);
  CHECK(r["bounds"]["longest_repeated"] == 5);
  CHECK(r["bounds"]["best_lower"] == 4);
  const auto q = cli({"attr", "bounds", "-w", "adcbaadcbadc", "--no-exact"}).report()["records"][0];
  CHECK_FALSE(q.contains("gamma_star"));
}

TEST_CASE("budget from the environment") {
  Env env("STRATTR_NODE_BUDGET", "1");
  const auto r = cli({"attr", "min", "--gen", "debruijn:2:4"}).report()["records"][0];
  CHECK(r["optimal"] == false);
  CHECK_FALSE(r.contains("gamma_star"));
  // the flag wins over the environment
  const auto f = cli({"--budget", "1000000", "attr", "min", "--gen", "debruijn:2:4"}).report();
  CHECK(f["records"][0]["gamma_star"] == 4);
}

TEST_CASE("length cap from the environment") {
  Env env("STRATTR_LENGTH_CAP", "16");
  CHECK(cli({"gen", "tm", "--n", "4"}).code == 0);
  const auto o = cli({"gen", "tm", "--n", "5"});
  CHECK(o.code == 1);
  CHECK(o.err.find("cap") != std::string::npos);
  CHECK(cli({"attr", "min", "-w", "aaaaaaaaaaaaaaaaa"}).code == 1);
}

TEST_CASE("gen") {
  CHECK(cli({"gen", "tm", "--n", "3"}).out == "abbabaab\n");
  CHECK(cli({"gen", "sturmian", "--directive", "1,2,1,2"}).out == oracle::standard_word({1, 2, 1, 2}) + "\n");
  CHECK(cli({"gen", "debruijn", "--sigma", "2", "--k", "4"}).out == "aaaabaabbababbbbaaa\n");
  CHECK(cli({"gen", "debruijn", "--k", "3", "--circular"}).out == "aaababbb\n");
  CHECK(cli({"gen", "epistandard", "--family", "iii", "--k", "3"}).out == "acabaca\n");
  CHECK(cli({"gen", "pal", "--directive", "cab"}).out == "cacbcac\n");
  CHECK(cli({"gen", "pal", "--directive", "adca", "--append", "b"}).out == "adacadaadacadab\n");
  CHECK(cli({"gen", "epistandard", "--family", "ii", "--k", "3"}).code == 1);
  const auto j = cli({"--json", "gen", "tm", "--n", "2"}).report();
  CHECK(j["records"][0]["word"] == "abba");
  CHECK(j["records"][0]["generator"] == "tm:2");

  const auto path = std::filesystem::temp_directory_path() / "strattr_gen.txt";
  const auto o = cli({"gen", "-o", path.string(), "tm", "--n", "2"});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line == "abba");
  std::filesystem::remove(path);
}

TEST_CASE("bwt and lz") {
  const auto b = cli({"bwt", "-w", "adcbaadcbadc"}).report()["records"][0];
  CHECK(b["bwt"] == oracle::bwt_sentinel("adcbaadcbadc"));
  CHECK(b["conjugate_bwt"] == oracle::bwt_rotations("adcbaadcbadc"));
  CHECK(b["valid"] == true);
  CHECK(b["inverts"] == true);
  CHECK(b["r"] == b["runs"].size());
  CHECK_FALSE(b.contains("clustered_sturmian"));
  const auto s = cli({"bwt", "-w", "abaababaababa", "--endpoint", "last"}).report()["records"][0];
  CHECK(s["clustered_sturmian"] == true);
  CHECK(s["conjugate_runs"] == 2);
  CHECK(cli({"bwt", "-w", "ab", "--endpoint", "middle"}).code == 1);

  const auto l = cli({"lz", "-w", "aaaa"}).report()["records"][0];
  CHECK(positions(l["attractor"]) == std::vector<std::size_t>{1, 2, 4});
  CHECK(l["z"] == 3);
  CHECK(l["phrases"][0]["source"].is_null());
  CHECK(l["phrases"][2] == json::parse(R"({"start":3,"length":2,"source":1})"));
  const auto sr = cli({"lz", "-w", "aaaa", "--self-ref"}).report()["records"][0];
  CHECK(sr["z"] == oracle::lz("aaaa", true).size());
}

TEST_CASE("collage tm") {
  const auto r = cli({"collage", "tm", "--n", "4"}).report()["records"][0];
  CHECK(r["size"] == 9);
  CHECK(r["rules"].size() == 9);
  CHECK(r["word"] == oracle::thue_morse(4));
  CHECK(r["matches_thue_morse"] == true);
  CHECK(r["valid"] == true);
  CHECK(cli({"collage", "tm", "--n", "0"}).code == 1);
}

TEST_CASE("family tm") {
  const auto r = cli({"family", "tm", "--n", "4"}).report()["records"][0];
  CHECK(positions(r["attractor"]) == std::vector<std::size_t>{3, 6, 9, 12});
  CHECK(r["valid"] == true);
  CHECK(r["from_previous"] == true);
  CHECK(r["crossing_lemma"] == true);
  const auto sw = cli({"family", "tm", "--sweep", "3:6"}).report()["records"];
  CHECK(sw.size() == 4);
  CHECK(sw[3]["n"] == 6);
  const auto e = cli({"family", "tm", "--n", "3", "--exact"}).report()["records"][0]["gamma"];
  CHECK(e["exact"] == true);
  CHECK(e["value"] == 3);
  CHECK(e["rejected_below"] == 28);
  CHECK(cli({"family", "tm"}).code == 1);
  CHECK(cli({"family", "tm", "--n", "4", "--sweep", "3:5"}).code == 1);
  CHECK(cli({"family", "tm", "--n", "2"}).code == 1);
}

TEST_CASE("family sturmian") {
  const auto r = cli({"family", "sturmian", "--directive", "1,2,1,2", "--exact"}).report()["records"][0];
  CHECK(r["word"] == oracle::standard_word({1, 2, 1, 2}));
  CHECK(r["valid"] == true);
  CHECK(r["consecutive"] == true);
  CHECK(r["exact"]["gamma_star"] == 2);
  const auto sw = cli({"family", "sturmian", "--sweep", "2:12"}).report()["records"];
  std::size_t want = 0;
  for (const auto& s : oracle::standard_words(12)) want += s.size() >= 2;
  CHECK(sw.size() == want);
  // a^k b and b^k a: unary pi, neither candidate set, the last two positions
  bool saw_fallback = false;
  for (const auto& rec : sw) {
    CHECK(rec["valid"] == true);
    if (rec["chosen"] == "fallback") {
      saw_fallback = true;
      CHECK(rec["degenerate"] == true);
      CHECK(rec["gamma1"]["valid"] == false);
      CHECK(rec["gamma2"].is_null());
    }
  }
  CHECK(saw_fallback);
  CHECK(cli({"family", "sturmian", "--directive", "0"}).code == 1);
  CHECK(cli({"family", "sturmian"}).code == 1);
}

TEST_CASE("family epistandard") {
  const auto r = cli({"family", "epistandard", "--directive", "adca", "--append", "b", "--exact"})
                     .report()["records"][0];
  CHECK(r["word"] == "adacadaadacadab");
  CHECK(positions(r["attractor"]) == std::vector<std::size_t>{2, 4, 8, 15});
  CHECK(r["exact"]["gamma_star"] == 4);
  CHECK(r["lyndon_conjugate"] == "aadacadabadacad");
  const auto t = cli({"family", "epistandard", "--family", "i", "--k", "4", "--m", "4"}).report();
  CHECK(t["records"][0]["word"] == "aaaadaaaacaaaadaaaab");
  const auto sw = cli({"family", "epistandard", "--family", "iii", "--sweep", "3:5"}).report();
  CHECK(sw["records"].size() == 3);
  for (const auto& rec : sw["records"]) CHECK(rec["attractor"].size() == rec["sigma"]);
}

TEST_CASE("family debruijn") {
  const auto r = cli({"family", "debruijn", "--sigma", "2", "--k", "4", "--exact"}).report()["records"][0];
  CHECK(r["length"] == 19);
  CHECK(r["exact"]["gamma_star"] == 4);
  CHECK(r["lz_above_lower"] == true);
  CHECK(r["exact"]["gaps_within_k"] == true);
  CHECK(r["upper"].is_null());
  const auto sw = cli({"family", "debruijn", "--sweep", "2:8"}).report()["records"];
  CHECK(sw.size() == 7);
  for (const auto& rec : sw) CHECK(rec["lz_above_lower"] == true);
}

TEST_CASE("deterministic output, independent of --jobs") {
  const std::vector<std::string> args{"attr", "min", "--gen", "tm:4", "--gen", "debruijn:2:3",
                                      "-w", "adcbaadcbadc", "-w", "babbaaa"};
  const auto a = cli(args), b = cli(args);
  CHECK(a.out == b.out);
  auto par = args;
  par.insert(par.begin(), {"--jobs", "3"});
  auto c = cli(par).report();
  auto d = a.report();
  // the command echo differs, nothing else
  c.erase("command");
  d.erase("command");
  CHECK(c == d);
  const auto t = cli({"--timings", "attr", "min", "-w", "abab"}).report();
  CHECK(t["records"][0].contains("elapsed_ms"));
  CHECK_FALSE(d["records"][0].contains("elapsed_ms"));
}

TEST_CASE("text rendering") {
  const auto o = cli({"--text", "attr", "verify", "-w", "adcbaadcbadc", "-g", "1,2,3,4"});
  CHECK(o.code == 2);
  CHECK(o.out.find("valid: false") != std::string::npos);
  CHECK(o.out.find("factor: aa") != std::string::npos);
  CHECK(o.out.find("positions: 1,2,3,4") != std::string::npos);
  CHECK(cli({"--text", "--json", "attr", "verify", "-w", "a", "-g", "1"}).code == 1);
}

TEST_CASE("help and usage errors") {
  const auto h = cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("attr") != std::string::npos);
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"attr", "verify", "-w", "ab", "-g", "1,2", "--bogus"}).code == 1);
}

TEST_CASE("suite") {
  const auto o = cli({"suite"});
  CHECK(o.code == 0);
  const auto r = o.report();
  CHECK(r["summary"]["failed"] == 0);
  CHECK(r["summary"]["reported"] >= 1);
  for (const auto& c : r["records"]) CHECK_MESSAGE(c["status"] != "fail", c.dump());

  const auto m = cli({"suite", "--mutate"});
  CHECK(m.code == 1);
  CHECK(m.report()["summary"]["failed"] >= 1);
  CHECK(m.err.find("adcbaadcbadc/gamma-prime") != std::string::npos);

  // same content in both renderings
  const auto t = cli({"--text", "suite"});
  CHECK(t.code == 0);
  for (const auto& c : r["records"]) {
    CHECK(t.out.find(c["anchor"].get<std::string>()) != std::string::npos);
  }
  CHECK(t.out.find("passed: " + std::to_string(r["summary"]["passed"].get<int>())) !=
        std::string::npos);
}
