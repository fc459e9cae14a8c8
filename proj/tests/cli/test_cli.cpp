#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NTHEORY_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, PowerSieve) {
  const auto r = run("prime sieve --op \"x^y\" --domain n1 --range 1..28 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["result"]["primes"],
            nlohmann::json({2, 3, 5, 6, 7, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 23, 24, 26, 28}));
  EXPECT_EQ(j["result"]["units"], nlohmann::json({1}));
  EXPECT_FALSE(j["result"]["notes"].empty());
  EXPECT_EQ(j["result"]["entries"][0]["unit_positions"], nlohmann::json({2}));
  EXPECT_EQ(j["manifest"]["command"], "prime sieve");
  EXPECT_EQ(j["manifest"]["op"], "x^y");
  EXPECT_TRUE(j["manifest"].contains("bounds"));
  EXPECT_TRUE(j["manifest"].contains("version"));
}

TEST(Cli, GoldbachVariant) {
  const auto r = run("dioph goldbach --base-op \"x^2+y^2\" --range 4..1000");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json_of(r)["result"]["failures"].empty());
}

TEST(Cli, HyperEval) {
  const auto r = run("hyper eval --n 4 --level 3 --order \"<-\" --x 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["result"]["value"], 256);
  EXPECT_EQ(run("hyper eval --n 4 --level 3 --order \"<-\" --x 2 --format text").out, "256\n");
}

TEST(Cli, DeterministicAcrossJobs) {
  for (const char* args : {"prime sieve --op \"x^2+y^2\" --range 1..400", "dioph goldbach --range 4..3000",
                           "dioph cover --op \"x^2+y^2\" --g-op \"x^2\" --range 1..200"}) {
    auto a = json_of(run(std::string(args) + " --jobs 1"));
    auto b = json_of(run(std::string(args) + " --jobs 3"));
    a["manifest"].erase("timing");
    b["manifest"].erase("timing");
    EXPECT_EQ(a.dump(), b.dump()) << args;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("prime sieve --op \"x+\" --range 1..5").code, 2);
  EXPECT_EQ(run("prime sieve --op \"x*y\" --range 5..1").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("hyper eval --n 6 --level 3 --x 3").code, 3);
  EXPECT_EQ(run("hyper eval --n 5 --level 3 --x 2 --max-bits 1000").code, 3);
  EXPECT_EQ(run("dioph goldbach --base-op \"x*y\" --range 4..100").code, 1);
  EXPECT_EQ(run("dioph cover --op \"x^2+y^2\" --g-op \"x^2\" --range 1..100").code, 1);
  EXPECT_EQ(run("mod inverse-check --g-op \"x+y\" --g-inv \"x+y\"").code, 1);
  EXPECT_EQ(run("lseries eval --s 1").code, 2);
  EXPECT_EQ(run("mod fermat-kxy --k 5 --a 2 --p 5").code, 2);
}

TEST(Cli, SetFileDomain) {
  const auto path = std::filesystem::temp_directory_path() / "ntheory_cli_set.txt";
  {
    std::ofstream f(path);
    f << "1\n2\n3\n4\n6\n9\n";
  }
  const auto r = run("prime sieve --op \"x*y\" --domain set:" + path.string() + " --range 1..9");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["result"]["entries"].size(), 6u);
  EXPECT_EQ(j["result"]["primes"], nlohmann::json({2, 3}));
  {
    std::ofstream f(path);
    f << "3\n1\n";
  }
  EXPECT_EQ(run("prime sieve --op \"x*y\" --domain set:" + path.string() + " --range 1..9").code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, CsvAndOutFile) {
  const auto r = run("prime sieve --op \"x*y\" --range 1..10 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,verdict,witness,certification");
  const auto path = std::filesystem::temp_directory_path() / "ntheory_cli_out.json";
  ASSERT_EQ(run("factor usual --n 360 --out " + path.string()).code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["result"]["factors"], nlohmann::json({{2, 3}, {3, 2}, {5, 1}}));
  std::filesystem::remove(path);
}

TEST(Cli, OpRoundTripCanonicalizes) {
  const auto j = json_of(run("prime classify --op \"((x)*(y))-(3)\" --domain z --n 16"));
  EXPECT_EQ(j["manifest"]["op"], "x*y-3");
  EXPECT_EQ(j["result"]["verdict"], "prime");
  const auto d = json_of(run("prime classify --op \"x*y-3\" --domain z --n 16 --semantics deep:2"));
  EXPECT_EQ(d["result"]["verdict"], "composite");
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(json_of(run("hyper convert --formula \"x o2^1 x o2^0 x o2^5 y o2^4 z\""))["result"]["tree"],
            "((x o2 (x o2 x)) o2 (y o2 z))");
  EXPECT_EQ(run("hyper distrib --level 3 --n 3 --x 2 --y 2").code, 0);
  EXPECT_EQ(run("hyper zero --range 1..20").code, 0);
  EXPECT_EQ(json_of(run("factor hyper3 --n 2176782336"))["result"]["terms"],
            nlohmann::json::parse(R"([{"q":6,"b":2},{"q":2,"b":1}])"));
  EXPECT_EQ(run("factor verify --range 2..512 --unique").code, 0);
  EXPECT_EQ(run("factor exp --range 1..500").code, 0);
  EXPECT_EQ(json_of(run("prime set --op \"x^2+y^2\" --range 1..27"))["result"]["primes"],
            nlohmann::json({1, 3, 4, 6, 7, 9, 11, 12, 14, 15, 16, 19, 21, 22, 23, 24, 27}));
  const auto sol = json_of(run("dioph solve --op \"x+y\" --g-op \"x\" --box 1..3"));
  EXPECT_EQ(sol["result"]["solutions"].size(), 3u);
  const auto inter = json_of(run("dioph intersect --op \"x^2+y^2\" --g-op \"x^2\" --range 1..30"));
  EXPECT_EQ(inter["result"]["intersection"][0]["value"], 25);
  EXPECT_EQ(json_of(run("dioph foursquare --range 7..7"))["result"]["witness"], nlohmann::json({1, 1, 1, 2}));
  EXPECT_EQ(json_of(run("lseries coeffs --cutoff 50"))["result"]["entries_not_one"], 0);
  EXPECT_EQ(json_of(run("lseries eval --cutoff 300 --s 2"))["result"]["lseries_equals_zeta"], true);
  EXPECT_EQ(json_of(run("lseries tac --cutoff 12"))["result"]["count"], 12);
  const auto c = json_of(run("mod congruent --op \"k*x*y\" --param k=3 --c 7776 --b 6 --m 5"));
  EXPECT_EQ(c["result"]["alpha"], 518);
  EXPECT_EQ(json_of(run("mod fold --op \"2*x+3*y\" --a 2 --p 5"))["result"]["value"], 322);
  EXPECT_EQ(run("mod fermat-kxy --k 3 --a 2 --p 5").code, 0);
  EXPECT_EQ(run("mod fermat-linear --u 2 --v 3 --h 1 --k 2 --p 5").code, 0);
  EXPECT_EQ(run("mod fermat-kxy --kmax 5 --amax 5 --pmax 50").code, 0);
  EXPECT_EQ(run("mod inverse-check").code, 0);
}

TEST(Cli, TamperedVerifyFails) {
  const auto r = run("verify all --profile quick --tamper");
  ASSERT_EQ(r.code, 1);
  const auto j = json_of(r);
  bool nine_failed = false;
  for (const auto& c : j["result"]["criteria"]) {
    if (c["id"] == 9) nine_failed = !c["passed"].get<bool>();
  }
  EXPECT_TRUE(nine_failed);
}

}  // namespace
