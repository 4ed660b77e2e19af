#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "degseq/oracle.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "degseq");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = degseq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / "degseq_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

struct NoCacheEnv {
  NoCacheEnv() { unsetenv(degseq::cli::kCacheEnv); }
};

} // namespace

TEST_CASE("count rows") {
  NoCacheEnv guard;
  auto r = cli({"count", "--quantity", "d", "--n", "4", "--algorithm", "basic"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,quantity,value\n4,d,7\n");

  r = cli({"count", "--quantity", "db", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n5,db,9\n") != std::string::npos);

  r = cli({"count", "--quantity", "d0", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n1,d0,1\n") != std::string::npos);

  r = cli({"count", "--quantity", "db", "--range", "3..4", "--format", "bfile"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 1\n4 3\n");
}

TEST_CASE("series b-files") {
  NoCacheEnv guard;
  CHECK(cli({"series", "--quantity", "d", "--range", "2..5"}).out == "2 1\n3 2\n4 7\n5 20\n");
  CHECK(cli({"series", "--quantity", "d0", "--range", "1..4"}).out == "1 1\n2 2\n3 4\n4 11\n");
  CHECK(cli({"series", "--quantity", "dc", "--range", "2..5"}).out == "2 1\n3 2\n4 6\n5 19\n");
}

TEST_CASE("every quantity over a range matches a direct count") {
  NoCacheEnv guard;
  for (const char *q : {"d", "d0", "h", "l", "dc", "dd", "s", "b", "c", "d2", "db"}) {
    const auto r = cli({"series", "--quantity", q, "--range", "3..9", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::string want = "n,quantity,value\n";
    for (int n = 3; n <= 9; ++n) {
      const degseq::CountReport o = degseq::oracle_counts(n);
      const std::map<std::string, degseq::Count> by_name = {
          {"d", o.d},   {"d0", o.d0}, {"h", o.h}, {"l", o.l},   {"dc", o.dc}, {"dd", o.dd},
          {"s", o.s},   {"b", o.b},   {"c", o.c}, {"d2", o.d2}, {"db", *o.db}};
      want += std::to_string(n) + "," + q + "," + by_name.at(q).get_str() + "\n";
    }
    CHECK(r.out == want);
  }
}

TEST_CASE("cache: improved routes and the fallback") {
  NoCacheEnv guard;
  const fs::path cache = scratch("d.b");

  // Explicit improved with nothing cached below n.
  auto r = cli({"count", "--quantity", "d", "--n", "9", "--algorithm", "improved", "--cache",
                cache.string()});
  CHECK(r.code == 3);

  // The default route falls back with a warning.
  r = cli({"count", "--quantity", "d", "--n", "9", "--cache", cache.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(r.out.find("9,d,3148") != std::string::npos);

  r = cli({"count", "--quantity", "dc", "--n", "9", "--algorithm", "indirect", "--cache",
           cache.string()});
  CHECK(r.code == 3);

  // A series run fills the cache; improved and indirect then work.
  r = cli({"series", "--quantity", "d", "--range", "1..12", "--cache", cache.string()});
  CHECK(r.code == 0);
  std::ifstream in(cache);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == r.out);

  r = cli({"count", "--quantity", "d", "--n", "13", "--algorithm", "improved", "--cache",
           cache.string()});
  CHECK(r.code == 0);
  const auto basic = cli({"count", "--quantity", "d", "--n", "13", "--algorithm", "basic"});
  CHECK(r.out == basic.out);
  r = cli({"count", "--quantity", "dc", "--n", "12", "--algorithm", "indirect", "--cache",
           cache.string()});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
}

TEST_CASE("cache path from the environment, flag wins") {
  const fs::path env_cache = scratch("env.b");
  const fs::path flag_cache = scratch("flag.b");
  setenv(degseq::cli::kCacheEnv, env_cache.c_str(), 1);
  CHECK(cli({"series", "--quantity", "d", "--range", "2..6"}).code == 0);
  CHECK(fs::exists(env_cache));
  CHECK(cli({"series", "--quantity", "d", "--range", "2..4", "--cache", flag_cache.string()}).code ==
        0);
  CHECK(fs::exists(flag_cache));
  unsetenv(degseq::cli::kCacheEnv);
}

TEST_CASE("re-ingested b-file reproduces downstream results") {
  NoCacheEnv guard;
  const fs::path cache = scratch("roundtrip.b");
  const auto fresh = cli({"series", "--quantity", "db", "--range", "5..14"});
  cli({"series", "--quantity", "d", "--range", "1..14", "--cache", cache.string()});
  const auto cached = cli({"series", "--quantity", "db", "--range", "5..14", "--cache", cache.string()});
  CHECK(fresh.out == cached.out);
}

TEST_CASE("verify") {
  NoCacheEnv guard;
  auto r = cli({"verify", "--max-n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = cli({"verify", "--max-n", "20"});
  CHECK(r.code == 1);
}

TEST_CASE("profiles and ratios") {
  NoCacheEnv guard;
  auto r = cli({"profile", "--n", "4", "--format", "csv"});
  CHECK(r.out == "N,count\n4,1\n6,2\n8,2\n10,1\n12,1\n");
  r = cli({"profile", "--n", "3", "--family", "L", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line))
    CHECK(line.substr(line.find(',')) == ",0");

  r = cli({"profile", "--ratio", "--range", "3..5", "--format", "csv"});
  CHECK(r.out == "n,ratio\n3,2.000000\n4,3.500000\n5,2.857142\n");
}

TEST_CASE("exit codes") {
  NoCacheEnv guard;
  CHECK(cli({}).code == 1);
  CHECK(cli({"count", "--quantity", "zz", "--n", "4"}).code == 1);
  CHECK(cli({"count", "--quantity", "d"}).code == 1);
  CHECK(cli({"count", "--quantity", "h", "--n", "1"}).code == 1);
  CHECK(cli({"count", "--quantity", "d", "--range", "5..3"}).code == 1);
  CHECK(cli({"count", "--quantity", "s", "--n", "4", "--algorithm", "basic"}).code == 1);
  CHECK(cli({"count", "--quantity", "d", "--n", "40", "--algorithm", "basic", "--memory-cap",
             "1000"})
            .code == 2);
  CHECK(cli({"count", "--help"}).code == 0);
}
