#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "degseq/degree_counts.hpp"
#include "degseq/series.hpp"

using namespace degseq;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / "degseq_series_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

} // namespace

TEST_CASE("DnSeries basics") {
  DnSeries s({0, 1, 2, 7});
  CHECK(s.n_max() == 4);
  CHECK(s.covers(4));
  CHECK_FALSE(s.covers(5));
  CHECK_FALSE(s.covers(0));
  CHECK(s.d(3) == 2);
  CHECK(s.d0(0) == 1);
  CHECK(s.d0(1) == 1);
  CHECK(s.d0(4) == 11);
  CHECK_THROWS_AS(s.d(5), MissingPriorError);
  CHECK_THROWS_AS(s.d0(5), MissingPriorError);
  CHECK_THROWS(DnSeries({1}));
  CHECK_THROWS(DnSeries({0, 2}));
}

TEST_CASE("b-file parsing") {
  std::istringstream in("# comment\n\n1 0\n2 1\n3 2\n");
  const auto rows = read_bfile(in);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].n == 3);
  CHECK(rows[2].value == 2);

  std::istringstream bad_order("2 1\n1 0\n");
  CHECK_THROWS(read_bfile(bad_order));
  std::istringstream bad_value("1 x\n");
  CHECK_THROWS(read_bfile(bad_value));
  std::istringstream negative("1 -4\n");
  CHECK_THROWS(read_bfile(negative));
}

TEST_CASE("b-file output is bit-exact") {
  std::ostringstream out;
  write_bfile(out, {{2, 1}, {3, 2}, {4, 7}, {5, 20}});
  CHECK(out.str() == "2 1\n3 2\n4 7\n5 20\n");
}

TEST_CASE("save and load round trip") {
  DnSeries s;
  extend_series(s, 25);
  const fs::path p = scratch("d.b");
  save_series(p, s);
  const DnSeries back = load_series(p);
  CHECK(back.values() == s.values());

  // Extending from the reloaded prefix reproduces the full run.
  DnSeries prefix(std::vector<Count>(s.values().begin(), s.values().begin() + 12));
  save_series(p, prefix);
  DnSeries resumed = load_series(p);
  extend_series(resumed, 25);
  CHECK(resumed.values() == s.values());
}

TEST_CASE("load_series: missing file and gaps") {
  CHECK(load_series(scratch("absent.b")).n_max() == 0);
  const fs::path p = scratch("gap.b");
  std::ofstream(p) << "1 0\n3 2\n";
  CHECK_THROWS(load_series(p));
}
