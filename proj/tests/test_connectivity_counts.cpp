#include <doctest.h>

#include "degseq/connectivity_counts.hpp"
#include "degseq/degree_counts.hpp"
#include "degseq/oracle.hpp"

using namespace degseq;

namespace {

DnSeries known(std::int64_t upto) {
  DnSeries s;
  extend_series(s, upto);
  return s;
}

} // namespace

TEST_CASE("dc and dd: examples") {
  CHECK(count_dc_direct(3) == 2);
  CHECK(count_dc_direct(4) == 6);
  CHECK(count_dc_direct(5) == 19);
  CHECK(count_dd(2) == 0);
  CHECK(count_dd(4) == 1);
  CHECK(count_dd(5) == 1);
  CHECK(count_dc_indirect(4, 7) == 6);
  CHECK(count_dc_indirect(5, 20) == 19);
  CHECK(count_dc_indirect(2, 1) == 1);
}

TEST_CASE("connectivity routes agree") {
  const DnSeries s = known(22);
  for (std::int64_t n = 2; n <= 22; ++n) {
    const auto a = connectivity(n, s.d(n), ConnectivityMethod::direct);
    const auto b = connectivity(n, s.d(n), ConnectivityMethod::indirect);
    CHECK(a.dc == b.dc);
    CHECK(a.dd == b.dd);
    CHECK(a.dc + a.dd == s.d(n));
  }
}

TEST_CASE("s and b: examples") {
  const DnSeries s = known(6);
  CHECK(count_s(3) == 0);
  CHECK(count_s(4) == 2);
  CHECK(count_s(5) == 6);
  CHECK(count_b(3, s) == 1);
  CHECK(count_b(4, s) == 2);
  CHECK(count_b(5, s) == 4);
}

TEST_CASE("db for n = 5") {
  const DnSeries s = known(5);
  const BiconnReport r = count_db(5, s, s.d(5));
  CHECK(r.db == 9);
  CHECK(r.d2_minus_b == 1);
  CHECK(r.d2 == 10);
  CHECK(r.c == 10);
  CHECK(r.s == 6);
  CHECK(r.b == 4);
  CHECK_THROWS_AS(count_db(4, s, s.d(4)), PreconditionError);
  CHECK_THROWS_AS(count_db(5, DnSeries({0, 1}), 20), MissingPriorError);
}

TEST_CASE("biconnected counts match the oracle") {
  const DnSeries s = known(11);
  for (int n = 5; n <= 11; ++n) {
    const CountReport o = oracle_counts(n);
    const BiconnReport r = count_db(n, s, s.d(n));
    CHECK(r.db == *o.db);
    CHECK(r.d2_minus_b == *o.d2_minus_b);
    CHECK(r.s == o.s);
    CHECK(r.b == o.b);
    CHECK(r.c == o.c);
    CHECK(r.d2 == o.d2);
  }
}

TEST_CASE("d2_minus_b: two evaluations agree") {
  for (std::int64_t n = 0; n <= 200; ++n)
    CHECK(d2_minus_b_direct(n) == d2_minus_b_prefix(n));
}

TEST_CASE("dc, dd, s match the oracle for n <= 10") {
  for (int n = 2; n <= 10; ++n) {
    const CountReport o = oracle_counts(n);
    CHECK(count_dc_direct(n) == o.dc);
    CHECK(count_dd(n) == o.dd);
    CHECK(count_s(n) == o.s);
  }
}
