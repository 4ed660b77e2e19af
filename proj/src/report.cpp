#include "degseq/report.hpp"

namespace degseq {

CountReport dp_report(std::int64_t n, const DnSeries &series, const CountOptions &opt) {
  if (n < 2)
    throw PreconditionError("dp_report needs n >= 2");
  if (!series.covers(n))
    throw MissingPriorError("dp_report needs |D(i)| for i <= " + std::to_string(n));

  const auto table = PartitionTable::build(basic_table_params(n, opt));
  CountReport r;
  r.n = n;
  r.profile_g = profile_from_table(table, n, Family::G);
  r.d = r.profile_g.total();
  r.by_largest = by_largest_from_table(table, n);
  r.l = profile_from_table(table, n, Family::L).total();
  r.s = s_from_table(table, n);

  r.d0 = count_d0(n, series);
  r.h = count_h(n, series);
  r.dd = count_dd(n, opt);
  r.dc = series.d(n) - r.dd;
  r.b = count_b(n, series);
  r.c = r.b + r.s;
  r.d2 = r.d - r.c;
  if (n >= 5) {
    const BiconnReport bi = biconn_from_s(n, series, r.d, r.s);
    r.db = bi.db;
    r.d2_minus_b = bi.d2_minus_b;
  }
  return r;
}

std::vector<FieldCheck> compare_reports(const CountReport &expected, const CountReport &actual) {
  std::vector<FieldCheck> out;
  auto add = [&](const char *name, const Count &e, const Count &a) {
    out.push_back({name, e, a, e == a});
  };
  add("d", expected.d, actual.d);
  add("d0", expected.d0, actual.d0);
  add("h", expected.h, actual.h);
  add("l", expected.l, actual.l);
  add("dc", expected.dc, actual.dc);
  add("dd", expected.dd, actual.dd);
  add("s", expected.s, actual.s);
  add("b", expected.b, actual.b);
  add("c", expected.c, actual.c);
  add("d2", expected.d2, actual.d2);
  if (expected.db && actual.db)
    add("db", *expected.db, *actual.db);
  if (expected.d2_minus_b && actual.d2_minus_b)
    add("d2_minus_b", *expected.d2_minus_b, *actual.d2_minus_b);
  bool profile_ok = expected.profile_g.entries == actual.profile_g.entries;
  out.push_back({"profile_g", expected.profile_g.total(), actual.profile_g.total(), profile_ok});
  Count e_sum = 0, a_sum = 0;
  for (const auto &[k, v] : expected.by_largest)
    e_sum += v;
  for (const auto &[k, v] : actual.by_largest)
    a_sum += v;
  out.push_back({"by_largest", e_sum, a_sum, expected.by_largest == actual.by_largest});
  return out;
}

} // namespace degseq
