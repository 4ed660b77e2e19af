#include "degseq/connectivity_counts.hpp"

#include <algorithm>
#include <string>

namespace degseq {

namespace {

void require_length(std::int64_t n, std::int64_t min, const char *what) {
  if (n < min)
    throw PreconditionError(std::string(what) + " needs n >= " + std::to_string(min) + ", got " +
                            std::to_string(n));
}

} // namespace

Count dc_from_table(const PartitionTable &table, std::int64_t n) {
  Count total = 0;
  for (std::int64_t N = 2 * (n - 1); N <= n * (n - 1); N += 2)
    total += graphical_with_sum(table, n, N, n - 1);
  return total;
}

Count count_dc_direct(std::int64_t n, const CountOptions &opt) {
  require_length(n, 2, "count_dc_direct");
  return dc_from_table(PartitionTable::build(basic_table_params(n, opt)), n);
}

TableParams dd_table_params(std::int64_t n, const CountOptions &opt) {
  // Sums below 2(n-1) leave at most n-4 cells after the first hook, and every
  // queried shift n-k-1 exceeds that, so only saturated cells are read.
  TableParams p;
  p.max_sum = std::max<std::int64_t>(0, n - 4);
  p.max_part = std::max<std::int64_t>(0, n - 4);
  p.target_parts = std::max<std::int64_t>(0, n - 1);
  p.shifts = ShiftRange::saturated;
  p.memory_cap_bytes = opt.memory_cap_bytes;
  return p;
}

Count count_dd(std::int64_t n, const CountOptions &opt) {
  require_length(n, 2, "count_dd");
  const auto table = PartitionTable::build(dd_table_params(n, opt));
  Count total = 0;
  for (std::int64_t N = n + (n & 1); N < 2 * (n - 1); N += 2)
    total += graphical_with_sum(table, n, N, n - 1);
  return total;
}

Count count_dc_indirect(std::int64_t n, const Count &d_n, const CountOptions &opt) {
  return d_n - count_dd(n, opt);
}

ConnectivityReport connectivity(std::int64_t n, const Count &d_n, ConnectivityMethod method,
                                const CountOptions &opt) {
  ConnectivityReport r;
  r.n = n;
  r.method = method;
  if (method == ConnectivityMethod::direct) {
    r.dc = count_dc_direct(n, opt);
    r.dd = d_n - r.dc;
  } else {
    r.dd = count_dd(n, opt);
    r.dc = d_n - r.dd;
  }
  return r;
}

Count s_from_table(const PartitionTable &table, std::int64_t n) {
  Count total = 0;
  const std::int64_t lo = 2 * n - 3;
  for (std::int64_t N = lo + (lo & 1); N <= n * (n - 2); N += 2)
    total += table.g_prime(N, n - 2, n);
  return total;
}

Count count_s(std::int64_t n, const CountOptions &opt) {
  require_length(n, 2, "count_s");
  TableParams p;
  p.max_sum = std::max<std::int64_t>(0, n * n - 4 * n + 3);
  p.max_part = std::max<std::int64_t>(0, n - 3);
  p.target_parts = n - 1;
  p.memory_cap_bytes = opt.memory_cap_bytes;
  return s_from_table(PartitionTable::build(p), n);
}

Count count_b(std::int64_t n, const DnSeries &prior) {
  require_length(n, 2, "count_b");
  return prior.d0(n - 2);
}

Count d2_minus_b_direct(std::int64_t n) {
  const auto p = partition_numbers(std::max<std::int64_t>(0, n - 4));
  Count total = 0;
  for (std::int64_t d1 = 4; d1 <= n - 1; ++d1) {
    const std::int64_t k = d1 / 2;
    if (d1 % 2 == 0) {
      for (std::int64_t j = 0; j <= 2 * k - 4; j += 2)
        total += p[static_cast<std::size_t>(j)];
    } else {
      for (std::int64_t j = 1; j <= 2 * k - 3; j += 2)
        total += p[static_cast<std::size_t>(j)];
    }
  }
  return total;
}

Count d2_minus_b_prefix(std::int64_t n) {
  // even_sum[t] = p(0) + p(2) + ... + p(2t), odd_sum[t] = p(1) + ... + p(2t+1).
  const std::int64_t top = std::max<std::int64_t>(1, n);
  const auto p = partition_numbers(top);
  std::vector<Count> even_sum, odd_sum;
  Count e = 0, o = 0;
  for (std::int64_t t = 0; 2 * t + 1 <= top; ++t) {
    e += p[static_cast<std::size_t>(2 * t)];
    o += p[static_cast<std::size_t>(2 * t + 1)];
    even_sum.push_back(e);
    odd_sum.push_back(o);
  }
  Count total = 0;
  // d1 = 2k contributes even_sum[k-2]; d1 = 2k+1 contributes odd_sum[k-2].
  for (std::int64_t d1 = 4; d1 <= n - 1; ++d1) {
    const auto t = static_cast<std::size_t>(d1 / 2 - 2);
    total += (d1 % 2 == 0) ? even_sum[t] : odd_sum[t];
  }
  return total;
}

BiconnReport biconn_from_s(std::int64_t n, const DnSeries &prior, const Count &d_n, Count s) {
  require_length(n, 5, "count_db");
  BiconnReport r;
  r.n = n;
  r.s = std::move(s);
  r.b = count_b(n, prior);
  r.c = r.b + r.s;
  r.d2 = d_n - r.c;
  r.d2_minus_b = d2_minus_b_direct(n);
  r.db = r.d2 - r.d2_minus_b;
  return r;
}

BiconnReport count_db(std::int64_t n, const DnSeries &prior, const Count &d_n,
                      const CountOptions &opt) {
  require_length(n, 5, "count_db");
  if (prior.n_max() < n - 2)
    throw MissingPriorError("count_db needs |D(i)| for i <= " + std::to_string(n - 2));
  return biconn_from_s(n, prior, d_n, count_s(n, opt));
}

} // namespace degseq
