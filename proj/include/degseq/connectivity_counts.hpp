#pragma once

#include <cstdint>

#include "degseq/count.hpp"
#include "degseq/degree_counts.hpp"
#include "degseq/series.hpp"

namespace degseq {

enum class ConnectivityMethod { direct, indirect };

// dc + dd = |D(n)|.
struct ConnectivityReport {
  std::int64_t n = 0;
  Count dc;
  Count dd;
  ConnectivityMethod method = ConnectivityMethod::indirect;
};

// c = b + s, d2 = |D(n)| - c, db = d2 - d2_minus_b.
struct BiconnReport {
  std::int64_t n = 0;
  Count s;
  Count b;
  Count c;
  Count d2;
  Count d2_minus_b;
  Count db;
};

// Potentially connected: degree sum at least 2(n-1).
Count count_dc_direct(std::int64_t n, const CountOptions &opt = {});
Count dc_from_table(const PartitionTable &table, std::int64_t n);

// Forcibly disconnected: degree sum below 2(n-1).
Count count_dd(std::int64_t n, const CountOptions &opt = {});
TableParams dd_table_params(std::int64_t n, const CountOptions &opt = {});

Count count_dc_indirect(std::int64_t n, const Count &d_n, const CountOptions &opt = {});

ConnectivityReport connectivity(std::int64_t n, const Count &d_n, ConnectivityMethod method,
                                const CountOptions &opt = {});

// Largest part exactly n-2. Defined for n >= 2 (empty when n = 2).
Count count_s(std::int64_t n, const CountOptions &opt = {});
Count s_from_table(const PartitionTable &table, std::int64_t n);

// Largest part n-1 and smallest part 1: |D_0(n-2)|, for n >= 2.
Count count_b(std::int64_t n, const DnSeries &prior);

// Degree sequences with d_n >= 2 that fail 2n - 4 + 2 d_1 <= sum, as a sum of
// partition numbers over d_1 = 4..n-1. Two independent evaluations.
Count d2_minus_b_direct(std::int64_t n);
Count d2_minus_b_prefix(std::int64_t n);

// Potentially biconnected counts for n >= 5.
BiconnReport count_db(std::int64_t n, const DnSeries &prior, const Count &d_n,
                      const CountOptions &opt = {});
BiconnReport biconn_from_s(std::int64_t n, const DnSeries &prior, const Count &d_n, Count s);

} // namespace degseq
