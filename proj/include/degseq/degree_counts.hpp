#pragma once

#include <cstdint>
#include <map>

#include "degseq/count.hpp"
#include "degseq/partition_table.hpp"
#include "degseq/series.hpp"

namespace degseq {

struct CountOptions {
  std::uint64_t memory_cap_bytes = kDefaultMemoryCap;
};

// Degree-sum profiles of length-n degree sequences.
//   G: all of D(n), sums in I_e(n)   = even N in [n, n(n-1)]
//   L: largest part < n-1, J_e(n)    = even N in [n, n(n-2)]
//   H: largest part = n-1, I'_e(n)   = even N in [2(n-1), n(n-1)]
enum class Family { G, L, H };

struct SumProfile {
  std::int64_t n = 0;
  Family family = Family::G;
  std::map<std::int64_t, Count> entries;

  Count total() const;
};

// Even integers in [lo, hi] for each family, in increasing order.
std::int64_t profile_first_sum(std::int64_t n, Family family);
std::int64_t profile_last_sum(std::int64_t n, Family family);

// Table dimensions used by the basic route: every |G'(N,k,n)| with N in I_e(n).
TableParams basic_table_params(std::int64_t n, const CountOptions &opt = {});
// Dimensions for sums up to n(n-1)/2 and largest part at most n-2.
TableParams lower_half_table_params(std::int64_t n, const CountOptions &opt = {});

// |G'(N,n)| summed over largest parts 1..min(max_largest, N-n+1).
Count graphical_with_sum(const PartitionTable &table, std::int64_t n, std::int64_t N,
                         std::int64_t max_largest);

Count count_d_basic(std::int64_t n, const CountOptions &opt = {});
Count count_d_improved(std::int64_t n, const DnSeries &prior, const CountOptions &opt = {});
Count count_d0(std::int64_t n, const DnSeries &prior);
Count count_h(std::int64_t n, const DnSeries &prior);
Count count_l(std::int64_t n, const CountOptions &opt = {});

// L and H are computed on the lower half of their index set and mirrored;
// G is computed over its full range.
SumProfile profile(std::int64_t n, Family family, const CountOptions &opt = {});
// Every entry computed from the table, no mirroring.
SumProfile profile_direct(std::int64_t n, Family family, const CountOptions &opt = {});
SumProfile profile_from_table(const PartitionTable &table, std::int64_t n, Family family);

// k -> number of length-n degree sequences with largest term k, k = 1..n-1.
std::map<std::int64_t, Count> count_by_largest(std::int64_t n, const CountOptions &opt = {});
std::map<std::int64_t, Count> by_largest_from_table(const PartitionTable &table, std::int64_t n);

// Extends `series` with the improved route until it covers n.
void extend_series(DnSeries &series, std::int64_t n, const CountOptions &opt = {});

} // namespace degseq
