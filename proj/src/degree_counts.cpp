#include "degseq/degree_counts.hpp"

#include <algorithm>
#include <string>

namespace degseq {

namespace {

void require_length(std::int64_t n, std::int64_t min, const char *what) {
  if (n < min)
    throw PreconditionError(std::string(what) + " needs n >= " + std::to_string(min) + ", got " +
                            std::to_string(n));
}

TableParams table_params(std::int64_t max_sum, std::int64_t max_part, std::int64_t parts,
                         const CountOptions &opt) {
  TableParams p;
  p.max_sum = std::max<std::int64_t>(0, max_sum);
  p.max_part = std::max<std::int64_t>(0, max_part);
  p.target_parts = std::max<std::int64_t>(0, parts);
  p.memory_cap_bytes = opt.memory_cap_bytes;
  return p;
}

// Largest part allowed by each family.
std::int64_t family_largest(std::int64_t n, Family family) {
  return family == Family::L ? n - 2 : n - 1;
}

Count family_entry(const PartitionTable &table, std::int64_t n, Family family, std::int64_t N) {
  if (family == Family::H)
    return table.g_prime(N, n - 1, n);
  return graphical_with_sum(table, n, N, family_largest(n, family));
}

// Sum around which the family's profile is symmetric, doubled.
std::int64_t mirror_total(std::int64_t n, Family family) {
  return family == Family::L ? n * (n - 1) : (n + 2) * (n - 1);
}

} // namespace

Count SumProfile::total() const {
  Count sum = 0;
  for (const auto &[N, c] : entries)
    sum += c;
  return sum;
}

std::int64_t profile_first_sum(std::int64_t n, Family family) {
  const std::int64_t lo = family == Family::H ? 2 * (n - 1) : n;
  return lo + (lo & 1);
}

std::int64_t profile_last_sum(std::int64_t n, Family family) {
  const std::int64_t hi = family == Family::L ? n * (n - 2) : n * (n - 1);
  return hi - (hi & 1);
}

TableParams basic_table_params(std::int64_t n, const CountOptions &opt) {
  // Largest queried sum is n(n-1) - (k + n - 1) with k = 1.
  return table_params(n * (n - 2), n - 2, n - 1, opt);
}

TableParams lower_half_table_params(std::int64_t n, const CountOptions &opt) {
  return table_params(n * (n - 1) / 2 - n, n - 3, n - 1, opt);
}

Count graphical_with_sum(const PartitionTable &table, std::int64_t n, std::int64_t N,
                         std::int64_t max_largest) {
  Count sum = 0;
  const std::int64_t top = std::min(max_largest, N - n + 1);
  for (std::int64_t k = 1; k <= top; ++k)
    sum += table.g_prime(N, k, n);
  return sum;
}

Count count_d_basic(std::int64_t n, const CountOptions &opt) {
  require_length(n, 1, "count_d_basic");
  if (n == 1)
    return 0;
  const auto table = PartitionTable::build(basic_table_params(n, opt));
  Count total = 0;
  for (std::int64_t N = profile_first_sum(n, Family::G); N <= n * (n - 1); N += 2)
    total += graphical_with_sum(table, n, N, n - 1);
  return total;
}

Count count_d_improved(std::int64_t n, const DnSeries &prior, const CountOptions &opt) {
  require_length(n, 1, "count_d_improved");
  if (n == 1)
    return 0;
  if (prior.n_max() < n - 1)
    throw MissingPriorError("improved count of |D(" + std::to_string(n) + ")| needs |D(i)| for i < " +
                            std::to_string(n) + ", series stops at " +
                            std::to_string(prior.n_max()));
  const std::int64_t half = n * (n - 1) / 2;
  const auto table = PartitionTable::build(lower_half_table_params(n, opt));
  Count lower = 0;
  for (std::int64_t N = profile_first_sum(n, Family::L); N < half; N += 2)
    lower += graphical_with_sum(table, n, N, n - 2);
  lower *= 2;
  if (half % 2 == 0)
    lower += graphical_with_sum(table, n, half, n - 2);
  return lower + prior.d0(n - 1);
}

Count count_d0(std::int64_t n, const DnSeries &prior) {
  require_length(n, 1, "count_d0");
  return prior.d0(n);
}

Count count_h(std::int64_t n, const DnSeries &prior) {
  require_length(n, 2, "count_h");
  return prior.d0(n - 1);
}

Count count_l(std::int64_t n, const CountOptions &opt) {
  require_length(n, 2, "count_l");
  return profile(n, Family::L, opt).total();
}

SumProfile profile_from_table(const PartitionTable &table, std::int64_t n, Family family) {
  require_length(n, 2, "profile");
  SumProfile out{n, family, {}};
  for (std::int64_t N = profile_first_sum(n, family); N <= profile_last_sum(n, family); N += 2)
    out.entries[N] = family_entry(table, n, family, N);
  return out;
}

SumProfile profile_direct(std::int64_t n, Family family, const CountOptions &opt) {
  require_length(n, 2, "profile");
  return profile_from_table(PartitionTable::build(basic_table_params(n, opt)), n, family);
}

SumProfile profile(std::int64_t n, Family family, const CountOptions &opt) {
  require_length(n, 2, "profile");
  if (family == Family::G)
    return profile_direct(n, family, opt);

  const std::int64_t total = mirror_total(n, family);
  const std::int64_t centre = total / 2;
  TableParams params = family == Family::L
                           ? lower_half_table_params(n, opt)
                           : table_params(centre - 2 * n + 2, n - 2, n - 1, opt);
  const auto table = PartitionTable::build(params);

  SumProfile out{n, family, {}};
  const std::int64_t first = profile_first_sum(n, family);
  for (std::int64_t N = first; N <= centre && N <= profile_last_sum(n, family); N += 2) {
    Count c = family_entry(table, n, family, N);
    out.entries[total - N] = c;
    out.entries[N] = std::move(c);
  }
  return out;
}

std::map<std::int64_t, Count> by_largest_from_table(const PartitionTable &table, std::int64_t n) {
  require_length(n, 2, "count_by_largest");
  std::map<std::int64_t, Count> out;
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    Count sum = 0;
    for (std::int64_t N = profile_first_sum(n, Family::G); N <= n * (n - 1); N += 2)
      if (k <= N - n + 1)
        sum += table.g_prime(N, k, n);
    out[k] = sum;
  }
  return out;
}

std::map<std::int64_t, Count> count_by_largest(std::int64_t n, const CountOptions &opt) {
  require_length(n, 2, "count_by_largest");
  return by_largest_from_table(PartitionTable::build(basic_table_params(n, opt)), n);
}

void extend_series(DnSeries &series, std::int64_t n, const CountOptions &opt) {
  if (series.n_max() == 0 && n >= 1)
    series.append(0);
  while (series.n_max() < n)
    series.append(count_d_improved(series.n_max() + 1, series, opt));
}

} // namespace degseq
