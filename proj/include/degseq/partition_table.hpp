#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "degseq/count.hpp"

namespace degseq {

inline constexpr std::uint64_t kDefaultMemoryCap = std::uint64_t{8} << 30;

// Which shift values s a table keeps per (N, k) row.
//
// `full` keeps every s up to the row's saturation point, so any cell is
// queryable. `saturated` keeps only the saturated value |P(N,k,l)|; the
// recurrence restricted to saturated cells is closed, which turns the fill
// into an O(N k l) sweep. Queries below the saturation point fail there.
enum class ShiftRange { full, saturated };

struct TableParams {
  std::int64_t max_sum = 0;
  std::int64_t max_part = 0;
  std::int64_t target_parts = 0;
  ShiftRange shifts = ShiftRange::full;
  std::uint64_t memory_cap_bytes = kDefaultMemoryCap;
};

// A shift from which |P(N,k,l,s)| no longer depends on s, for every l.
//
// A partition fails the corank test at row j only if
// j - (r_1 + ... + r_j) > s. With Durfee size d, columns 1..d have length at
// least d and rows at most k, which bounds that excess by d(k - d + 1); the
// first j rows and columns fit inside N cells, which bounds it by
// N - 2d + 2. The maximum over feasible d is the returned value; it never
// exceeds N.
std::int64_t shift_saturation(std::int64_t N, std::int64_t k);

// Layer-by-layer table of |P(N,k,l,s)|: partitions of N into at most l parts,
// largest part at most k, whose corank prefix sums satisfy
// s + r_1 + ... + r_j >= j for every j up to the Durfee size.
//
// Only the two most recent l-layers are resident. Within a layer, cells are
// grouped by k, then by N, with the s values of one (N, k) row contiguous.
// Rows exist only for 1 <= k <= N; smaller N clamp k first.
//
// Cells are stored as fixed-width little-endian limb vectors whose width is
// chosen from an upper bound on every value the table can hold, so the
// recurrence never overflows. Everything crossing the API is a Count.
class PartitionTable {
public:
  // Called after every layer l = 1..target_parts is complete.
  using LayerVisitor = std::function<void(const PartitionTable &, std::int64_t l)>;

  static PartitionTable build(const TableParams &params, const LayerVisitor &visit = {});

  // Bytes the table for `params` would allocate.
  static std::uint64_t estimate_bytes(const TableParams &params);

  // |P(N,k,l,s)| with the clamp chain: any negative argument -> 0, N = 0 -> 1,
  // k = 0 or l = 0 -> 0, then k, l, s clamp to N.
  //
  // l must be a resident layer. Since |P(N,k,l,s)| is constant in l once
  // l >= N, any l >= N is also accepted when the table has reached layer N.
  Count query_raw(std::int64_t N, std::int64_t k, std::int64_t l, std::int64_t s) const;

  // Number of graphical partitions of the even integer N with exactly l parts
  // and largest part exactly k: |P(N-k-l+1, k-1, l-1, l-k-1)|.
  Count g_prime(std::int64_t N, std::int64_t k, std::int64_t l) const;

  const TableParams &params() const { return params_; }
  std::int64_t filled_l() const { return filled_l_; }
  std::size_t limbs_per_cell() const { return limbs_; }
  std::size_t cells_per_layer() const { return cells_; }

  // CSV rows `N,k,s,count` for every stored cell of a resident layer.
  void dump_layer(std::ostream &out, std::int64_t l) const;

private:
  PartitionTable() = default;

  std::size_t row_offset(std::int64_t N, std::int64_t k) const {
    return offsets_[static_cast<std::size_t>(k) * static_cast<std::size_t>(params_.max_sum + 1) +
                    static_cast<std::size_t>(N)];
  }
  std::int64_t row_length(std::int64_t N, std::int64_t k) const;
  const std::uint64_t *layer_data(std::int64_t N, std::int64_t l) const;
  Count cell(const std::uint64_t *layer, std::size_t index) const;

  template <std::size_t W> void fill(const LayerVisitor &visit);
  template <std::size_t W> void fill_layer(std::int64_t l);

  TableParams params_;
  std::size_t limbs_ = 1;
  std::size_t cells_ = 0;
  std::vector<std::size_t> offsets_;  // (k, N) -> first cell of the row
  std::vector<std::int64_t> caps_;    // (k, N) -> shift_saturation(N, k)
  std::vector<std::uint64_t> layers_[2];
  int current_ = 0;
  std::int64_t computed_l_ = 0;  // layer held by layers_[current_]
  std::int64_t filled_l_ = 0;
};

// p(j), the number of unrestricted partitions of j.
Count unrestricted_p(std::int64_t j);

// p(0), ..., p(upto) by the pentagonal-number recurrence.
std::vector<Count> partition_numbers(std::int64_t upto);

} // namespace degseq
