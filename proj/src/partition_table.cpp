#include "degseq/partition_table.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <ostream>
#include <string>

namespace degseq {

namespace {

constexpr std::size_t kMaxLimbs = 8;
// Above this max_sum, p(max_sum) costs more than it saves as a width bound.
constexpr std::int64_t kPartitionBoundLimit = 4096;

struct Layout {
  std::size_t cells = 0;
  std::size_t limbs = 1;
};

std::size_t index_of(std::int64_t k, std::int64_t N, std::int64_t max_sum) {
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(max_sum + 1) +
         static_cast<std::size_t>(N);
}

void validate(const TableParams &p) {
  if (p.max_sum < 0 || p.max_part < 0 || p.target_parts < 0)
    throw PreconditionError("table dimensions must be nonnegative");
}

// Every cell is at most |P(N,k,l)|, which is bounded both by the number of
// partitions fitting a max_part x target_parts box and by p(max_sum).
std::size_t limbs_for(const TableParams &p) {
  Count bound;
  mpz_bin_uiui(bound.get_mpz_t(), static_cast<unsigned long>(p.max_part + p.target_parts),
               static_cast<unsigned long>(p.max_part));
  if (p.max_sum <= kPartitionBoundLimit) {
    Count pm = unrestricted_p(p.max_sum);
    if (pm < bound)
      bound = pm;
  }
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  return std::max<std::size_t>(1, (bits + 63) / 64);
}

std::int64_t row_length_for(const TableParams &p, std::int64_t cap) {
  return p.shifts == ShiftRange::full ? cap + 1 : 1;
}

Layout layout_for(const TableParams &p) {
  Layout out;
  out.limbs = limbs_for(p);
  for (std::int64_t k = 1; k <= p.max_part; ++k)
    for (std::int64_t N = k; N <= p.max_sum; ++N)
      out.cells += static_cast<std::size_t>(row_length_for(p, shift_saturation(N, k)));
  return out;
}

std::uint64_t bytes_for(const TableParams &p, const Layout &lay) {
  const std::uint64_t index_entries =
      static_cast<std::uint64_t>(p.max_part + 1) * static_cast<std::uint64_t>(p.max_sum + 1);
  return 2 * static_cast<std::uint64_t>(lay.cells) * lay.limbs * sizeof(std::uint64_t) +
         index_entries * (sizeof(std::size_t) + sizeof(std::int64_t));
}

// out = a + b + d - c modulo 2^(64 W). The true value is a cell count known
// to fit, so wrap-around in intermediate limbs cancels out.
template <std::size_t W>
inline void combine(std::uint64_t *out, const std::uint64_t *a, const std::uint64_t *b,
                    const std::uint64_t *c, const std::uint64_t *d) {
  if constexpr (W == 1) {
    out[0] = a[0] + b[0] + d[0] - c[0];
  } else {
    __int128 carry = 0;
    for (std::size_t i = 0; i < W; ++i) {
      __int128 v = static_cast<__int128>(a[i]) + b[i] + d[i] - static_cast<__int128>(c[i]) + carry;
      out[i] = static_cast<std::uint64_t>(v);
      carry = v >> 64;
    }
  }
}

} // namespace

std::int64_t shift_saturation(std::int64_t N, std::int64_t k) {
  if (N <= 0 || k <= 0)
    return 0;
  std::int64_t best = 0;
  for (std::int64_t d = 1; d <= k && d * d <= N; ++d)
    best = std::max(best, std::min(d * (k - d + 1), N - 2 * d + 2));
  return best;
}

std::uint64_t PartitionTable::estimate_bytes(const TableParams &params) {
  validate(params);
  return bytes_for(params, layout_for(params));
}

PartitionTable PartitionTable::build(const TableParams &params, const LayerVisitor &visit) {
  validate(params);
  const Layout lay = layout_for(params);
  const std::uint64_t need = bytes_for(params, lay);
  if (need > params.memory_cap_bytes)
    throw CapacityError("partition table needs " + std::to_string(need) +
                            " bytes, above the memory cap of " +
                            std::to_string(params.memory_cap_bytes),
                        need, params.memory_cap_bytes);
  if (lay.limbs > kMaxLimbs)
    throw CapacityError("partition table cells need " + std::to_string(lay.limbs) +
                            " limbs, more than the supported " + std::to_string(kMaxLimbs),
                        need, params.memory_cap_bytes);

  PartitionTable t;
  t.params_ = params;
  t.limbs_ = lay.limbs;
  t.cells_ = lay.cells;

  const std::size_t entries =
      static_cast<std::size_t>(params.max_part + 1) * static_cast<std::size_t>(params.max_sum + 1);
  t.offsets_.assign(entries, 0);
  t.caps_.assign(entries, 0);
  std::size_t next = 0;
  for (std::int64_t k = 1; k <= params.max_part; ++k) {
    for (std::int64_t N = k; N <= params.max_sum; ++N) {
      const std::size_t at = index_of(k, N, params.max_sum);
      t.caps_[at] = shift_saturation(N, k);
      t.offsets_[at] = next;
      next += static_cast<std::size_t>(row_length_for(params, t.caps_[at]));
    }
  }
  t.layers_[0].assign(lay.cells * lay.limbs, 0);
  t.layers_[1].assign(lay.cells * lay.limbs, 0);

  switch (lay.limbs) {
  case 1: t.fill<1>(visit); break;
  case 2: t.fill<2>(visit); break;
  case 3: t.fill<3>(visit); break;
  case 4: t.fill<4>(visit); break;
  case 5: t.fill<5>(visit); break;
  case 6: t.fill<6>(visit); break;
  case 7: t.fill<7>(visit); break;
  case 8: t.fill<8>(visit); break;
  }
  return t;
}

std::int64_t PartitionTable::row_length(std::int64_t N, std::int64_t k) const {
  return row_length_for(params_, caps_[index_of(k, N, params_.max_sum)]);
}

template <std::size_t W> void PartitionTable::fill(const LayerVisitor &visit) {
  const std::int64_t last = params_.target_parts;
  // Past l = max_sum every row is a copy of the previous layer.
  const std::int64_t computed = std::min(last, params_.max_sum);
  for (std::int64_t l = 1; l <= last; ++l) {
    if (l <= computed)
      fill_layer<W>(l);
    filled_l_ = l;
    if (visit)
      visit(*this, l);
  }
}

template <std::size_t W> void PartitionTable::fill_layer(std::int64_t l) {
  const std::uint64_t *prev = layers_[current_].data();
  std::uint64_t *cur = layers_[1 - current_].data();
  const bool saturated = params_.shifts == ShiftRange::saturated;
  const std::array<std::uint64_t, W> zero{};
  std::array<std::uint64_t, W> one{};
  one[0] = 1;

  for (std::int64_t k = 1; k <= params_.max_part; ++k) {
    for (std::int64_t N = k; N <= params_.max_sum; ++N) {
      const std::size_t at = index_of(k, N, params_.max_sum);
      const std::size_t off = offsets_[at] * W;
      const std::int64_t len = row_length_for(params_, caps_[at]);
      if (l > N) {
        std::memcpy(cur + off, prev + off, static_cast<std::size_t>(len) * W * sizeof(std::uint64_t));
        continue;
      }
      // Zero at layer l, hence also in the layer l - 2 this buffer still holds.
      if (N > k * l)
        continue;

      const std::int64_t base = saturated ? caps_[at] : 0;

      // Same layer, largest part k - 1 (computed earlier in this sweep).
      const std::uint64_t *left = nullptr;
      const std::uint64_t *left_prev = nullptr;
      std::int64_t left_len = 0;
      if (k >= 2) {
        const std::size_t la = index_of(k - 1, N, params_.max_sum);
        left = cur + offsets_[la] * W;
        left_prev = prev + offsets_[la] * W;
        left_len = row_length_for(params_, caps_[la]);
      }
      const std::uint64_t *up = prev + off;

      // Hook removal: |P(N-k-l+1, k-1, l-1, s+l-k-1)| from layer l - 1.
      const std::int64_t hook_sum = N - k - l + 1;
      const std::int64_t hook_shift = l - k - 1;
      const std::uint64_t *hook = nullptr;
      std::int64_t hook_len = 0;
      std::int64_t hook_base = 0;
      bool hook_one = false;
      if (hook_sum == 0) {
        hook_one = true;
      } else if (hook_sum > 0 && k >= 2 && l >= 2) {
        const std::int64_t hk = std::min(k - 1, hook_sum);
        const std::size_t ha = index_of(hk, hook_sum, params_.max_sum);
        hook = prev + offsets_[ha] * W;
        hook_len = row_length_for(params_, caps_[ha]);
        hook_base = saturated ? caps_[ha] : 0;
      }

      for (std::int64_t i = 0; i < len; ++i) {
        const std::int64_t s = base + i;
        const std::int64_t li = std::min(i, left_len - 1);
        const std::uint64_t *a = left ? left + li * W : zero.data();
        const std::uint64_t *c = left ? left_prev + li * W : zero.data();
        const std::uint64_t *b = up + i * W;
        const std::uint64_t *d = zero.data();
        const std::int64_t hs = s + hook_shift;
        if (hs >= 0) {
          if (hook)
            d = hook + std::clamp<std::int64_t>(hs - hook_base, 0, hook_len - 1) * W;
          else if (hook_one)
            d = one.data();
        }
        combine<W>(cur + off + i * W, a, b, c, d);
      }
    }
  }
  current_ = 1 - current_;
  computed_l_ = l;
}

const std::uint64_t *PartitionTable::layer_data(std::int64_t N, std::int64_t l) const {
  if ((l >= N && computed_l_ >= N) || l == computed_l_)
    return layers_[current_].data();
  if (l == computed_l_ - 1)
    return layers_[1 - current_].data();
  throw LayerNotResidentError("layer l=" + std::to_string(l) + " is not resident (filled to l=" +
                              std::to_string(filled_l_) + ")");
}

Count PartitionTable::cell(const std::uint64_t *layer, std::size_t index) const {
  Count out;
  mpz_import(out.get_mpz_t(), limbs_, -1, sizeof(std::uint64_t), 0, 0, layer + index * limbs_);
  return out;
}

Count PartitionTable::query_raw(std::int64_t N, std::int64_t k, std::int64_t l,
                                std::int64_t s) const {
  if (N < 0 || k < 0 || l < 0 || s < 0)
    return 0;
  if (N == 0)
    return 1;
  if (k == 0 || l == 0)
    return 0;
  k = std::min(k, N);
  s = std::min(s, N);
  if (N > params_.max_sum || k > params_.max_part)
    throw std::out_of_range("P(" + std::to_string(N) + "," + std::to_string(k) +
                            ",...) lies outside the table");
  const std::uint64_t *layer = layer_data(N, l);
  const std::size_t at = index_of(k, N, params_.max_sum);
  const std::int64_t cap = caps_[at];
  s = std::min(s, cap);
  std::size_t index = static_cast<std::size_t>(s);
  if (params_.shifts == ShiftRange::saturated) {
    if (s < cap)
      throw std::out_of_range("saturated table holds no shift below " + std::to_string(cap));
    index = 0;
  }
  return cell(layer, offsets_[at] + index);
}

Count PartitionTable::g_prime(std::int64_t N, std::int64_t k, std::int64_t l) const {
  if (N < 0 || N % 2 != 0)
    throw ParityError("graphical partitions need an even nonnegative sum, got " + std::to_string(N));
  return query_raw(N - k - l + 1, k - 1, l - 1, l - k - 1);
}

void PartitionTable::dump_layer(std::ostream &out, std::int64_t l) const {
  for (std::int64_t k = 1; k <= params_.max_part; ++k) {
    for (std::int64_t N = k; N <= params_.max_sum; ++N) {
      const std::uint64_t *layer = layer_data(N, l);
      const std::size_t at = index_of(k, N, params_.max_sum);
      const std::int64_t base = params_.shifts == ShiftRange::saturated ? caps_[at] : 0;
      const std::int64_t len = row_length(N, k);
      for (std::int64_t i = 0; i < len; ++i)
        out << N << ',' << k << ',' << base + i << ','
            << cell(layer, offsets_[at] + static_cast<std::size_t>(i)) << '\n';
    }
  }
}

} // namespace degseq
