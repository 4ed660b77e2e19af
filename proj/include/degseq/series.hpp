#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "degseq/count.hpp"

namespace degseq {

// Exact |D(1)|, ..., |D(n_max)|.
class DnSeries {
public:
  DnSeries() = default;
  // values[i] is |D(i + 1)|.
  explicit DnSeries(std::vector<Count> values);

  std::int64_t n_max() const { return static_cast<std::int64_t>(values_.size()); }
  bool covers(std::int64_t n) const { return n >= 1 && n <= n_max(); }

  const Count &d(std::int64_t n) const;

  // |D_0(n)| = 1 + |D(2)| + ... + |D(n)|; |D_0(0)| = |D_0(1)| = 1.
  Count d0(std::int64_t n) const;

  // Appends |D(n_max + 1)|.
  void append(Count value);

  const std::vector<Count> &values() const { return values_; }

private:
  void check_known_prefix() const;

  std::vector<Count> values_;
};

struct BFileRow {
  std::int64_t n = 0;
  Count value;
};

// OEIS b-file: `<n> <decimal>` per line. Blank lines and `#` comments are
// skipped on input; n must be strictly increasing.
std::vector<BFileRow> read_bfile(std::istream &in);
void write_bfile(std::ostream &out, const std::vector<BFileRow> &rows);

// A missing file yields an empty series. Rows must run 1, 2, 3, ... without gaps.
DnSeries load_series(const std::filesystem::path &path);
// Written to a sibling temporary file, then renamed over `path`.
void save_series(const std::filesystem::path &path, const DnSeries &series);

} // namespace degseq
