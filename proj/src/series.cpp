#include "degseq/series.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace degseq {

DnSeries::DnSeries(std::vector<Count> values) : values_(std::move(values)) { check_known_prefix(); }

void DnSeries::check_known_prefix() const {
  if (values_.size() >= 1 && values_[0] != 0)
    throw std::runtime_error("series must have |D(1)| = 0, got " + values_[0].get_str());
  if (values_.size() >= 2 && values_[1] != 1)
    throw std::runtime_error("series must have |D(2)| = 1, got " + values_[1].get_str());
}

const Count &DnSeries::d(std::int64_t n) const {
  if (!covers(n))
    throw MissingPriorError("|D(" + std::to_string(n) + ")| is not in the series (n_max = " +
                            std::to_string(n_max()) + ")");
  return values_[static_cast<std::size_t>(n - 1)];
}

Count DnSeries::d0(std::int64_t n) const {
  if (n < 0)
    throw PreconditionError("|D_0(n)| needs n >= 0");
  if (n > n_max() && n > 1)
    throw MissingPriorError("|D_0(" + std::to_string(n) + ")| needs |D(i)| up to i = " +
                            std::to_string(n) + " (n_max = " + std::to_string(n_max()) + ")");
  Count total = 1;
  for (std::int64_t i = 2; i <= n; ++i)
    total += values_[static_cast<std::size_t>(i - 1)];
  return total;
}

void DnSeries::append(Count value) {
  values_.push_back(std::move(value));
  check_known_prefix();
}

std::vector<BFileRow> read_bfile(std::istream &in) {
  std::vector<BFileRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream fields(line);
    BFileRow row;
    std::string value;
    std::string extra;
    if (!(fields >> row.n >> value) || (fields >> extra) ||
        value.find_first_not_of("0123456789") != std::string::npos)
      throw std::runtime_error("b-file line " + std::to_string(lineno) + ": expected `n value`");
    row.value.set_str(value, 10);
    if (!rows.empty() && row.n <= rows.back().n)
      throw std::runtime_error("b-file line " + std::to_string(lineno) + ": n is not increasing");
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_bfile(std::ostream &out, const std::vector<BFileRow> &rows) {
  for (const auto &row : rows)
    out << row.n << ' ' << row.value.get_str() << '\n';
}

DnSeries load_series(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    return {};
  std::vector<Count> values;
  for (auto &row : read_bfile(in)) {
    if (row.n != static_cast<std::int64_t>(values.size()) + 1)
      throw std::runtime_error("series cache " + path.string() + " has a gap before n = " +
                               std::to_string(row.n));
    values.push_back(std::move(row.value));
  }
  return DnSeries(std::move(values));
}

void save_series(const std::filesystem::path &path, const DnSeries &series) {
  std::vector<BFileRow> rows;
  rows.reserve(series.values().size());
  for (std::int64_t n = 1; n <= series.n_max(); ++n)
    rows.push_back({n, series.d(n)});
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write series cache " + tmp.string());
    write_bfile(out, rows);
    if (!out.flush())
      throw std::runtime_error("cannot write series cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

} // namespace degseq
