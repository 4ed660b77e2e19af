#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "degseq/connectivity_counts.hpp"
#include "degseq/degree_counts.hpp"
#include "degseq/oracle.hpp"
#include "degseq/report.hpp"
#include "degseq/series.hpp"

namespace degseq::cli {

namespace {

struct BadArguments : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string quantity = "d";
  std::optional<std::int64_t> n;
  std::string range;
  std::string algorithm;
  std::string format;
  std::string cache;
  std::uint64_t memory_cap = kDefaultMemoryCap;
  int oracle_cap = kDefaultOracleCap;
  std::int64_t max_n = 10;
  std::string family = "G";
  bool ratio = false;
};

struct Range {
  std::int64_t lo = 0, hi = 0;
};

std::int64_t parse_int(const std::string &s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception &) {
    throw BadArguments("not an integer: '" + s + "'");
  }
  if (used != s.size())
    throw BadArguments("not an integer: '" + s + "'");
  return v;
}

Range parse_range(const std::string &text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi)
    throw BadArguments("empty range '" + text + "'");
  return r;
}

// --n or --range, exactly one.
Range lengths(const Options &o) {
  if (o.n && !o.range.empty())
    throw BadArguments("give either --n or --range, not both");
  if (o.n)
    return {*o.n, *o.n};
  if (o.range.empty())
    throw BadArguments("one of --n or --range is required");
  return parse_range(o.range);
}

std::int64_t min_length(const std::string &q) {
  if (q == "d" || q == "d0")
    return 1;
  if (q == "h" || q == "l" || q == "dc" || q == "dd")
    return 2;
  return 3;
}

bool uses_series(const std::string &q) {
  static const std::set<std::string> qs = {"d", "d0", "h", "dc", "b", "c", "d2", "db"};
  return qs.count(q) != 0;
}

class Session {
public:
  Session(const Options &o, std::ostream &err) : opts_(o), err_(err) {
    copt_.memory_cap_bytes = o.memory_cap;
    if (!o.cache.empty()) {
      cache_ = o.cache;
    } else if (const char *env = std::getenv(kCacheEnv); env && *env) {
      cache_ = env;
    }
    if (cache_)
      series_ = load_series(*cache_);
    if (series_.n_max() == 0)
      series_.append(0);
  }

  const DnSeries &series() const { return series_; }
  const CountOptions &count_options() const { return copt_; }

  void ensure_series(std::int64_t n) {
    if (series_.covers(n))
      return;
    extend_series(series_, n, copt_);
    save();
  }

  Count value(const std::string &q, std::int64_t n) {
    if (n < min_length(q))
      throw BadArguments(q + " needs n >= " + std::to_string(min_length(q)) + ", got " +
                         std::to_string(n));
    const std::string &algo = opts_.algorithm;
    if (!algo.empty()) {
      const bool ok = (q == "d" && (algo == "basic" || algo == "improved")) ||
                      (q == "dc" && (algo == "direct" || algo == "indirect"));
      if (!ok)
        throw BadArguments("--algorithm " + algo + " does not apply to " + q);
    }

    if (q == "d")
      return d(n);
    if (q == "d0") {
      ensure_series(n);
      return count_d0(n, series_);
    }
    if (q == "h") {
      ensure_series(n - 1);
      return count_h(n, series_);
    }
    if (q == "l")
      return count_l(n, copt_);
    if (q == "dc")
      return dc(n);
    if (q == "dd")
      return count_dd(n, copt_);
    if (q == "s")
      return count_s(n, copt_);
    if (q == "b") {
      ensure_series(n - 2);
      return count_b(n, series_);
    }
    if (q == "c") {
      ensure_series(n - 2);
      return count_b(n, series_) + count_s(n, copt_);
    }
    if (q == "d2") {
      ensure_series(n);
      return series_.d(n) - count_b(n, series_) - count_s(n, copt_);
    }
    if (q == "db") {
      if (n < 5) {
        err_ << "note: db for n = " << n << " taken from exhaustive enumeration\n";
        return *oracle_counts(static_cast<int>(n), opts_.oracle_cap).db;
      }
      ensure_series(n);
      return count_db(n, series_, series_.d(n), copt_).db;
    }
    throw BadArguments("unknown quantity '" + q + "'");
  }

private:
  Count d(std::int64_t n) {
    if (n == 1)
      return 0;
    const std::string &algo = opts_.algorithm;
    if (algo == "basic")
      return count_d_basic(n, copt_);
    if (series_.covers(n))
      return series_.d(n);
    if (!series_.covers(n - 1)) {
      if (algo == "improved")
        throw MissingPriorError("improved route needs |D(i)| for i < " + std::to_string(n) +
                                "; cached series ends at " + std::to_string(series_.n_max()));
      err_ << "warning: no cached |D(i)| below n = " << n << "; using the basic algorithm\n";
      return count_d_basic(n, copt_);
    }
    Count v = count_d_improved(n, series_, copt_);
    series_.append(v);
    save();
    return v;
  }

  Count dc(std::int64_t n) {
    const std::string &algo = opts_.algorithm;
    if (algo == "direct")
      return count_dc_direct(n, copt_);
    if (!series_.covers(n)) {
      if (algo == "indirect")
        throw MissingPriorError("indirect route needs |D(" + std::to_string(n) +
                                ")|; cached series ends at " + std::to_string(series_.n_max()));
      err_ << "warning: |D(" << n << ")| not cached; using the direct algorithm\n";
      return count_dc_direct(n, copt_);
    }
    return count_dc_indirect(n, series_.d(n), copt_);
  }

  void save() {
    if (cache_)
      save_series(*cache_, series_);
  }

  const Options &opts_;
  std::ostream &err_;
  CountOptions copt_;
  std::optional<std::filesystem::path> cache_;
  DnSeries series_;
};

void emit_rows(std::ostream &out, const std::string &format, const std::string &quantity,
               const std::vector<BFileRow> &rows) {
  if (format == "bfile") {
    write_bfile(out, rows);
  } else if (format == "csv") {
    out << "n,quantity,value\n";
    for (const auto &r : rows)
      out << r.n << ',' << quantity << ',' << to_string(r.value) << '\n';
  } else {
    out << std::setw(5) << "n" << "  " << std::setw(8) << std::left << "quantity" << std::right
        << "  value\n";
    for (const auto &r : rows)
      out << std::setw(5) << r.n << "  " << std::setw(8) << std::left << quantity << std::right
          << "  " << to_string(r.value) << '\n';
  }
}

int cmd_count(const Options &o, std::ostream &out, std::ostream &err, bool series_mode) {
  const Range r = lengths(o);
  Session session(o, err);
  if (series_mode && uses_series(o.quantity) && o.algorithm.empty())
    session.ensure_series(r.hi);
  std::vector<BFileRow> rows;
  for (std::int64_t n = r.lo; n <= r.hi; ++n)
    rows.push_back({n, session.value(o.quantity, n)});
  const std::string fmt = o.format.empty() ? (series_mode ? "bfile" : "csv") : o.format;
  emit_rows(out, fmt, o.quantity, rows);
  return kOk;
}

Family parse_family(const std::string &f) {
  if (f == "G")
    return Family::G;
  if (f == "L")
    return Family::L;
  if (f == "H")
    return Family::H;
  throw BadArguments("unknown family '" + f + "'");
}

// floor(num / den) printed with six decimals.
std::string truncated_ratio(const Count &num, const Count &den) {
  Count scaled = num * 1000000;
  Count q = scaled / den;
  Count whole = q / 1000000;
  Count frac = q % 1000000;
  std::string f = to_string(frac);
  return to_string(whole) + "." + std::string(6 - f.size(), '0') + f;
}

int cmd_profile(const Options &o, std::ostream &out, std::ostream &err) {
  const std::string fmt = o.format.empty() ? "table" : o.format;
  if (o.ratio) {
    const Range r = lengths(o);
    if (r.lo < 3)
      throw BadArguments("--ratio needs n >= 3");
    Session session(o, err);
    session.ensure_series(r.hi);
    if (fmt == "csv")
      out << "n,ratio\n";
    for (std::int64_t n = r.lo; n <= r.hi; ++n) {
      const std::string v = truncated_ratio(session.series().d(n), session.series().d(n - 1));
      if (fmt == "csv")
        out << n << ',' << v << '\n';
      else if (fmt == "bfile")
        out << n << ' ' << v << '\n';
      else
        out << std::setw(5) << n << "  " << v << '\n';
    }
    return kOk;
  }
  if (!o.n)
    throw BadArguments("profile needs --n (or --ratio with --range)");
  const std::int64_t n = *o.n;
  if (n < 2)
    throw BadArguments("profile needs n >= 2");
  CountOptions copt;
  copt.memory_cap_bytes = o.memory_cap;
  const SumProfile p = profile(n, parse_family(o.family), copt);
  if (fmt == "csv")
    out << "N,count\n";
  for (const auto &[N, c] : p.entries) {
    if (fmt == "csv")
      out << N << ',' << to_string(c) << '\n';
    else if (fmt == "bfile")
      out << N << ' ' << to_string(c) << '\n';
    else
      out << std::setw(6) << N << "  " << to_string(c) << '\n';
  }
  return kOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
  const std::int64_t hi = o.n ? *o.n : o.max_n;
  const std::int64_t lo = o.n ? *o.n : 2;
  if (lo < 2)
    throw BadArguments("verify needs n >= 2");
  if (hi > o.oracle_cap)
    throw BadArguments("n = " + std::to_string(hi) + " exceeds the oracle cap of " +
                       std::to_string(o.oracle_cap));
  Session session(o, err);
  session.ensure_series(hi);
  std::size_t checks = 0, failures = 0;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const CountReport expected = oracle_counts(static_cast<int>(n), o.oracle_cap);
    const CountReport actual = dp_report(n, session.series(), session.count_options());
    for (const FieldCheck &c : compare_reports(expected, actual)) {
      ++checks;
      if (!c.pass)
        ++failures;
      out << std::setw(3) << n << "  " << std::setw(10) << std::left << c.quantity << std::right
          << "  " << (c.pass ? "PASS" : "FAIL") << "  oracle=" << to_string(c.expected)
          << " dp=" << to_string(c.actual) << '\n';
    }
  }
  out << checks - failures << '/' << checks << " checks passed\n";
  return failures == 0 ? kOk : kVerifyMismatch;
}

void add_common(CLI::App *cmd, Options &o) {
  cmd->add_option("--cache", o.cache, std::string("series cache (b-file); overrides $") + kCacheEnv);
  cmd->add_option("--memory-cap", o.memory_cap, "table memory budget in bytes");
  cmd->add_option("--oracle-cap", o.oracle_cap, "largest n for exhaustive enumeration");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "bfile"}));
}

void add_counting(CLI::App *cmd, Options &o) {
  cmd->add_option("--quantity", o.quantity, "which count")
      ->check(CLI::IsMember({"d", "d0", "h", "l", "dc", "dd", "s", "b", "c", "d2", "db"}));
  cmd->add_option("--n", o.n, "sequence length");
  cmd->add_option("--range", o.range, "lengths A..B");
  cmd->add_option("--algorithm", o.algorithm, "route for d or dc")
      ->check(CLI::IsMember({"basic", "improved", "direct", "indirect"}));
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Counts of degree sequences of simple graphs"};
  app.name("degseq");
  app.require_subcommand(1);

  auto *count = app.add_subcommand("count", "count degree sequences for one n or a range");
  add_counting(count, o);
  add_common(count, o);

  auto *series = app.add_subcommand("series", "emit a quantity over a range as a b-file");
  add_counting(series, o);
  add_common(series, o);

  auto *verify = app.add_subcommand("verify", "compare every count with exhaustive enumeration");
  verify->add_option("--max-n", o.max_n, "check n = 2..max-n");
  verify->add_option("--n", o.n, "check a single n");
  add_common(verify, o);

  auto *prof = app.add_subcommand("profile", "counts by degree sum, or successive ratios");
  prof->add_option("--n", o.n, "sequence length");
  prof->add_option("--family", o.family, "G, L or H")->check(CLI::IsMember({"G", "L", "H"}));
  prof->add_flag("--ratio", o.ratio, "print |D(n)|/|D(n-1)| over --range");
  prof->add_option("--range", o.range, "lengths A..B");
  add_common(prof, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }

  try {
    if (count->parsed())
      return cmd_count(o, out, err, false);
    if (series->parsed())
      return cmd_count(o, out, err, true);
    if (verify->parsed())
      return cmd_verify(o, out, err);
    return cmd_profile(o, out, err);
  } catch (const CapacityError &e) {
    err << "error: " << e.what() << '\n';
    return kOverBudget;
  } catch (const MissingPriorError &e) {
    err << "error: " << e.what() << '\n';
    return kMissingPrior;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
}

} // namespace degseq::cli
