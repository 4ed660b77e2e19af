#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degseq/connectivity_counts.hpp"
#include "degseq/degree_counts.hpp"
#include "degseq/oracle.hpp"
#include "degseq/series.hpp"

namespace degseq {

// Every count for one n from the dynamic-programming routes. One basic-size
// table serves d, the G profile, the largest-part split, l and s; dd comes
// from its own small table and dc = |D(n)| - dd. `series` must cover n.
// db and d2_minus_b are filled for n >= 5.
CountReport dp_report(std::int64_t n, const DnSeries &series, const CountOptions &opt = {});

struct FieldCheck {
  std::string quantity;
  Count expected;
  Count actual;
  bool pass = false;
};

// Field-by-field comparison of two reports for the same n. Optional fields
// are compared only when both sides have them.
std::vector<FieldCheck> compare_reports(const CountReport &expected, const CountReport &actual);

} // namespace degseq
