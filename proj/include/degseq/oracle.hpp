#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "degseq/count.hpp"
#include "degseq/degree_counts.hpp"

namespace degseq {

// Non-increasing positive sequence of length n with every term below n.
class DegreeSequence {
public:
  explicit DegreeSequence(std::vector<int> terms);
  std::span<const int> terms() const { return terms_; }
  std::int64_t sum() const;

private:
  std::vector<int> terms_;
};

// All counts for one n. db and d2_minus_b are absent when the producing
// route does not define them for this n.
struct CountReport {
  std::int64_t n = 0;
  Count d, d0, h, l, dc, dd, s, b, c, d2;
  std::optional<Count> db, d2_minus_b;
  SumProfile profile_g;
  std::map<std::int64_t, Count> by_largest;
};

struct Potential {
  bool connected = false;
  bool biconnected = false;
};

// Visits E(n) (non-increasing, terms in [1, n-1], even sum) in
// lexicographically decreasing order. The span is only valid during the call.
template <class Visit> void for_each_even_bounded(int n, Visit &&visit);

// Both take a non-increasing, nonnegative, even-sum sequence and throw
// PreconditionError otherwise.
bool is_graphical_eg(std::span<const int> seq);
bool is_graphical_nw(std::span<const int> seq);

Potential classify(std::span<const int> seq);

inline constexpr int kDefaultOracleCap = 14;

// Brute-force counts by filtering E(n). Throws PreconditionError for n < 2
// or n > cap.
CountReport oracle_counts(int n, int cap = kDefaultOracleCap);

// Every graphical sequence of length n, one per line, space separated.
void write_graphical(std::ostream &out, int n);

namespace detail {
template <class Visit>
void even_bounded_step(std::vector<int> &seq, int pos, int max_term, int parity, Visit &visit) {
  const int n = static_cast<int>(seq.size());
  if (pos == n) {
    if (parity == 0)
      visit(std::span<const int>(seq));
    return;
  }
  for (int v = max_term; v >= 1; --v) {
    seq[static_cast<std::size_t>(pos)] = v;
    even_bounded_step(seq, pos + 1, v, parity ^ (v & 1), visit);
  }
}
} // namespace detail

template <class Visit> void for_each_even_bounded(int n, Visit &&visit) {
  if (n < 2)
    return;
  std::vector<int> seq(static_cast<std::size_t>(n));
  detail::even_bounded_step(seq, 0, n - 1, 0, visit);
}

} // namespace degseq
