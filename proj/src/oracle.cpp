#include "degseq/oracle.hpp"

#include <numeric>
#include <ostream>
#include <string>

namespace degseq {

namespace {

void check_sequence(std::span<const int> seq) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0)
      throw PreconditionError("degree sequence has a negative term");
    if (i > 0 && seq[i] > seq[i - 1])
      throw PreconditionError("degree sequence is not non-increasing");
    sum += seq[i];
  }
  if (sum % 2 != 0)
    throw PreconditionError("degree sequence has an odd sum");
}

struct Tally {
  std::uint64_t d = 0, h = 0, dc = 0, dd = 0, s = 0, b = 0, c = 0, d2 = 0, db = 0, d2_minus_b = 0;
  std::map<std::int64_t, std::uint64_t> by_sum;
  std::map<std::int64_t, std::uint64_t> by_largest;
};

Tally tally(int n) {
  Tally t;
  for_each_even_bounded(n, [&](std::span<const int> seq) {
    if (!is_graphical_eg(seq))
      return;
    const std::int64_t sum = std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
    const int first = seq.front();
    const int last = seq.back();
    const Potential pot = classify(seq);
    ++t.d;
    ++t.by_sum[sum];
    ++t.by_largest[first];
    if (first == n - 1)
      ++t.h;
    if (first == n - 2)
      ++t.s;
    if (last == 1) {
      ++t.c;
      if (first == n - 1)
        ++t.b;
    } else {
      ++t.d2;
      if (pot.biconnected)
        ++t.db;
      else
        ++t.d2_minus_b;
    }
    if (pot.connected)
      ++t.dc;
    else
      ++t.dd;
  });
  return t;
}

Count to_count(std::uint64_t v) {
  Count c;
  mpz_import(c.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return c;
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  const int n = static_cast<int>(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 1 || terms_[i] > n - 1)
      throw PreconditionError("degree sequence terms must lie in [1, n-1]");
    if (i > 0 && terms_[i] > terms_[i - 1])
      throw PreconditionError("degree sequence is not non-increasing");
  }
}

std::int64_t DegreeSequence::sum() const {
  return std::accumulate(terms_.begin(), terms_.end(), std::int64_t{0});
}

bool is_graphical_eg(std::span<const int> seq) {
  check_sequence(seq);
  const std::size_t n = seq.size();
  std::vector<std::int64_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    prefix[i + 1] = prefix[i] + seq[i];
  // w = number of terms >= k; non-increasing in k.
  std::size_t w = n;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    while (w > 0 && seq[w - 1] < kk)
      --w;
    std::int64_t rhs = kk * (kk - 1);
    if (w > k)
      rhs += kk * static_cast<std::int64_t>(w - k) + (prefix[n] - prefix[w]);
    else
      rhs += prefix[n] - prefix[k];
    if (prefix[k] > rhs)
      return false;
  }
  return true;
}

bool is_graphical_nw(std::span<const int> seq) {
  check_sequence(seq);
  const std::size_t n = seq.size();
  // Durfee size: largest d with seq[d-1] >= d.
  std::size_t durfee = 0;
  while (durfee < n && seq[durfee] >= static_cast<int>(durfee + 1))
    ++durfee;
  // Column i has as many cells as terms >= i.
  std::size_t col = n;
  std::int64_t corank_sum = 0;
  for (std::size_t i = 1; i <= durfee; ++i) {
    while (col > 0 && seq[col - 1] < static_cast<int>(i))
      --col;
    corank_sum += static_cast<std::int64_t>(col) - seq[i - 1];
    if (corank_sum < static_cast<std::int64_t>(i))
      return false;
  }
  return true;
}

Potential classify(std::span<const int> seq) {
  const auto n = static_cast<std::int64_t>(seq.size());
  const std::int64_t sum = std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
  Potential p;
  if (n == 0)
    return p;
  p.connected = sum >= 2 * (n - 1);
  p.biconnected = sum >= 2 * n - 4 + 2 * seq.front() && seq.back() >= 2;
  return p;
}

CountReport oracle_counts(int n, int cap) {
  if (n < 2)
    throw PreconditionError("oracle needs n >= 2");
  if (n > cap)
    throw PreconditionError("oracle n = " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap));
  const Tally t = tally(n);
  CountReport r;
  r.n = n;
  r.d = to_count(t.d);
  // |D_0(n)| telescopes over the zero-free counts of shorter lengths.
  r.d0 = 1 + r.d;
  for (int i = 2; i < n; ++i)
    r.d0 += to_count(tally(i).d);
  r.h = to_count(t.h);
  r.l = to_count(t.d - t.h);
  r.dc = to_count(t.dc);
  r.dd = to_count(t.dd);
  r.s = to_count(t.s);
  r.b = to_count(t.b);
  r.c = to_count(t.c);
  r.d2 = to_count(t.d2);
  r.db = to_count(t.db);
  r.d2_minus_b = to_count(t.d2_minus_b);
  r.profile_g.n = n;
  r.profile_g.family = Family::G;
  for (std::int64_t N = profile_first_sum(n, Family::G); N <= profile_last_sum(n, Family::G); N += 2) {
    auto it = t.by_sum.find(N);
    r.profile_g.entries[N] = to_count(it == t.by_sum.end() ? 0 : it->second);
  }
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    auto it = t.by_largest.find(k);
    r.by_largest[k] = to_count(it == t.by_largest.end() ? 0 : it->second);
  }
  return r;
}

void write_graphical(std::ostream &out, int n) {
  for_each_even_bounded(n, [&](std::span<const int> seq) {
    if (!is_graphical_eg(seq))
      return;
    for (std::size_t i = 0; i < seq.size(); ++i)
      out << (i ? " " : "") << seq[i];
    out << '\n';
  });
}

} // namespace degseq
