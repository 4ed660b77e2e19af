#include "degseq/partition_table.hpp"

#include <string>

namespace degseq {

std::vector<Count> partition_numbers(std::int64_t upto) {
  if (upto < 0)
    throw PreconditionError("partition numbers need a nonnegative bound, got " +
                            std::to_string(upto));
  std::vector<Count> p(static_cast<std::size_t>(upto) + 1);
  p[0] = 1;
  for (std::int64_t m = 1; m <= upto; ++m) {
    Count acc = 0;
    // Generalized pentagonal numbers g = j(3j-1)/2 for j = 1, -1, 2, -2, ...
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m)
        break;
      const std::int64_t g2 = j * (3 * j + 1) / 2;
      const bool plus = (j % 2) == 1;
      if (plus)
        acc += p[static_cast<std::size_t>(m - g1)];
      else
        acc -= p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) {
        if (plus)
          acc += p[static_cast<std::size_t>(m - g2)];
        else
          acc -= p[static_cast<std::size_t>(m - g2)];
      }
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p;
}

Count unrestricted_p(std::int64_t j) {
  if (j < 0)
    return 0;
  return partition_numbers(j).back();
}

} // namespace degseq
