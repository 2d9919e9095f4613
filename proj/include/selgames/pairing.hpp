#pragma once

#include <cstddef>
#include <utility>

namespace selgames {

// Cantor pairing of (rank, repeat) onto inning numbers. The bookkeeping
// strategy selects the rank-r item in exactly the innings {pair(r, j) : j},
// which is what makes its fairness quantitative: an item that entered the
// merged enumeration by inning r has been selected m times by bound(r, m).
struct PairingSchedule {
  static std::size_t pair(std::size_t rank, std::size_t repeat) {
    const std::size_t s = rank + repeat;
    return s * (s + 1) / 2 + repeat;
  }

  // Inverse of pair(); returns {rank, repeat}.
  static std::pair<std::size_t, std::size_t> unpair(std::size_t n) {
    std::size_t s = 0;
    while ((s + 1) * (s + 2) / 2 <= n) ++s;
    const std::size_t repeat = n - s * (s + 1) / 2;
    return {s - repeat, repeat};
  }

  // Least inning by which the rank-r item has been selected m >= 1 times,
  // provided it entered the enumeration by inning r.
  static std::size_t bound(std::size_t rank, std::size_t m) {
    return pair(rank, m - 1);
  }
};

}  // namespace selgames
