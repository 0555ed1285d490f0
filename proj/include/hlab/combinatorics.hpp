#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace hlab {

// C(a, b) for a >= 0; zero outside 0 <= b <= a.
inline std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Number of multisets of size n drawn from v elements.
inline std::int64_t multichoose(std::int64_t v, std::int64_t n) {
  if (n < 0 || v < 0) return 0;
  if (n == 0) return 1;
  return binom(v + n - 1, n);
}

// Sign of the permutation sorting `seq` into strictly decreasing order, or 0 on repeats.
// `seq` is sorted in place.
inline int sort_decreasing_with_sign(std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] < seq[j]; --j) {
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i - 1] == seq[i]) return 0;
  return sign;
}

inline void sort_weakly_decreasing(std::vector<int>& seq) { std::sort(seq.begin(), seq.end(), std::greater<int>()); }

}  // namespace hlab
