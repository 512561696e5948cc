#pragma once

#include <cstdint>
#include <vector>

#include "polygon.hpp"

namespace fixtures {

using histroute::Histogram;
using histroute::HistogramKind;

inline Histogram rect() { return Histogram(HistogramKind::Simple, {{0, 3}, {0, 0}, {3, 0}, {3, 3}}); }

inline Histogram steps() {
  return Histogram(HistogramKind::Simple, {{0, 4}, {0, 0}, {2, 0}, {2, 3}, {3, 3}, {3, 1}, {7, 1}, {7, 4}});
}

inline Histogram dbl() {
  return Histogram(HistogramKind::Double,
                   {{0, 3}, {0, -3}, {2, -3}, {2, -1}, {3, -1}, {3, -2}, {9, -2}, {9, 4}, {7, 4}, {7, 1}, {5, 1}, {5, 3}});
}

inline Histogram double_rect() { return Histogram(HistogramKind::Double, {{0, 2}, {0, -1}, {4, -1}, {4, 2}}); }

// Brute-force hop distances from an adjacency predicate.
template <class Adj>
std::vector<std::vector<int>> floyd_warshall(int n, Adj adjacent) {
  const int inf = n + 1;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j)
        d[i][j] = 0;
      else if (adjacent(i, j))
        d[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

struct CorpusEntry {
  HistogramKind kind;
  int n;
  std::uint64_t seed;
};

// Small instances of both kinds; even sizes cycled over [4, max_n].
inline std::vector<CorpusEntry> small_corpus(int count, int max_n, std::uint64_t base_seed) {
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const int n = 4 + 2 * (i % ((max_n - 4) / 2 + 1));
    out.push_back({i % 2 == 0 ? HistogramKind::Simple : HistogramKind::Double, n, base_seed + static_cast<std::uint64_t>(i)});
  }
  return out;
}

}  // namespace fixtures
