#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "visibility.hpp"

namespace histroute {

struct DominatorPair {
  int nd = -1;
  Landmark fd;  // boundary point when no neighbor lies beyond t
};

/// Near and far dominator of s with respect to t, for t in I(s) \ N(s).
/// Simple histograms compare ids, double histograms compare x with ties
/// broken toward the base line. Throws std::invalid_argument otherwise.
DominatorPair dominators(const VisibilityGraph& g, int s, int t);

/// Breakpoint of v in a simple histogram. Right-looking for r-reflex
/// vertices and vertex 0, left-looking for l-reflex vertices and vertex n-1.
/// Throws std::invalid_argument for other vertices, std::logic_error if
/// no candidate edge exists.
int breakpoint(const VisibilityGraph& g, int v);
bool has_breakpoint(const Histogram& h, int v);

struct ExtensionSequences {
  std::vector<int> a;                // a^0 = s, ..., a*
  std::vector<int> b;                // b^0 = s, ..., b*
  std::vector<std::int64_t> left;    // l(a^i).x
  std::vector<std::int64_t> right;   // r(b^i).x

  Interval second_interval() const { return {left.back(), right.back()}; }
};

ExtensionSequences extension_sequences(const VisibilityGraph& g, int s);

struct KDominators {
  std::vector<int> bd;
  std::vector<int> td;
  std::vector<Interval> intervals;  // I^0 .. I^kmax
};

/// Requires a double histogram.
KDominators k_dominators(const VisibilityGraph& g, int s, int kmax);

struct CanonicalPaths {
  std::vector<int> bottom;  // ends at bd^k(s)
  std::vector<int> top;     // ends at td^k(s)
  // Uncollapsed: entry i is bd^i(s) or td^i(s).
  std::vector<int> bottom_raw;
  std::vector<int> top_raw;
};

/// Paths from s through successive dominators. Repeated consecutive
/// vertices are collapsed in `bottom`/`top`.
CanonicalPaths canonical_paths(const VisibilityGraph& g, const KDominators& kd, int k);
CanonicalPaths canonical_paths(const VisibilityGraph& g, int s, int k);

/// True when the second vertex of the bottom path of length 2 is td(s)
/// rather than bd(s). False whenever bd(s) = td(s).
bool canonical_bit(const VisibilityGraph& g, const KDominators& kd);

}  // namespace histroute
