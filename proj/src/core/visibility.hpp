#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "polygon.hpp"

namespace histroute {

/// Where a horizontal ray from a vertex stops: either a vertex of the
/// histogram or, for double histograms, a point on the left/right boundary.
struct Landmark {
  enum class Kind { Vertex, Boundary };

  Kind kind = Kind::Vertex;
  int vertex = -1;
  Point point;

  bool is_vertex() const { return kind == Kind::Vertex; }

  static Landmark at_vertex(const Histogram& h, int id) { return {Kind::Vertex, id, h.point(id)}; }
  static Landmark at_boundary(Point p) { return {Kind::Boundary, -1, p}; }

  friend bool operator==(const Landmark&, const Landmark&) = default;
};

/// Closed x-range; as a vertex set, every vertex whose x lies in it.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  bool contains(const Point& p) const { return contains(p.x); }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  Interval hull(const Interval& o) const { return {std::min(lo, o.lo), std::max(hi, o.hi)}; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct VertexLandmarks {
  int cv = -1;
  Landmark left;
  Landmark right;
  Interval interval;
};

std::vector<VertexLandmarks> compute_landmarks(const Histogram& h);

bool co_visible_fast(const std::vector<VertexLandmarks>& marks, const Histogram& h, int v, int w);

/// Exact test on a point given in half units (coordinates doubled).
bool in_closed_polygon_half(const Histogram& h, std::int64_t x2, std::int64_t y2);

/// Brute force: samples every half-integer point of the spanned rectangle.
bool co_visible_naive(const Histogram& h, int v, int w);

/// The same sampling oracle with the exterior grid precomputed once, so
/// all-pairs checks on small instances cost O(1) per pair.
class NaiveVisibility {
 public:
  explicit NaiveVisibility(const Histogram& h);
  bool co_visible(int v, int w) const;

 private:
  const Histogram* h_;
  std::int64_t x0_ = 0, y0_ = 0;
  std::int64_t cols_ = 0, rows_ = 0;
  std::vector<std::int32_t> prefix_;  // (rows_+1) x (cols_+1) counts of exterior samples

  std::int32_t count(std::int64_t c0, std::int64_t r0, std::int64_t c1, std::int64_t r1) const;
};

class VisibilityGraph {
 public:
  /// Builds the graph with co_visible_fast; throws std::logic_error if the
  /// result is disconnected, which would mean a geometry bug.
  explicit VisibilityGraph(Histogram h);

  const Histogram& histogram() const { return h_; }
  int size() const { return h_.size(); }
  const VertexLandmarks& landmarks(int v) const { return marks_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexLandmarks>& landmarks() const { return marks_; }
  const Interval& interval(int v) const { return landmarks(v).interval; }

  /// Sorted neighbor ids, self excluded.
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// Sorted neighbor ids with v itself included.
  std::vector<int> closed_neighborhood(int v) const;
  /// Co-visibility; a vertex sees itself.
  bool adjacent(int v, int w) const { return v == w || matrix_[index(v, w)] != 0; }
  std::size_t edge_count() const;

  /// Vertex ids whose x lies in the interval, in id order.
  std::vector<int> vertices_in(const Interval& iv) const;

  /// `id: n1 n2 ...`, one line per vertex.
  std::string dump() const;

 private:
  Histogram h_;
  std::vector<VertexLandmarks> marks_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;

  std::size_t index(int v, int w) const { return static_cast<std::size_t>(v) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(w); }
};

std::string dump_landmarks(const VisibilityGraph& g);

}  // namespace histroute
