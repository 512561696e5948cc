#include "visibility.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace histroute {

namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

// The elementary x-intervals between consecutive distinct vertex x values,
// each with the y-range the polygon covers over it.
struct Slabs {
  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> floor, ceil;
  std::vector<int> vertical_at;  // one vertex on the vertical edge at xs[k]

  explicit Slabs(const Histogram& h) {
    for (const auto& v : h.vertices()) xs.push_back(v.point.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const std::size_t m = xs.size();
    floor.assign(m - 1, kNone);
    ceil.assign(m - 1, kNone);
    vertical_at.assign(m, -1);

    const int n = h.size();
    for (int i = 0; i < n; ++i) {
      const Point& a = h.point(i);
      const Point& b = h.point((i + 1) % n);
      if (a.x == b.x) {
        vertical_at[rank(a.x)] = i;
        continue;
      }
      // Counterclockwise: the lower chain runs left to right.
      auto& side = a.x < b.x ? floor : ceil;
      const auto r0 = rank(std::min(a.x, b.x));
      const auto r1 = rank(std::max(a.x, b.x));
      for (auto r = r0; r < r1; ++r) side[r] = a.y;
    }
  }

  std::size_t rank(std::int64_t x) const {
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  }

  bool covers(std::size_t slab, std::int64_t y) const { return floor[slab] <= y && y <= ceil[slab]; }
};

int closer_to_base(const Histogram& h, int a, int b) {
  return h.base_distance(a) <= h.base_distance(b) ? a : b;
}

Landmark stop_landmark(const Histogram& h, const Slabs& s, std::size_t k, int v, bool leftward) {
  const std::size_t last = s.xs.size() - 1;
  if ((leftward && k == 0) || (!leftward && k == last)) {
    if (h.is_simple()) return Landmark::at_vertex(h, leftward ? 0 : h.size() - 1);
    return Landmark::at_boundary({s.xs[k], h.point(v).y});
  }
  const int a = s.vertical_at[k];
  return Landmark::at_vertex(h, closer_to_base(h, a, h.vertical_partner(a)));
}

}  // namespace

std::vector<VertexLandmarks> compute_landmarks(const Histogram& h) {
  const Slabs slabs(h);
  std::vector<VertexLandmarks> out(static_cast<std::size_t>(h.size()));
  for (int v = 0; v < h.size(); ++v) {
    const Point& p = h.point(v);
    const auto home = slabs.rank(p.x);
    auto& m = out[static_cast<std::size_t>(v)];
    m.cv = h.corresponding(v);

    auto k = home;
    while (k > 0 && slabs.covers(k - 1, p.y)) --k;
    m.left = stop_landmark(h, slabs, k, v, true);

    k = home;
    while (k + 1 < slabs.xs.size() && slabs.covers(k, p.y)) ++k;
    m.right = stop_landmark(h, slabs, k, v, false);

    m.interval = {m.left.point.x, m.right.point.x};
  }
  return out;
}

bool co_visible_fast(const std::vector<VertexLandmarks>& marks, const Histogram& h, int v, int w) {
  return marks[static_cast<std::size_t>(v)].interval.contains(h.point(w)) &&
         marks[static_cast<std::size_t>(w)].interval.contains(h.point(v));
}

bool in_closed_polygon_half(const Histogram& h, std::int64_t x2, std::int64_t y2) {
  const int n = h.size();
  for (int i = 0; i < n; ++i) {
    const Point a{2 * h.point(i).x, 2 * h.point(i).y};
    const Point b{2 * h.point((i + 1) % n).x, 2 * h.point((i + 1) % n).y};
    if (std::min(a.x, b.x) <= x2 && x2 <= std::max(a.x, b.x) && std::min(a.y, b.y) <= y2 && y2 <= std::max(a.y, b.y))
      return true;
  }
  // Cast a ray to the right a quarter unit above the query point; in
  // quarter units the ray's y is odd and edge endpoints are even.
  const std::int64_t qx = 2 * x2;
  const std::int64_t qy = 2 * y2 + 1;
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Point& a = h.point(i);
    const Point& b = h.point((i + 1) % n);
    if (a.x != b.x) continue;
    const std::int64_t ex = 4 * a.x;
    const std::int64_t lo = 4 * std::min(a.y, b.y);
    const std::int64_t hi = 4 * std::max(a.y, b.y);
    if (ex > qx && lo < qy && qy < hi) inside = !inside;
  }
  return inside;
}

bool co_visible_naive(const Histogram& h, int v, int w) {
  const Point& a = h.point(v);
  const Point& b = h.point(w);
  for (auto x2 = 2 * std::min(a.x, b.x); x2 <= 2 * std::max(a.x, b.x); ++x2)
    for (auto y2 = 2 * std::min(a.y, b.y); y2 <= 2 * std::max(a.y, b.y); ++y2)
      if (!in_closed_polygon_half(h, x2, y2)) return false;
  return true;
}

NaiveVisibility::NaiveVisibility(const Histogram& h) : h_(&h) {
  std::int64_t x1 = h.point(0).x, y1 = h.point(0).y;
  x0_ = x1;
  y0_ = y1;
  for (const auto& v : h.vertices()) {
    x0_ = std::min(x0_, v.point.x);
    y0_ = std::min(y0_, v.point.y);
    x1 = std::max(x1, v.point.x);
    y1 = std::max(y1, v.point.y);
  }
  cols_ = 2 * (x1 - x0_) + 1;
  rows_ = 2 * (y1 - y0_) + 1;
  const auto stride = cols_ + 1;
  prefix_.assign(static_cast<std::size_t>((rows_ + 1) * stride), 0);
  for (std::int64_t r = 0; r < rows_; ++r) {
    for (std::int64_t c = 0; c < cols_; ++c) {
      const bool outside = !in_closed_polygon_half(h, 2 * x0_ + c, 2 * y0_ + r);
      prefix_[static_cast<std::size_t>((r + 1) * stride + c + 1)] =
          (outside ? 1 : 0) + prefix_[static_cast<std::size_t>(r * stride + c + 1)] +
          prefix_[static_cast<std::size_t>((r + 1) * stride + c)] - prefix_[static_cast<std::size_t>(r * stride + c)];
    }
  }
}

std::int32_t NaiveVisibility::count(std::int64_t c0, std::int64_t r0, std::int64_t c1, std::int64_t r1) const {
  const auto stride = cols_ + 1;
  auto at = [&](std::int64_t r, std::int64_t c) { return prefix_[static_cast<std::size_t>(r * stride + c)]; };
  return at(r1 + 1, c1 + 1) - at(r0, c1 + 1) - at(r1 + 1, c0) + at(r0, c0);
}

bool NaiveVisibility::co_visible(int v, int w) const {
  const Point& a = h_->point(v);
  const Point& b = h_->point(w);
  const auto c0 = 2 * (std::min(a.x, b.x) - x0_), c1 = 2 * (std::max(a.x, b.x) - x0_);
  const auto r0 = 2 * (std::min(a.y, b.y) - y0_), r1 = 2 * (std::max(a.y, b.y) - y0_);
  return count(c0, r0, c1, r1) == 0;
}

VisibilityGraph::VisibilityGraph(Histogram h) : h_(std::move(h)), marks_(compute_landmarks(h_)) {
  const int n = size();
  adj_.resize(static_cast<std::size_t>(n));
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (!co_visible_fast(marks_, h_, v, w)) continue;
      matrix_[index(v, w)] = matrix_[index(w, v)] = 1;
      adj_[static_cast<std::size_t>(v)].push_back(w);
      adj_[static_cast<std::size_t>(w)].push_back(v);
    }
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++reached;
      q.push(w);
    }
  }
  if (reached != n) throw std::logic_error("visibility graph is disconnected");
}

std::vector<int> VisibilityGraph::closed_neighborhood(int v) const {
  auto out = neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::size_t VisibilityGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

std::vector<int> VisibilityGraph::vertices_in(const Interval& iv) const {
  std::vector<int> out;
  for (const auto& v : h_.vertices())
    if (iv.contains(v.point)) out.push_back(v.id);
  return out;
}

std::string VisibilityGraph::dump() const {
  std::ostringstream os;
  for (int v = 0; v < size(); ++v) {
    os << v << ':';
    for (int w : neighbors(v)) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

namespace {

std::string landmark_text(const Landmark& l) {
  if (l.is_vertex()) return std::to_string(l.vertex);
  return "(" + std::to_string(l.point.x) + "," + std::to_string(l.point.y) + ")";
}

}  // namespace

std::string dump_landmarks(const VisibilityGraph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.size(); ++v) {
    const auto& m = g.landmarks(v);
    os << v << ": cv=" << m.cv << " l=" << landmark_text(m.left) << " r=" << landmark_text(m.right) << " I=["
       << m.interval.lo << ',' << m.interval.hi << "]\n";
  }
  return os.str();
}

}  // namespace histroute
