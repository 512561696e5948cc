#include "landmarks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace histroute {

namespace {

// Strictly better candidate for an extreme-x choice: `more` picks the
// larger x, ties go to the vertex closer to the base line.
bool beats(const Histogram& h, int cand, int best, bool more) {
  if (best < 0) return true;
  const auto cx = h.point(cand).x, bx = h.point(best).x;
  if (cx != bx) return more ? cx > bx : cx < bx;
  return h.base_distance(cand) < h.base_distance(best);
}

}  // namespace

DominatorPair dominators(const VisibilityGraph& g, int s, int t) {
  const auto& h = g.histogram();
  if (s == t || g.adjacent(s, t) || !g.interval(s).contains(h.point(t)))
    throw std::invalid_argument("dominators: target " + std::to_string(t) + " is not in I(" + std::to_string(s) +
                                ") minus N(" + std::to_string(s) + ")");
  const auto& marks = g.landmarks(s);
  DominatorPair out;

  if (h.is_simple()) {
    const auto nb = g.closed_neighborhood(s);
    const bool rightward = t > s;
    int fd = -1;
    for (int w : nb) {
      if (rightward) {
        if (w < t) out.nd = w;
        if (w > t && fd < 0) fd = w;
      } else {
        if (w > t && out.nd < 0) out.nd = w;
        if (w < t) fd = w;
      }
    }
    out.fd = fd >= 0 ? Landmark::at_vertex(h, fd) : (rightward ? marks.right : marks.left);
    return out;
  }

  const auto tx = h.point(t).x;
  const bool rightward = tx > h.point(s).x;
  int fd = -1;
  for (int w : g.closed_neighborhood(s)) {
    const auto wx = h.point(w).x;
    if (rightward) {
      if (wx <= tx && beats(h, w, out.nd, true)) out.nd = w;
      if (wx >= tx && beats(h, w, fd, false)) fd = w;
    } else {
      if (wx >= tx && beats(h, w, out.nd, false)) out.nd = w;
      if (wx <= tx && beats(h, w, fd, true)) fd = w;
    }
  }
  out.fd = fd >= 0 ? Landmark::at_vertex(h, fd) : (rightward ? marks.right : marks.left);
  return out;
}

bool has_breakpoint(const Histogram& h, int v) {
  const auto& vx = h.vertex(v);
  return h.is_simple() && (vx.is_reflex() || vx.side == Side::OnSimpleBase);
}

int breakpoint(const VisibilityGraph& g, int v) {
  const auto& h = g.histogram();
  if (!has_breakpoint(h, v))
    throw std::invalid_argument("breakpoint: vertex " + std::to_string(v) + " is neither reflex nor a base vertex");
  const auto& p = h.point(v);
  const bool rightward = v == 0 || (v != h.size() - 1 && !h.vertex(v).is_left());
  int best = -1;
  // Bottom horizontal edges are (i, i+1) for i in [1, n-3].
  for (int i = 1; i + 2 < h.size(); ++i) {
    const auto& a = h.point(i);
    const auto& b = h.point(i + 1);
    if (a.y != b.y || a.y >= p.y) continue;
    const int left = a.x < b.x ? i : i + 1;
    const int right = a.x < b.x ? i + 1 : i;
    const int end = rightward ? left : right;
    const bool placed = rightward ? h.point(end).x >= p.x : h.point(end).x <= p.x;
    if (!placed || !g.adjacent(v, end)) continue;
    if (best < 0 || a.y > h.point(best).y) best = end;
  }
  if (best < 0) throw std::logic_error("breakpoint: no visible edge below vertex " + std::to_string(v));
  return best;
}

ExtensionSequences extension_sequences(const VisibilityGraph& g, int s) {
  const auto& h = g.histogram();
  const auto nb = g.closed_neighborhood(s);
  ExtensionSequences out;
  out.a.push_back(s);
  out.b.push_back(s);
  out.left.push_back(g.interval(s).lo);
  out.right.push_back(g.interval(s).hi);
  for (;;) {
    int next = -1;
    for (int w : nb)
      if (g.interval(w).lo < out.left.back() && beats(h, w, next, false)) next = w;
    if (next < 0) break;
    out.a.push_back(next);
    out.left.push_back(g.interval(next).lo);
  }
  for (;;) {
    int next = -1;
    for (int w : nb)
      if (g.interval(w).hi > out.right.back() && beats(h, w, next, true)) next = w;
    if (next < 0) break;
    out.b.push_back(next);
    out.right.push_back(g.interval(next).hi);
  }
  return out;
}

KDominators k_dominators(const VisibilityGraph& g, int s, int kmax) {
  const auto& h = g.histogram();
  if (h.is_simple()) throw std::invalid_argument("k_dominators: requires a double histogram");
  if (kmax < 0) throw std::invalid_argument("k_dominators: kmax must be non-negative");
  KDominators out;
  out.bd.push_back(s);
  out.td.push_back(s);
  out.intervals.push_back({h.point(s).x, h.point(s).x});
  // Closest to the base line first, then leftmost.
  auto better = [&](int c, int best) {
    if (best < 0) return true;
    const auto dc = h.base_distance(c), db = h.base_distance(best);
    return dc != db ? dc < db : h.point(c).x < h.point(best).x;
  };
  for (int k = 1; k <= kmax; ++k) {
    const auto iv = g.interval(out.bd.back()).hull(g.interval(out.td.back()));
    int bd = -1, td = -1;
    for (const auto& v : h.vertices()) {
      if (!iv.contains(v.point)) continue;
      if (v.point.y < 0) {
        if (better(v.id, bd)) bd = v.id;
      } else if (better(v.id, td)) {
        td = v.id;
      }
    }
    if (bd < 0) bd = td;
    if (td < 0) td = bd;
    out.bd.push_back(bd);
    out.td.push_back(td);
    out.intervals.push_back(iv);
  }
  return out;
}

namespace {

// Walks from the level-k dominator back to s, staying on the path's own
// side whenever both dominators of the previous level are visible.
std::vector<int> walk_back(const VisibilityGraph& g, const KDominators& kd, int k, bool bottom) {
  const auto& own = bottom ? kd.bd : kd.td;
  const auto& other = bottom ? kd.td : kd.bd;
  std::vector<int> path{own[static_cast<std::size_t>(k)]};
  for (int i = k - 1; i >= 0; --i) {
    const int cur = path.back();
    const int a = own[static_cast<std::size_t>(i)], b = other[static_cast<std::size_t>(i)];
    if (g.adjacent(cur, a))
      path.push_back(a);
    else if (g.adjacent(cur, b))
      path.push_back(b);
    else
      throw std::logic_error("canonical path: vertex " + std::to_string(cur) + " sees neither dominator of level " +
                             std::to_string(i));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> collapse(std::vector<int> path) {
  path.erase(std::unique(path.begin(), path.end()), path.end());
  return path;
}

}  // namespace

CanonicalPaths canonical_paths(const VisibilityGraph& g, const KDominators& kd, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= kd.bd.size())
    throw std::invalid_argument("canonical_paths: k out of range");
  CanonicalPaths out;
  out.bottom_raw = walk_back(g, kd, k, true);
  out.top_raw = walk_back(g, kd, k, false);
  out.bottom = collapse(out.bottom_raw);
  out.top = collapse(out.top_raw);
  return out;
}

CanonicalPaths canonical_paths(const VisibilityGraph& g, int s, int k) {
  return canonical_paths(g, k_dominators(g, s, k), k);
}

bool canonical_bit(const VisibilityGraph& g, const KDominators& kd) {
  if (kd.bd.size() < 3) throw std::invalid_argument("canonical_bit: needs dominators up to k = 2");
  if (kd.bd[1] == kd.td[1]) return false;
  const auto paths = canonical_paths(g, kd, 2);
  return paths.bottom_raw[1] == kd.td[1];
}

}  // namespace histroute
