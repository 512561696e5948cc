#include <doctest.h>

#include "fixtures.hpp"
#include "visibility.hpp"

using namespace histroute;

namespace {

const std::vector<std::vector<int>> kStepsNeighbors{
    {1, 2, 3, 4, 7}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2, 4, 7}, {0, 3, 5, 6, 7}, {4, 6, 7}, {4, 5, 7}, {0, 3, 4, 5, 6}};

const std::vector<std::vector<int>> kDblNeighbors{
    {1, 2, 3, 4, 10, 11}, {0, 2, 3},          {0, 1, 3},           {0, 1, 2, 4, 9, 10, 11},
    {0, 3, 5, 6, 9, 10, 11}, {4, 6, 9, 10, 11}, {4, 5, 7, 8, 9, 10}, {6, 8, 9},
    {6, 7, 9},            {3, 4, 5, 6, 7, 8, 10}, {0, 3, 4, 5, 6, 9, 11}, {0, 3, 4, 5, 10}};

Landmark vtx(const Histogram& h, int id) { return Landmark::at_vertex(h, id); }

}  // namespace

TEST_CASE("point membership on half-unit samples") {
  const auto h = fixtures::steps();
  CHECK(in_closed_polygon_half(h, 0, 0));      // vertex
  CHECK(in_closed_polygon_half(h, 1, 4));      // on the left edge
  CHECK(in_closed_polygon_half(h, 3, 3));      // interior
  CHECK_FALSE(in_closed_polygon_half(h, 5, 1));  // (2.5, 0.5) under the step
  CHECK_FALSE(in_closed_polygon_half(h, 5, 4));  // (2.5, 2)
  CHECK(in_closed_polygon_half(h, 5, 6));      // (2.5, 3) on edge 3-4
  CHECK_FALSE(in_closed_polygon_half(h, -1, 2));
  CHECK_FALSE(in_closed_polygon_half(h, 3, 9));
}

TEST_CASE("naive visibility examples") {
  const auto r = fixtures::rect();
  for (int v = 0; v < 4; ++v)
    for (int w = 0; w < 4; ++w) CHECK(co_visible_naive(r, v, w));
  const auto h = fixtures::steps();
  CHECK_FALSE(co_visible_naive(h, 0, 5));
  CHECK_FALSE(co_visible_naive(h, 2, 4));
  CHECK(co_visible_naive(h, 5, 7));
  CHECK(co_visible_naive(h, 3, 3));
}

TEST_CASE("fast visibility examples") {
  const auto r = fixtures::rect();
  const auto rm = compute_landmarks(r);
  CHECK(co_visible_fast(rm, r, 1, 3));
  const auto h = fixtures::steps();
  const auto m = compute_landmarks(h);
  CHECK_FALSE(co_visible_fast(m, h, 2, 4));
  CHECK(co_visible_fast(m, h, 5, 7));
}

TEST_CASE("rectangle landmarks") {
  const auto h = fixtures::rect();
  const auto m = compute_landmarks(h);
  CHECK(m[1].cv == 2);
  CHECK(m[1].left == vtx(h, 0));
  CHECK(m[1].right == vtx(h, 3));
  CHECK(m[1].interval == Interval{0, 3});
  CHECK(m[0].left == vtx(h, 0));
  CHECK(m[3].right == vtx(h, 3));
}

TEST_CASE("steps landmarks") {
  const auto h = fixtures::steps();
  const auto m = compute_landmarks(h);
  const std::vector<int> left{0, 0, 0, 0, 0, 4, 4, 0};
  const std::vector<int> right{7, 3, 3, 7, 7, 7, 7, 7};
  const std::vector<Interval> iv{{0, 7}, {0, 2}, {0, 2}, {0, 7}, {0, 7}, {3, 7}, {3, 7}, {0, 7}};
  for (int v = 0; v < 8; ++v) {
    CAPTURE(v);
    CHECK(m[v].left == vtx(h, left[v]));
    CHECK(m[v].right == vtx(h, right[v]));
    CHECK(m[v].interval == iv[v]);
    CHECK(m[v].cv == h.corresponding(v));
  }
}

TEST_CASE("double landmarks") {
  const auto h = fixtures::dbl();
  const auto m = compute_landmarks(h);
  auto left_boundary = [&](int v) { return Landmark::at_boundary({0, h.point(v).y}); };
  auto right_boundary = [&](int v) { return Landmark::at_boundary({9, h.point(v).y}); };
  for (int v : {0, 1, 2, 3, 4, 9, 10, 11}) CHECK(m[v].left == left_boundary(v));
  for (int v : {5, 6}) CHECK(m[v].left == vtx(h, 4));
  for (int v : {7, 8}) CHECK(m[v].left == vtx(h, 9));
  for (int v : {0, 11}) CHECK(m[v].right == vtx(h, 10));
  for (int v : {1, 2}) CHECK(m[v].right == vtx(h, 3));
  for (int v : {3, 4, 5, 6, 7, 8, 9, 10}) CHECK(m[v].right == right_boundary(v));
  const std::vector<Interval> iv{{0, 5}, {0, 2}, {0, 2}, {0, 9}, {0, 9}, {3, 9},
                                 {3, 9}, {7, 9}, {7, 9}, {0, 9}, {0, 9}, {0, 5}};
  for (int v = 0; v < 12; ++v) CHECK(m[v].interval == iv[v]);
}

TEST_CASE("graph of the rectangles is complete") {
  for (const auto& h : {fixtures::rect(), fixtures::double_rect()}) {
    const VisibilityGraph g(h);
    CHECK(g.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(g.neighbors(v).size() == 3);
  }
}

TEST_CASE("graph neighborhoods match the oracle values") {
  const VisibilityGraph s(fixtures::steps());
  for (int v = 0; v < 8; ++v) CHECK(s.neighbors(v) == kStepsNeighbors[v]);
  CHECK(s.edge_count() == 16);
  CHECK(s.closed_neighborhood(2) == std::vector<int>{0, 1, 2, 3});
  CHECK(s.dump().substr(0, 14) == "0: 1 2 3 4 7\n1");

  const VisibilityGraph d(fixtures::dbl());
  for (int v = 0; v < 12; ++v) CHECK(d.neighbors(v) == kDblNeighbors[v]);
  CHECK(d.edge_count() == 31);
  CHECK(d.vertices_in({7, 9}) == std::vector<int>{6, 7, 8, 9});
}

TEST_CASE("fast and naive visibility agree on random instances") {
  for (const auto& e : fixtures::small_corpus(60, 60, 500)) {
    const auto h = generate(e.kind, e.n, e.seed);
    const VisibilityGraph g(h);
    const NaiveVisibility naive(h);
    CAPTURE(e.n);
    CAPTURE(e.seed);
    for (int v = 0; v < h.size(); ++v)
      for (int w = 0; w < h.size(); ++w) REQUIRE(g.adjacent(v, w) == naive.co_visible(v, w));
    if (e.n <= 20)
      for (int v = 0; v < h.size(); ++v)
        for (int w = 0; w < h.size(); ++w) REQUIRE(naive.co_visible(v, w) == co_visible_naive(h, v, w));
  }
}

TEST_CASE("visibility invariants") {
  for (const auto& e : fixtures::small_corpus(40, 50, 900)) {
    const VisibilityGraph g(generate(e.kind, e.n, e.seed));
    const auto& h = g.histogram();
    const int n = g.size();
    CAPTURE(e.n);
    CAPTURE(e.seed);
    for (int v = 0; v < n; ++v) {
      CHECK(g.interval(v).contains(h.point(v)));
      for (int w : g.neighbors(v)) {
        CHECK(g.adjacent(w, v));
        CHECK(g.interval(v).contains(h.point(w)));
      }
    }

    // Overlapping intervals: a_x <= b_x <= c_x <= d_x, a in I(c), d in I(b) => b sees c.
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto bx = h.point(b).x, cx = h.point(c).x;
        if (bx > cx) continue;
        bool has_a = false, has_d = false;
        for (int a = 0; a < n; ++a)
          if (h.point(a).x <= bx && g.interval(c).contains(h.point(a))) has_a = true;
        for (int d = 0; d < n; ++d)
          if (h.point(d).x >= cx && g.interval(b).contains(h.point(d))) has_d = true;
        if (has_a && has_d) CHECK(g.adjacent(b, c));
      }

    // Laminar family on each side of the base line (double kind).
    if (e.kind == HistogramKind::Double) {
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
          if (h.point(v).y * h.point(w).y <= 0) continue;
          const auto a = g.vertices_in(g.interval(v)), b = g.vertices_in(g.interval(w));
          std::vector<int> common;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
          CHECK((common.empty() || common == a || common == b));
        }
    }

    if (e.kind == HistogramKind::Simple) {
      for (const auto& v : h.vertices()) {
        const int id = v.id;
        const auto& m = g.landmarks(id);
        // Interval inclusion for r-reflex vertices and the left base vertex.
        if ((v.is_reflex() && !v.is_left()) || id == 0) {
          const Interval outer{v.point.x, m.right.point.x};
          for (int u = id + 1; u < m.right.vertex; ++u) CHECK(outer.contains(g.interval(u)));
        }
        // A non-base left vertex sees exactly cv(v) and r(v) to its right.
        if (v.side != Side::OnSimpleBase) {
          std::vector<int> seen;
          for (int w : g.neighbors(id)) {
            const bool beyond = v.is_left() ? w > id : w < id;
            if (beyond) seen.push_back(w);
          }
          const int far = v.is_left() ? m.right.vertex : m.left.vertex;
          std::vector<int> expected{m.cv, far};
          std::sort(expected.begin(), expected.end());
          expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
          CHECK(seen == expected);
        }
        // Intervals are index ranges.
        const auto members = g.vertices_in(g.interval(id));
        CHECK(members.back() - members.front() + 1 == static_cast<int>(members.size()));
      }
    }
  }
}
