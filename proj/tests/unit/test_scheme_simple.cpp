#include <doctest.h>

#include "bits.hpp"
#include "engine.hpp"
#include "fixtures.hpp"
#include "landmarks.hpp"
#include "scheme_simple.hpp"

using namespace histroute;

namespace {

SimpleScheme::Step step_at(const SimpleScheme& sc, int s, int t) {
  return SimpleScheme::step(sc.link_table(s), sc.table(s), sc.label(t), {});
}

}  // namespace

TEST_CASE("rectangle labels") {
  const auto sc = SimpleScheme::build(VisibilityGraph(fixtures::rect()));
  CHECK(sc.label(0) == SimpleLabel{0, 1});
  CHECK(sc.label(1) == SimpleLabel{1, -1});
  CHECK(sc.label(2) == SimpleLabel{2, -1});
  CHECK(sc.label(3) == SimpleLabel{3, 2});
  CHECK(sc.width() == 2);
  CHECK(sc.encode_label(sc.label(0)) == "0001");
  CHECK(sc.encode_label(sc.label(2)) == "10");
  const auto st = step_at(sc, 1, 3);
  CHECK(st.next.id == 3);
  CHECK(st.rule == SimpleScheme::Direct);
}

TEST_CASE("steps labels, tables and steps") {
  const auto sc = SimpleScheme::build(VisibilityGraph(fixtures::steps()));
  CHECK(sc.label(4) == SimpleLabel{4, 5});
  CHECK(sc.label(0) == SimpleLabel{0, 3});
  CHECK(sc.label(3) == SimpleLabel{3, 2});
  CHECK(sc.label(7) == SimpleLabel{7, 4});
  CHECK_FALSE(sc.label(5).has_br());
  CHECK(sc.table(2).higher_left);
  CHECK_FALSE(sc.table(0).higher_left);
  CHECK_FALSE(sc.table(5).higher_left);  // l(5) = 4 at y=3, r(5) = 7 at y=4

  auto st = step_at(sc, 2, 6);
  CHECK(st.next.id == 0);
  CHECK(st.rule == SimpleScheme::OutsideInterval);
  st = step_at(sc, 0, 6);
  CHECK(st.next.id == 7);
  CHECK(st.rule == SimpleScheme::FarDominator);
  st = step_at(sc, 0, 5);  // t within [4, br(4) = 5]
  CHECK(st.next.id == 4);
  CHECK(st.rule == SimpleScheme::NearDominator);

  const auto link = sc.link_table(2);
  CHECK(link.entries.size() == 4);
  CHECK(link.self().id == 2);
  CHECK(std::vector<int>(sc.link_ids(2).begin(), sc.link_ids(2).end()) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("label encoding round trip") {
  const auto sc = SimpleScheme::build(VisibilityGraph(generate(HistogramKind::Simple, 40, 5)));
  for (int v = 0; v < sc.size(); ++v) CHECK(sc.decode_label(sc.encode_label(sc.label(v))) == sc.label(v));
  CHECK_THROWS_AS(sc.decode_label("101"), std::invalid_argument);
  CHECK_THROWS_AS(sc.decode_label("10x01"), std::invalid_argument);
}

TEST_CASE("constructor rejects inconsistent parts") {
  std::vector<SimpleLabel> labels{{0, 1}, {1, -1}, {2, -1}, {3, 2}};
  std::vector<SimpleTable> tables(4);
  std::vector<std::vector<int>> nb{{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}};
  CHECK_NOTHROW(SimpleScheme(labels, tables, nb));
  auto bad = nb;
  bad[1] = {0, 2, 3};
  CHECK_THROWS_AS(SimpleScheme(labels, tables, bad), std::invalid_argument);
  bad = nb;
  bad[2] = {3, 2, 1, 0};
  CHECK_THROWS_AS(SimpleScheme(labels, tables, bad), std::invalid_argument);
  auto wrong = labels;
  wrong[2].id = 1;
  CHECK_THROWS_AS(SimpleScheme(wrong, tables, nb), std::invalid_argument);
  CHECK_THROWS_AS(SimpleScheme(labels, std::vector<SimpleTable>(3), nb), std::invalid_argument);
  CHECK_THROWS_AS(SimpleScheme::build(VisibilityGraph(fixtures::dbl())), std::invalid_argument);
}

TEST_CASE("every step is a shortest-path step on random simple histograms") {
  for (int i = 0; i < 120; ++i) {
    const int n = 4 + 2 * (i % 40);
    const VisibilityGraph g(generate(HistogramKind::Simple, n, 7000 + static_cast<std::uint64_t>(i)));
    const auto sc = SimpleScheme::build(g);
    const auto adj = graph_adjacency(g);
    CAPTURE(n);
    CAPTURE(i);
    const auto sizes = sc.sizes();
    CHECK(sizes.label_bits <= static_cast<std::size_t>(2 * ceil_log2(static_cast<std::uint64_t>(n))));
    CHECK(sizes.table_bits == 1);
    CHECK(sizes.header_bits == 0);
    for (int t = 0; t < n; ++t) {
      const auto d = bfs_distances(adj, t);
      for (int s = 0; s < n; ++s) {
        if (s == t) continue;
        const auto st = step_at(sc, s, t);
        const int v = st.next.id;
        REQUIRE(g.adjacent(s, v));
        REQUIRE(d[v] == d[s] - 1);
      }
    }
  }
}

TEST_CASE("near dominators chosen by id match the geometric choice") {
  // The id-extreme neighbor below/above t is the x-extreme one closest to
  // the base edge whenever the step takes the near dominator.
  for (int i = 0; i < 40; ++i) {
    const VisibilityGraph g(generate(HistogramKind::Simple, 10 + 2 * i, 300 + static_cast<std::uint64_t>(i)));
    const auto& h = g.histogram();
    for (int s = 0; s < g.size(); ++s)
      for (int t = 0; t < g.size(); ++t) {
        if (s == t || g.adjacent(s, t) || !g.interval(s).contains(h.point(t))) continue;
        const auto d = dominators(g, s, t);
        const bool rightward = t > s;
        int geo = -1;
        for (int w : g.closed_neighborhood(s)) {
          const auto wx = h.point(w).x, tx = h.point(t).x;
          const bool side = rightward ? wx <= tx : wx >= tx;
          if (!side || w == t) continue;
          if (rightward ? w > t : w < t) continue;
          if (geo < 0) {
            geo = w;
            continue;
          }
          const auto gx = h.point(geo).x;
          const bool further = rightward ? wx > gx : wx < gx;
          if (further || (wx == gx && h.base_distance(w) < h.base_distance(geo))) geo = w;
        }
        CHECK(d.nd == geo);
        CHECK(h.vertex(d.nd).is_reflex());
        REQUIRE(d.fd.is_vertex());
        const auto& m = g.landmarks(d.nd);
        CHECK((d.fd == m.left || d.fd == m.right));
      }
  }
}
