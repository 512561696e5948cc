#include "polygon.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "random.hpp"

namespace histroute {

std::string_view to_string(HistogramKind kind) {
  return kind == HistogramKind::Simple ? "simple" : "double";
}

std::string_view to_string(Violation violation) {
  switch (violation) {
    case Violation::None: return "none";
    case Violation::TooFewVertices: return "too-few-vertices";
    case Violation::OddVertexCount: return "odd-vertex-count";
    case Violation::GeneralPosition: return "general-position";
    case Violation::NotOrthogonal: return "not-orthogonal";
    case Violation::SelfIntersecting: return "self-intersecting";
    case Violation::Clockwise: return "clockwise";
    case Violation::NotXMonotone: return "not-x-monotone";
    case Violation::VertexNumbering: return "vertex-numbering";
    case Violation::SimpleBaseEdge: return "simple-base-edge";
    case Violation::DoubleBaseLine: return "double-base-line";
  }
  return "unknown";
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(std::string(to_string(report.violation)) + ": " + report.message),
      report_(std::move(report)) {}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::string fmt_point(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

ValidationReport fail(Violation v, std::string msg) { return {v, std::move(msg)}; }

struct Segment {
  Point a;
  Point b;
  std::size_t index;
};

bool segments_touch(const Segment& h, const Segment& v) {
  // h horizontal, v vertical.
  const auto hx0 = std::min(h.a.x, h.b.x), hx1 = std::max(h.a.x, h.b.x);
  const auto vy0 = std::min(v.a.y, v.b.y), vy1 = std::max(v.a.y, v.b.y);
  return hx0 <= v.a.x && v.a.x <= hx1 && vy0 <= h.a.y && h.a.y <= vy1;
}

}  // namespace

ValidationReport validate(HistogramKind kind, std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 4) return fail(Violation::TooFewVertices, "need at least 4 vertices, got " + std::to_string(n));
  if (n % 2 != 0) return fail(Violation::OddVertexCount, "orthogonal polygons have an even vertex count, got " + std::to_string(n));

  {
    std::unordered_map<std::int64_t, int> xs, ys;
    for (const auto& p : pts) {
      if (++xs[p.x] > 2) return fail(Violation::GeneralPosition, "three vertices with x = " + std::to_string(p.x));
      if (++ys[p.y] > 2) return fail(Violation::GeneralPosition, "three vertices with y = " + std::to_string(p.y));
    }
  }

  auto at = [&](std::size_t i) -> const Point& { return pts[i % n]; };
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = at(i);
    const Point& b = at(i + 1);
    const bool horizontal = a.y == b.y && a.x != b.x;
    const bool vertical = a.x == b.x && a.y != b.y;
    if (!horizontal && !vertical)
      return fail(Violation::NotOrthogonal, "edge " + std::to_string(i) + " " + fmt_point(a) + "-" + fmt_point(b) + " is not axis-parallel");
    const Point& c = at(i + 2);
    const bool next_horizontal = b.y == c.y;
    if (horizontal == next_horizontal)
      return fail(Violation::NotOrthogonal, "edges at vertex " + std::to_string((i + 1) % n) + " do not alternate");
  }

  {
    std::vector<Segment> hs, vs;
    for (std::size_t i = 0; i < n; ++i) {
      Segment s{at(i), at(i + 1), i};
      (s.a.y == s.b.y ? hs : vs).push_back(s);
    }
    for (const auto& h : hs) {
      for (const auto& v : vs) {
        const bool adjacent = (h.index + 1) % n == v.index || (v.index + 1) % n == h.index;
        if (!adjacent && segments_touch(h, v))
          return fail(Violation::SelfIntersecting, "edges " + std::to_string(h.index) + " and " + std::to_string(v.index) + " intersect");
      }
    }
  }

  {
    std::int64_t twice_area = 0;
    for (std::size_t i = 0; i < n; ++i) twice_area += at(i).x * at(i + 1).y - at(i + 1).x * at(i).y;
    if (twice_area <= 0) return fail(Violation::Clockwise, "vertices must be listed counterclockwise");
  }

  {
    int changes = 0;
    int first = 0, prev = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto dx = at(i + 1).x - at(i).x;
      if (dx == 0) continue;
      const int dir = dx > 0 ? 1 : -1;
      if (first == 0) first = dir;
      if (prev != 0 && dir != prev) ++changes;
      prev = dir;
    }
    if (prev != first) ++changes;
    if (changes != 2) return fail(Violation::NotXMonotone, "boundary is not x-monotone");
  }

  const auto [min_x, max_x] = std::minmax_element(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  if (pts[0].x != min_x->x || pts[1].x != min_x->x)
    return fail(Violation::VertexNumbering, "vertex 0 must be the upper endpoint of the left boundary edge");
  if (kind == HistogramKind::Simple) {
    const auto lex_max = std::max_element(pts.begin(), pts.end());
    if (static_cast<std::size_t>(lex_max - pts.begin()) != n - 1)
      return fail(Violation::VertexNumbering, "vertex n-1 must be the lexicographically largest vertex");
    const auto top = pts[0].y;
    if (pts[n - 1].y != top) return fail(Violation::SimpleBaseEdge, "vertices 0 and n-1 must span the base edge");
    for (std::size_t i = 1; i + 1 < n; ++i)
      if (pts[i].y >= top) return fail(Violation::SimpleBaseEdge, "vertex " + std::to_string(i) + " is not below the base edge");
  } else {
    std::size_t k = 1;
    while (k < n && pts[k].x != max_x->x) ++k;
    // Counterclockwise traversal climbs the right boundary from k to k+1.
    for (std::size_t i = 1; i <= k; ++i)
      if (pts[i].y >= 0)
        return fail(Violation::DoubleBaseLine, "bottom-chain vertex " + std::to_string(i) + " " + fmt_point(pts[i]) + " is not below y = 0");
    for (std::size_t i = k + 1; i <= n; ++i)
      if (at(i).y <= 0)
        return fail(Violation::DoubleBaseLine, "top-chain vertex " + std::to_string(i % n) + " " + fmt_point(at(i)) + " is not above y = 0");
  }
  return {};
}

Histogram::Histogram(HistogramKind kind, std::vector<Point> points) : kind_(kind) {
  auto report = validate(kind, points);
  if (!report.ok()) throw ValidationError(std::move(report));

  const int n = static_cast<int>(points.size());
  vertices_.resize(points.size());
  min_x_ = points[0].x;
  max_x_ = points[0].x;
  for (const auto& p : points) {
    min_x_ = std::min(min_x_, p.x);
    max_x_ = std::max(max_x_, p.x);
  }
  base_y_ = kind == HistogramKind::Simple ? points[0].y : 0;
  for (int i = 0; i < n; ++i) {
    const Point& prev = points[static_cast<std::size_t>((i + n - 1) % n)];
    const Point& p = points[static_cast<std::size_t>(i)];
    const Point& next = points[static_cast<std::size_t>((i + 1) % n)];
    Vertex& v = vertices_[static_cast<std::size_t>(i)];
    v.id = i;
    v.point = p;
    const auto cross = (p.x - prev.x) * (next.y - p.y) - (p.y - prev.y) * (next.x - p.x);
    v.convexity = cross > 0 ? Convexity::Convex : Convexity::Reflex;
    const Point& cv = next.y == p.y ? next : prev;
    v.orientation = cv.x > p.x ? Orientation::Left : Orientation::Right;
    if (kind == HistogramKind::Simple)
      v.side = (i == 0 || i == n - 1) ? Side::OnSimpleBase : Side::Below;
    else
      v.side = p.y < 0 ? Side::Below : Side::Above;
  }
}

std::vector<Point> Histogram::points() const {
  std::vector<Point> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.point);
  return out;
}

std::int64_t Histogram::base_distance(std::int64_t y) const {
  return kind_ == HistogramKind::Simple ? base_y_ - y : (y < 0 ? -y : y);
}

int Histogram::corresponding(int id) const {
  const int n = size();
  const int next = (id + 1) % n;
  return point(next).y == point(id).y ? next : (id + n - 1) % n;
}

int Histogram::vertical_partner(int id) const {
  const int n = size();
  const int next = (id + 1) % n;
  return point(next).x == point(id).x ? next : (id + n - 1) % n;
}

bool operator==(const Histogram& a, const Histogram& b) {
  if (a.kind_ != b.kind_ || a.vertices_.size() != b.vertices_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i)
    if (a.vertices_[i].point != b.vertices_[i].point) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::int64_t parse_int(const Token& tok, int line) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (!tok.text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError(line, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  return value;
}

}  // namespace

RawPolygon parse_polygon_raw(std::string_view text) {
  RawPolygon out;
  bool have_header = false;
  std::int64_t expected = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens[0].text == "simple")
        out.kind = HistogramKind::Simple;
      else if (tokens[0].text == "double")
        out.kind = HistogramKind::Double;
      else
        throw ParseError(line_no, tokens[0].column, "expected 'simple' or 'double', got '" + std::string(tokens[0].text) + "'");
      if (tokens.size() < 2) throw ParseError(line_no, static_cast<int>(line.size()) + 1, "missing vertex count");
      if (tokens.size() > 2) throw ParseError(line_no, tokens[2].column, "unexpected token after vertex count");
      expected = parse_int(tokens[1], line_no);
      if (expected < 0) throw ParseError(line_no, tokens[1].column, "negative vertex count");
      have_header = true;
    } else {
      if (static_cast<std::int64_t>(out.points.size()) == expected)
        throw ParseError(line_no, tokens[0].column, "unexpected content after " + std::to_string(expected) + " vertices");
      if (tokens.size() < 2) throw ParseError(line_no, static_cast<int>(line.size()) + 1, "expected 'x y'");
      if (tokens.size() > 2) throw ParseError(line_no, tokens[2].column, "unexpected token after 'x y'");
      out.points.push_back({parse_int(tokens[0], line_no), parse_int(tokens[1], line_no)});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, 1, "missing header line 'kind n'");
  if (static_cast<std::int64_t>(out.points.size()) != expected)
    throw ParseError(line_no, 1, "expected " + std::to_string(expected) + " vertices, got " + std::to_string(out.points.size()));
  return out;
}

Histogram parse_polygon(std::string_view text) {
  auto raw = parse_polygon_raw(text);
  return Histogram(raw.kind, std::move(raw.points));
}

std::string write_polygon(const Histogram& h) {
  std::ostringstream os;
  os << to_string(h.kind()) << ' ' << h.size() << '\n';
  for (const auto& v : h.vertices()) os << v.point.x << ' ' << v.point.y << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

std::map<std::int64_t, std::int64_t> rank_map(std::vector<std::int64_t> values, std::int64_t first, std::int64_t step) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::map<std::int64_t, std::int64_t> out;
  std::int64_t r = first;
  for (auto v : values) {
    out[v] = r;
    r += step;
  }
  return out;
}

}  // namespace

Histogram normalize(const Histogram& h) {
  std::vector<std::int64_t> xs, ys_below, ys_above, ys;
  for (const auto& v : h.vertices()) {
    xs.push_back(v.point.x);
    ys.push_back(v.point.y);
    (v.point.y < 0 ? ys_below : ys_above).push_back(v.point.y);
  }
  const auto xr = rank_map(xs, 0, 1);
  std::map<std::int64_t, std::int64_t> yr;
  if (h.is_simple()) {
    yr = rank_map(ys, 0, 1);
  } else {
    // Nearest to the base line gets magnitude 1 on each side.
    for (auto& y : ys_below) y = -y;
    for (auto [mag, r] : rank_map(ys_below, 1, 1)) yr[-mag] = -r;
    for (auto [y, r] : rank_map(ys_above, 1, 1)) yr[y] = r;
  }
  std::vector<Point> pts;
  for (const auto& v : h.vertices()) pts.push_back({xr.at(v.point.x), yr.at(v.point.y)});
  return Histogram(h.kind(), std::move(pts));
}

Histogram as_double(const Histogram& h) {
  if (!h.is_simple()) return h;
  std::vector<std::int64_t> ys;
  for (const auto& v : h.vertices())
    if (v.side != Side::OnSimpleBase) ys.push_back(h.base_y() - v.point.y);
  const auto depth = rank_map(ys, 1, 1);
  std::vector<Point> pts;
  for (const auto& v : h.vertices()) {
    const auto y = v.side == Side::OnSimpleBase ? 1 : -depth.at(h.base_y() - v.point.y);
    pts.push_back({v.point.x, y});
  }
  return Histogram(HistogramKind::Double, std::move(pts));
}

// ---------------------------------------------------------------------------
// Generator

namespace {

struct Piece {
  std::int64_t x0, x1, y;
};

// Splits [0, width] at the given sorted breakpoints and assigns heights.
std::vector<Piece> make_chain(const std::vector<std::int64_t>& breaks, std::int64_t width, std::vector<std::int64_t> heights) {
  std::vector<Piece> out;
  std::int64_t x0 = 0;
  for (std::size_t i = 0; i <= breaks.size(); ++i) {
    const auto x1 = i < breaks.size() ? breaks[i] : width;
    out.push_back({x0, x1, heights[i]});
    x0 = x1;
  }
  return out;
}

}  // namespace

Histogram generate(HistogramKind kind, int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("generate: n must be even and at least 4, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  const std::int64_t columns = n / 2;  // distinct x values
  const std::int64_t width = columns - 1;
  std::vector<Point> pts;

  if (kind == HistogramKind::Simple) {
    const auto pieces = static_cast<std::size_t>(columns - 1);
    std::vector<std::int64_t> heights(pieces);
    std::iota(heights.begin(), heights.end(), 0);
    detail::shuffle(heights, rng);
    const auto top = static_cast<std::int64_t>(pieces);
    pts.push_back({0, top});
    for (std::size_t i = 0; i < pieces; ++i) {
      pts.push_back({static_cast<std::int64_t>(i), heights[i]});
      pts.push_back({static_cast<std::int64_t>(i) + 1, heights[i]});
    }
    pts.push_back({width, top});
    return Histogram(kind, std::move(pts));
  }

  // Double: split the columns between a bottom chain of p pieces and a top
  // chain of q pieces; interior breakpoints are dealt out at random.
  const auto p = static_cast<std::size_t>(1 + detail::uniform_below(rng, static_cast<std::uint64_t>(columns - 1)));
  const auto q = static_cast<std::size_t>(columns) - p;
  std::vector<std::int64_t> interior(static_cast<std::size_t>(std::max<std::int64_t>(0, columns - 2)));
  std::iota(interior.begin(), interior.end(), 1);
  detail::shuffle(interior, rng);
  std::vector<std::int64_t> bottom_breaks(interior.begin(), interior.begin() + static_cast<std::ptrdiff_t>(p - 1));
  std::vector<std::int64_t> top_breaks(interior.begin() + static_cast<std::ptrdiff_t>(p - 1), interior.end());
  std::sort(bottom_breaks.begin(), bottom_breaks.end());
  std::sort(top_breaks.begin(), top_breaks.end());

  std::vector<std::int64_t> bottom_heights(p), top_heights(q);
  std::iota(bottom_heights.begin(), bottom_heights.end(), 1);
  std::iota(top_heights.begin(), top_heights.end(), 1);
  detail::shuffle(bottom_heights, rng);
  detail::shuffle(top_heights, rng);
  for (auto& y : bottom_heights) y = -y;

  const auto bottom = make_chain(bottom_breaks, width, bottom_heights);
  const auto top = make_chain(top_breaks, width, top_heights);

  pts.push_back({0, top.front().y});
  for (const auto& piece : bottom) {
    pts.push_back({piece.x0, piece.y});
    pts.push_back({piece.x1, piece.y});
  }
  for (auto it = top.rbegin(); it != top.rend(); ++it) {
    pts.push_back({it->x1, it->y});
    if (it->x0 != 0) pts.push_back({it->x0, it->y});
  }
  return Histogram(kind, std::move(pts));
}

}  // namespace histroute
