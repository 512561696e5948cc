#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace histroute {

enum class HistogramKind { Simple, Double };

std::string_view to_string(HistogramKind kind);

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Side { Above, Below, OnSimpleBase };
enum class Orientation { Left, Right };
enum class Convexity { Convex, Reflex };

struct Vertex {
  int id = 0;
  Point point;
  Side side = Side::Below;
  // Left: v is the left endpoint of its horizontal edge.
  Orientation orientation = Orientation::Left;
  Convexity convexity = Convexity::Convex;

  bool is_reflex() const { return convexity == Convexity::Reflex; }
  bool is_left() const { return orientation == Orientation::Left; }
};

/// The invariants checked by validate(), in the order they are checked.
enum class Violation {
  None,
  TooFewVertices,
  OddVertexCount,
  GeneralPosition,
  NotOrthogonal,
  SelfIntersecting,
  Clockwise,
  NotXMonotone,
  VertexNumbering,
  SimpleBaseEdge,
  DoubleBaseLine,
};

std::string_view to_string(Violation violation);

struct ValidationReport {
  Violation violation = Violation::None;
  std::string message;

  bool ok() const { return violation == Violation::None; }
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  Violation violation() const { return report_.violation; }
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

ValidationReport validate(HistogramKind kind, std::span<const Point> points);

/// A validated simple or double histogram. Immutable after construction.
///
/// Simple histograms have their base edge on top (vertices 0 and n-1);
/// double histograms use the x-axis as base line. Vertex ids run
/// counterclockwise from the upper endpoint of the left boundary edge.
class Histogram {
 public:
  /// Throws ValidationError if the points do not form a valid histogram.
  Histogram(HistogramKind kind, std::vector<Point> points);

  HistogramKind kind() const { return kind_; }
  bool is_simple() const { return kind_ == HistogramKind::Simple; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
  const Point& point(int id) const { return vertex(id).point; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::vector<Point> points() const;

  /// y of the base edge for simple histograms, 0 for double histograms.
  std::int64_t base_y() const { return base_y_; }
  std::int64_t min_x() const { return min_x_; }
  std::int64_t max_x() const { return max_x_; }

  /// Vertical distance to the base line; smaller means closer.
  std::int64_t base_distance(std::int64_t y) const;
  std::int64_t base_distance(int id) const { return base_distance(point(id).y); }

  /// The vertex sharing v's horizontal edge.
  int corresponding(int id) const;
  /// The vertex sharing v's vertical edge.
  int vertical_partner(int id) const;

  friend bool operator==(const Histogram& a, const Histogram& b);

 private:
  HistogramKind kind_;
  std::vector<Vertex> vertices_;
  std::int64_t base_y_ = 0;
  std::int64_t min_x_ = 0;
  std::int64_t max_x_ = 0;
};

/// Reads the polygon text format: `kind n` followed by n `x y` lines.
/// Blank lines and `#` comments are ignored.
Histogram parse_polygon(std::string_view text);

/// Syntax-only variant used by `validate` to report invariants separately.
struct RawPolygon {
  HistogramKind kind = HistogramKind::Simple;
  std::vector<Point> points;
};
RawPolygon parse_polygon_raw(std::string_view text);

std::string write_polygon(const Histogram& h);

/// Replaces coordinates by order-preserving ranks. For double histograms
/// the sign of y is kept; for simple histograms the base edge stays on top.
Histogram normalize(const Histogram& h);

/// Deterministic random histogram with n vertices.
Histogram generate(HistogramKind kind, int n, std::uint64_t seed);

/// Reinterprets a simple histogram as a double histogram with a flat top
/// chain: the base line is placed just below the base edge. Ids are kept.
Histogram as_double(const Histogram& h);

}  // namespace histroute
