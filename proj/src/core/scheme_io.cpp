#include "scheme_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bits.hpp"

namespace histroute {

std::string_view to_string(SchemeKind kind) { return kind == SchemeKind::Simple ? "simple" : "double"; }

namespace {

void write_neighbors(std::ostream& os, std::span<const int> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? " " : "") << ids[i];
}

void write_sizes(std::ostream& os, const SizeReport& s, std::size_t lab_bound, std::size_t tab_bound, std::size_t hdr_bound) {
  os << "# width=" << s.width << " labBits=" << s.label_bits << " tabBits=" << s.table_bits << " hdrBits=" << s.header_bits
     << '\n'
     << "# bounds labBits<=" << lab_bound << " tabBits<=" << tab_bound << " hdrBits<=" << hdr_bound << '\n';
}

struct Field {
  std::string text;
  int column;
};

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next non-blank, non-comment line; false at end of input.
  bool next() {
    while (std::getline(is_, line_)) {
      ++number_;
      const auto first = line_.find_first_not_of(" \t\r");
      if (first == std::string::npos || line_[first] == '#') continue;
      return true;
    }
    return false;
  }

  int number() const { return number_; }
  const std::string& line() const { return line_; }

  std::vector<Field> fields() const {
    std::vector<Field> out;
    std::size_t start = 0;
    for (;;) {
      const auto bar = line_.find('|', start);
      out.push_back({line_.substr(start, bar == std::string::npos ? std::string::npos : bar - start),
                     static_cast<int>(start) + 1});
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    return out;
  }

  [[noreturn]] void fail(int column, const std::string& what) const { throw ParseError(number_, column, what); }

  std::vector<std::int64_t> ints(const Field& f) const {
    std::vector<std::int64_t> out;
    std::istringstream in(f.text);
    std::string tok;
    while (in >> tok) {
      std::int64_t v = 0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) fail(f.column, "expected an integer, got '" + tok + "'");
      out.push_back(v);
    }
    return out;
  }

  std::vector<std::int64_t> ints(const Field& f, std::size_t count, const char* what) const {
    auto v = ints(f);
    if (v.size() != count) fail(f.column, std::string("expected ") + std::to_string(count) + " " + what);
    return v;
  }

  std::string bits(const Field& f) const {
    std::istringstream in(f.text);
    std::string tok, extra;
    in >> tok;
    if (in >> extra) fail(f.column, "expected one bit string");
    if (tok == "-") return {};
    if (tok.empty() || tok.find_first_not_of("01") != std::string::npos) fail(f.column, "expected a bit string");
    return tok;
  }

 private:
  std::istream& is_;
  std::string line_;
  int number_ = 0;
};

int read_header(LineReader& in, SchemeKind kind) {
  if (!in.next()) throw ParseError(in.number() + 1, 1, "missing scheme header");
  std::istringstream hs(in.line());
  std::string word, name, count;
  hs >> word >> name >> count;
  if (word != "scheme") in.fail(1, "expected 'scheme <kind> n=<count>'");
  if (name != to_string(kind)) in.fail(8, "expected a " + std::string(to_string(kind)) + " scheme, found '" + name + "'");
  int n = 0;
  if (count.rfind("n=", 0) != 0 ||
      std::from_chars(count.data() + 2, count.data() + count.size(), n).ec != std::errc() || n < 4)
    in.fail(static_cast<int>(in.line().find(count)) + 1, "expected n=<count> with count >= 4");
  return n;
}

std::vector<int> read_neighbors(const LineReader& in, const Field& f, int n) {
  std::vector<int> out;
  for (auto v : in.ints(f)) {
    if (v < 0 || v >= n) in.fail(f.column, "neighbor id " + std::to_string(v) + " out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

template <class Fn>
void read_rows(LineReader& in, int n, std::size_t field_count, Fn&& row) {
  for (int v = 0; v < n; ++v) {
    if (!in.next()) throw ParseError(in.number() + 1, 1, "expected " + std::to_string(n) + " vertex lines, got " + std::to_string(v));
    const auto f = in.fields();
    if (f.size() != field_count) in.fail(1, "expected " + std::to_string(field_count) + " '|'-separated fields");
    const auto id = in.ints(f[0], 1, "vertex id");
    if (id[0] != v) in.fail(f[0].column, "expected vertex " + std::to_string(v));
    row(v, f);
  }
  if (in.next()) in.fail(1, "unexpected line after the last vertex");
}

// Co-visibility is symmetric; a one-sided entry means a damaged dump.
// Lists are checked for order by the scheme constructors afterwards.
void check_symmetric(const std::vector<std::vector<int>>& nb) {
  for (std::size_t v = 0; v < nb.size(); ++v)
    for (int w : nb[v]) {
      const auto& back = nb[static_cast<std::size_t>(w)];
      if (!std::binary_search(back.begin(), back.end(), static_cast<int>(v)))
        throw std::invalid_argument("vertex " + std::to_string(w) + " does not list its neighbor " + std::to_string(v));
    }
}

template <class Build>
auto assemble(LineReader& in, const std::vector<std::vector<int>>& nb, Build&& build) {
  try {
    check_symmetric(nb);
    return build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(in.number(), 1, e.what());
  }
}

}  // namespace

void write_scheme(std::ostream& os, const SimpleScheme& scheme) {
  const int n = scheme.size();
  const auto w = static_cast<std::size_t>(scheme.width());
  os << "scheme simple n=" << n << '\n';
  write_sizes(os, scheme.sizes(), 2 * w, 1, 0);
  os << "# id | label bits | table bit | closed neighborhood\n";
  for (int v = 0; v < n; ++v) {
    os << v << " | " << scheme.encode_label(scheme.label(v)) << " | " << (scheme.table(v).higher_left ? 1 : 0) << " | ";
    write_neighbors(os, scheme.link_ids(v));
    os << '\n';
  }
}

void write_scheme(std::ostream& os, const DoubleScheme& scheme) {
  const int n = scheme.size();
  const auto w = static_cast<std::size_t>(scheme.width());
  os << "scheme double n=" << n << '\n';
  write_sizes(os, scheme.sizes(), 4 * (w + 1), 6 * (w + 1) + 1, 2 * (w + 1));
  os << "# id | x y | lo hi | bdLo bdHi tdLo tdHi bd2x bd2y | bit | closed neighborhood\n";
  for (int v = 0; v < n; ++v) {
    const auto& l = scheme.label(v);
    const auto& t = scheme.table(v);
    os << v << " | " << l.x << ' ' << l.y << " | " << l.lo << ' ' << l.hi << " | " << t.bd_lo << ' ' << t.bd_hi << ' '
       << t.td_lo << ' ' << t.td_hi << ' ' << t.bd2_x << ' ' << t.bd2_y << " | " << (t.via_top ? 1 : 0) << " | ";
    write_neighbors(os, scheme.link_ids(v));
    os << '\n';
  }
}

std::optional<SchemeKind> sniff_scheme(const std::string& text) {
  std::istringstream is(text);
  LineReader in(is);
  if (!in.next()) return std::nullopt;
  std::istringstream hs(in.line());
  std::string word, name;
  hs >> word >> name;
  if (word != "scheme") return std::nullopt;
  if (name == "simple") return SchemeKind::Simple;
  if (name == "double") return SchemeKind::Double;
  return std::nullopt;
}

SimpleScheme read_simple_scheme(std::istream& is) {
  LineReader in(is);
  const int n = read_header(in, SchemeKind::Simple);
  const int w = ceil_log2(static_cast<std::uint64_t>(n));
  std::vector<SimpleLabel> labels(static_cast<std::size_t>(n));
  std::vector<SimpleTable> tables(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
  read_rows(in, n, 4, [&](int v, const std::vector<Field>& f) {
    const auto bits = in.bits(f[1]);
    if (bits.size() != static_cast<std::size_t>(w) && bits.size() != static_cast<std::size_t>(2 * w))
      in.fail(f[1].column, "label must have " + std::to_string(w) + " or " + std::to_string(2 * w) + " bits");
    BitReader r(bits);
    auto& l = labels[static_cast<std::size_t>(v)];
    l.id = static_cast<std::int32_t>(r.get(w));
    if (r.remaining()) l.br = static_cast<std::int32_t>(r.get(w));
    const auto bit = in.ints(f[2], 1, "table bit");
    if (bit[0] != 0 && bit[0] != 1) in.fail(f[2].column, "table bit must be 0 or 1");
    tables[static_cast<std::size_t>(v)].higher_left = bit[0] == 1;
    nb[static_cast<std::size_t>(v)] = read_neighbors(in, f[3], n);
  });
  return assemble(in, nb, [&] { return SimpleScheme(std::move(labels), std::move(tables), std::move(nb)); });
}

DoubleScheme read_double_scheme(std::istream& is) {
  LineReader in(is);
  const int n = read_header(in, SchemeKind::Double);
  std::vector<DoubleLabel> labels(static_cast<std::size_t>(n));
  std::vector<DoubleTable> tables(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
  auto i32 = [](std::int64_t v) { return static_cast<std::int32_t>(v); };
  read_rows(in, n, 6, [&](int v, const std::vector<Field>& f) {
    const auto xy = in.ints(f[1], 2, "coordinates");
    const auto iv = in.ints(f[2], 2, "interval bounds");
    const auto tb = in.ints(f[3], 6, "table fields");
    const auto bit = in.ints(f[4], 1, "table bit");
    if (bit[0] != 0 && bit[0] != 1) in.fail(f[4].column, "table bit must be 0 or 1");
    labels[static_cast<std::size_t>(v)] = {i32(xy[0]), i32(xy[1]), i32(iv[0]), i32(iv[1])};
    tables[static_cast<std::size_t>(v)] = {i32(tb[0]), i32(tb[1]), i32(tb[2]), i32(tb[3]), i32(tb[4]), i32(tb[5]), bit[0] == 1};
    nb[static_cast<std::size_t>(v)] = read_neighbors(in, f[5], n);
  });
  return assemble(in, nb, [&] { return DoubleScheme(std::move(labels), std::move(tables), std::move(nb)); });
}

}  // namespace histroute
