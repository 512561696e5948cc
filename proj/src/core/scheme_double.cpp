#include "scheme_double.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "bits.hpp"
#include "landmarks.hpp"

namespace histroute {

namespace {

std::int32_t narrow(std::int64_t v) { return static_cast<std::int32_t>(v); }

std::int64_t mag(std::int32_t y) { return y < 0 ? -static_cast<std::int64_t>(y) : y; }

// Candidate c beats best for an extreme-x choice; ties toward the base line.
bool beats(const DoubleLabel& c, const DoubleLabel* best, bool more) {
  if (!best) return true;
  if (c.x != best->x) return more ? c.x > best->x : c.x < best->x;
  return mag(c.y) < mag(best->y);
}

// Closer to the base line first, then leftmost.
bool closer(const DoubleLabel& c, const DoubleLabel* best) {
  if (!best) return true;
  if (mag(c.y) != mag(best->y)) return mag(c.y) < mag(best->y);
  return c.x < best->x;
}

}  // namespace

DoubleScheme DoubleScheme::build(const VisibilityGraph& g) {
  const auto& h = g.histogram();
  if (h.is_simple()) throw std::invalid_argument("double scheme: histogram is not a double histogram");
  if (!(normalize(h) == h)) throw std::invalid_argument("double scheme: coordinates must be normalized");
  const int n = g.size();

  std::vector<Interval> second(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) second[static_cast<std::size_t>(v)] = extension_sequences(g, v).second_interval();

  std::vector<Label> labels(static_cast<std::size_t>(n));
  std::vector<Table> tables(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto& p = h.point(v);
    const auto& iv = g.interval(v);
    labels[static_cast<std::size_t>(v)] = {narrow(p.x), narrow(p.y), narrow(iv.lo), narrow(iv.hi)};

    const auto kd = k_dominators(g, v, 2);
    const auto& ib = second[static_cast<std::size_t>(kd.bd[1])];
    const auto& it = second[static_cast<std::size_t>(kd.td[1])];
    const auto& b2 = h.point(kd.bd[2]);
    tables[static_cast<std::size_t>(v)] = {narrow(ib.lo), narrow(ib.hi), narrow(it.lo), narrow(it.hi),
                                           narrow(b2.x),  narrow(b2.y),  canonical_bit(g, kd)};
    closed[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
  }
  return DoubleScheme(std::move(labels), std::move(tables), std::move(closed));
}

DoubleScheme::DoubleScheme(std::vector<Label> labels, std::vector<Table> tables, std::vector<std::vector<int>> closed_neighbors)
    : labels_(std::move(labels)), tables_(std::move(tables)), neighbors_(std::move(closed_neighbors)) {
  const auto n = labels_.size();
  if (n < 4 || tables_.size() != n || neighbors_.size() != n)
    throw std::invalid_argument("double scheme: inconsistent vertex counts");
  width_ = ceil_log2(n);
  link_labels_.resize(n);
  self_index_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& nb = neighbors_[v];
    if (!std::is_sorted(nb.begin(), nb.end()) || std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("double scheme: neighbor list of " + std::to_string(v) + " is not strictly sorted");
    const auto self = std::lower_bound(nb.begin(), nb.end(), static_cast<int>(v));
    if (self == nb.end() || *self != static_cast<int>(v))
      throw std::invalid_argument("double scheme: neighbor list of " + std::to_string(v) + " lacks the vertex itself");
    self_index_[v] = static_cast<std::size_t>(self - nb.begin());
    for (int w : nb) {
      if (w < 0 || static_cast<std::size_t>(w) >= n) throw std::invalid_argument("double scheme: neighbor id out of range");
      link_labels_[v].push_back(labels_[static_cast<std::size_t>(w)]);
    }
    // Fails loudly if a coordinate does not fit the field widths.
    encode_label(labels_[v]);
    encode_table(tables_[v]);
  }
}

LinkTable<DoubleLabel> DoubleScheme::link_table(int v) const {
  return {link_labels_[static_cast<std::size_t>(v)], self_index_[static_cast<std::size_t>(v)]};
}

DoubleScheme::BaseDominators DoubleScheme::local_base_dominators(const LinkTable<Label>& links) {
  const Label* bd = nullptr;
  const Label* td = nullptr;
  for (const auto& e : links.entries) {
    if (e.y < 0 && closer(e, bd)) bd = &e;
    if (e.y > 0 && closer(e, td)) td = &e;
  }
  if (!bd) bd = td;
  if (!td) td = bd;
  return {*bd, *td};
}

DoubleScheme::Sequences DoubleScheme::local_sequences(const LinkTable<Label>& links) {
  Sequences out;
  out.a.push_back(links.self());
  out.b.push_back(links.self());
  for (;;) {
    const Label* next = nullptr;
    for (const auto& e : links.entries)
      if (e.lo < out.a.back().lo && beats(e, next, false)) next = &e;
    if (!next) break;
    out.a.push_back(*next);
  }
  for (;;) {
    const Label* next = nullptr;
    for (const auto& e : links.entries)
      if (e.hi > out.b.back().hi && beats(e, next, true)) next = &e;
    if (!next) break;
    out.b.push_back(*next);
  }
  return out;
}

DoubleScheme::Step DoubleScheme::step(const LinkTable<Label>& links, const Table& table, const Label& target, const Header& header) {
  for (const auto& e : links.entries)
    if (e.x == target.x && e.y == target.y) return {e, {}, Direct};

  if (header.set) {
    for (const auto& e : links.entries)
      if (e.x == header.x && e.y == header.y) return {e, {}, HeaderHop};
    throw ProtocolError("header names (" + std::to_string(header.x) + "," + std::to_string(header.y) +
                        ") which is not in the link table");
  }

  const Label& s = links.self();
  const auto tx = target.x;

  if (s.lo <= tx && tx <= s.hi) {
    const bool rightward = tx > s.x;
    const Label* fd = nullptr;
    const Label* nd = nullptr;
    for (const auto& e : links.entries) {
      if (rightward) {
        if (e.x >= tx && beats(e, fd, false)) fd = &e;
        if (e.x <= tx && beats(e, nd, true)) nd = &e;
      } else {
        if (e.x <= tx && beats(e, fd, true)) fd = &e;
        if (e.x >= tx && beats(e, nd, false)) nd = &e;
      }
    }
    if (fd) return {*fd, {}, FarDominator};
    return {*nd, {}, NearDominator};
  }

  if (tx < s.lo) {
    auto reach = s.lo;
    for (;;) {
      const Label* a = nullptr;
      for (const auto& e : links.entries)
        if (e.lo < reach && beats(e, a, false)) a = &e;
      if (!a) break;
      if (a->lo <= tx) return {*a, {}, ExtendLeft};
      reach = a->lo;
    }
  } else {
    auto reach = s.hi;
    for (;;) {
      const Label* b = nullptr;
      for (const auto& e : links.entries)
        if (e.hi > reach && beats(e, b, true)) b = &e;
      if (!b) break;
      if (b->hi >= tx) return {*b, {}, ExtendRight};
      reach = b->hi;
    }
  }

  const auto dom = local_base_dominators(links);
  const bool in_bd = table.bd_lo <= tx && tx <= table.bd_hi;
  const bool in_td = table.td_lo <= tx && tx <= table.td_hi;
  if (in_bd || in_td) return {in_bd ? dom.bd : dom.td, {}, Dominator};
  return {table.via_top ? dom.td : dom.bd, {true, table.bd2_x, table.bd2_y}, Detour};
}

std::string DoubleScheme::encode_label(const Label& l) const {
  BitWriter w;
  w.put(static_cast<std::uint64_t>(l.x), width_);
  w.put_signed(l.y, width_);
  w.put(static_cast<std::uint64_t>(l.lo), width_);
  w.put(static_cast<std::uint64_t>(l.hi), width_);
  return w.str();
}

DoubleLabel DoubleScheme::decode_label(const std::string& bits) const {
  if (bits.size() != static_cast<std::size_t>(4 * width_ + 1))
    throw std::invalid_argument("double label must have " + std::to_string(4 * width_ + 1) + " bits");
  BitReader r(bits);
  Label l;
  l.x = narrow(static_cast<std::int64_t>(r.get(width_)));
  l.y = narrow(r.get_signed(width_));
  l.lo = narrow(static_cast<std::int64_t>(r.get(width_)));
  l.hi = narrow(static_cast<std::int64_t>(r.get(width_)));
  return l;
}

std::string DoubleScheme::encode_table(const Table& t) const {
  BitWriter w;
  for (auto v : {t.bd_lo, t.bd_hi, t.td_lo, t.td_hi, t.bd2_x}) w.put(static_cast<std::uint64_t>(v), width_);
  w.put_signed(t.bd2_y, width_);
  w.put_bit(t.via_top);
  return w.str();
}

DoubleTable DoubleScheme::decode_table(const std::string& bits) const {
  if (bits.size() != static_cast<std::size_t>(6 * width_ + 2))
    throw std::invalid_argument("double table must have " + std::to_string(6 * width_ + 2) + " bits");
  BitReader r(bits);
  Table t;
  for (auto* f : {&t.bd_lo, &t.bd_hi, &t.td_lo, &t.td_hi, &t.bd2_x}) *f = narrow(static_cast<std::int64_t>(r.get(width_)));
  t.bd2_y = narrow(r.get_signed(width_));
  t.via_top = r.get_bit();
  return t;
}

std::string DoubleScheme::encode_header(const Header& h) const {
  if (!h.set) return {};
  BitWriter w;
  w.put(static_cast<std::uint64_t>(h.x), width_);
  w.put_signed(h.y, width_);
  return w.str();
}

DoubleHeader DoubleScheme::decode_header(const std::string& bits) const {
  if (bits.empty()) return {};
  if (bits.size() != static_cast<std::size_t>(2 * width_ + 1))
    throw std::invalid_argument("double header must be empty or have " + std::to_string(2 * width_ + 1) + " bits");
  BitReader r(bits);
  Header h;
  h.set = true;
  h.x = narrow(static_cast<std::int64_t>(r.get(width_)));
  h.y = narrow(r.get_signed(width_));
  return h;
}

std::size_t DoubleScheme::max_header_bits() const {
  std::size_t out = 0;
  for (const auto& t : tables_) out = std::max(out, header_bits({true, t.bd2_x, t.bd2_y}));
  return out;
}

SizeReport DoubleScheme::sizes() const {
  SizeReport out;
  out.width = width_;
  for (int v = 0; v < size(); ++v) {
    out.label_bits = std::max(out.label_bits, label_bits(v));
    out.table_bits = std::max(out.table_bits, table_bits(v));
  }
  out.header_bits = max_header_bits();
  return out;
}

}  // namespace histroute
