#include "scheme_simple.hpp"

#include <algorithm>
#include <stdexcept>

#include "bits.hpp"
#include "landmarks.hpp"

namespace histroute {

SimpleScheme SimpleScheme::build(const VisibilityGraph& g) {
  const auto& h = g.histogram();
  if (!h.is_simple()) throw std::invalid_argument("simple scheme: histogram is not simple");
  const int n = g.size();
  std::vector<Label> labels(static_cast<std::size_t>(n));
  std::vector<Table> tables(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    // The routing function compares ids, so each I(v) must be an id range.
    const auto members = g.vertices_in(g.interval(v));
    if (members.back() - members.front() + 1 != static_cast<int>(members.size()))
      throw std::logic_error("simple scheme: I(" + std::to_string(v) + ") is not an id range");
    const auto& m = g.landmarks(v);
    auto& l = labels[static_cast<std::size_t>(v)];
    l.id = v;
    if (has_breakpoint(h, v)) l.br = breakpoint(g, v);
    tables[static_cast<std::size_t>(v)].higher_left = m.left.point.y > m.right.point.y;
    closed[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
  }
  return SimpleScheme(std::move(labels), std::move(tables), std::move(closed));
}

SimpleScheme::SimpleScheme(std::vector<Label> labels, std::vector<Table> tables, std::vector<std::vector<int>> closed_neighbors)
    : labels_(std::move(labels)), tables_(std::move(tables)), neighbors_(std::move(closed_neighbors)) {
  const auto n = labels_.size();
  if (n < 4 || tables_.size() != n || neighbors_.size() != n)
    throw std::invalid_argument("simple scheme: inconsistent vertex counts");
  width_ = ceil_log2(n);
  link_labels_.resize(n);
  self_index_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (labels_[v].id != static_cast<std::int32_t>(v)) throw std::invalid_argument("simple scheme: label id mismatch at " + std::to_string(v));
    if (labels_[v].br >= static_cast<std::int32_t>(n)) throw std::invalid_argument("simple scheme: breakpoint out of range at " + std::to_string(v));
    const auto& nb = neighbors_[v];
    if (!std::is_sorted(nb.begin(), nb.end()) || std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("simple scheme: neighbor list of " + std::to_string(v) + " is not strictly sorted");
    const auto self = std::lower_bound(nb.begin(), nb.end(), static_cast<int>(v));
    if (self == nb.end() || *self != static_cast<int>(v))
      throw std::invalid_argument("simple scheme: neighbor list of " + std::to_string(v) + " lacks the vertex itself");
    self_index_[v] = static_cast<std::size_t>(self - nb.begin());
    for (int w : nb) {
      if (w < 0 || static_cast<std::size_t>(w) >= n) throw std::invalid_argument("simple scheme: neighbor id out of range");
      link_labels_[v].push_back(labels_[static_cast<std::size_t>(w)]);
    }
  }
}

LinkTable<SimpleLabel> SimpleScheme::link_table(int v) const {
  return {link_labels_[static_cast<std::size_t>(v)], self_index_[static_cast<std::size_t>(v)]};
}

SimpleScheme::Step SimpleScheme::step(const LinkTable<Label>& links, const Table& table, const Label& target, const Header&) {
  const Label& s = links.self();
  const Label* lo = nullptr;
  const Label* hi = nullptr;
  for (const auto& e : links.entries) {
    if (e.id == target.id) return {e, {}, Direct};
    if (!lo || e.id < lo->id) lo = &e;
    if (!hi || e.id > hi->id) hi = &e;
  }
  if (target.id < lo->id || target.id > hi->id) return {table.higher_left ? *lo : *hi, {}, OutsideInterval};

  // Nearest neighbors on either side of t in id order.
  const Label* below = nullptr;
  const Label* above = nullptr;
  for (const auto& e : links.entries) {
    if (e.id < target.id && (!below || e.id > below->id)) below = &e;
    if (e.id > target.id && (!above || e.id < above->id)) above = &e;
  }
  const bool rightward = target.id > s.id;
  const Label* nd = rightward ? below : above;
  const Label* fd = rightward ? above : below;
  if (!nd || !fd) throw ProtocolError("simple step: link table does not bracket the target");
  if (!nd->has_br()) throw ProtocolError("simple step: near dominator " + std::to_string(nd->id) + " has no breakpoint");
  const bool toward_nd = rightward ? target.id <= nd->br : target.id >= nd->br;
  return toward_nd ? Step{*nd, {}, NearDominator} : Step{*fd, {}, FarDominator};
}

std::string SimpleScheme::encode_label(const Label& l) const {
  BitWriter w;
  w.put(static_cast<std::uint64_t>(l.id), width_);
  if (l.has_br()) w.put(static_cast<std::uint64_t>(l.br), width_);
  return w.str();
}

SimpleLabel SimpleScheme::decode_label(const std::string& bits) const {
  const auto len = bits.size();
  const auto w = static_cast<std::size_t>(width_);
  if (len != w && len != 2 * w)
    throw std::invalid_argument("simple label must have " + std::to_string(w) + " or " + std::to_string(2 * w) + " bits, got " + std::to_string(len));
  BitReader r(bits);
  Label l;
  l.id = static_cast<std::int32_t>(r.get(width_));
  if (len == 2 * w) l.br = static_cast<std::int32_t>(r.get(width_));
  return l;
}

SizeReport SimpleScheme::sizes() const {
  SizeReport out;
  out.width = width_;
  for (int v = 0; v < size(); ++v) out.label_bits = std::max(out.label_bits, label_bits(v));
  out.table_bits = table_bits();
  out.header_bits = 0;
  return out;
}

}  // namespace histroute
