#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "routing.hpp"
#include "visibility.hpp"

namespace histroute {

struct SimpleLabel {
  std::int32_t id = 0;
  std::int32_t br = -1;  // breakpoint id, reflex and base vertices only

  bool has_br() const { return br >= 0; }
  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
};

struct SimpleTable {
  bool higher_left = false;  // l(v) lies above r(v)
  friend bool operator==(const SimpleTable&, const SimpleTable&) = default;
};

struct SizeReport {
  int width = 0;  // ceil(log2 n)
  std::size_t label_bits = 0;
  std::size_t table_bits = 0;
  std::size_t header_bits = 0;
};

/// Shortest-path routing on simple histograms: vertex ids plus breakpoint
/// ids as labels, one bit of routing table, no header.
class SimpleScheme {
 public:
  using Label = SimpleLabel;
  using Table = SimpleTable;
  using Header = NoHeader;
  using Step = StepResult<Label, Header>;

  enum Rule : std::uint8_t { Direct, OutsideInterval, NearDominator, FarDominator };

  static constexpr double kStretchBound = 1.0;

  static SimpleScheme build(const VisibilityGraph& g);

  /// Assembles a scheme from stored parts; `closed_neighbors[v]` must be
  /// sorted and contain v. Throws std::invalid_argument on inconsistency.
  SimpleScheme(std::vector<Label> labels, std::vector<Table> tables, std::vector<std::vector<int>> closed_neighbors);

  static Step step(const LinkTable<Label>& links, const Table& table, const Label& target, const Header& header);

  int size() const { return static_cast<int>(labels_.size()); }
  int width() const { return width_; }
  const Label& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const Table& table(int v) const { return tables_[static_cast<std::size_t>(v)]; }
  LinkTable<Label> link_table(int v) const;
  std::span<const int> link_ids(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }

  static Header empty_header() { return {}; }
  static std::size_t header_bits(const Header&) { return 0; }

  std::string encode_label(const Label& l) const;
  Label decode_label(const std::string& bits) const;
  std::size_t label_bits(int v) const { return encode_label(label(v)).size(); }
  static std::size_t table_bits() { return 1; }
  SizeReport sizes() const;

 private:
  int width_ = 0;
  std::vector<Label> labels_;
  std::vector<Table> tables_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<Label>> link_labels_;
  std::vector<std::size_t> self_index_;
};

}  // namespace histroute
