#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "routing.hpp"
#include "scheme_simple.hpp"
#include "visibility.hpp"

namespace histroute {

struct DoubleLabel {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t lo = 0;  // I(v) as an x-range
  std::int32_t hi = 0;

  friend bool operator==(const DoubleLabel&, const DoubleLabel&) = default;
};

struct DoubleTable {
  std::int32_t bd_lo = 0, bd_hi = 0;  // I^2(bd(v))
  std::int32_t td_lo = 0, td_hi = 0;  // I^2(td(v))
  std::int32_t bd2_x = 0, bd2_y = 0;  // bd^2(v)
  bool via_top = false;               // bottom path of length 2 starts with td(v)

  friend bool operator==(const DoubleTable&, const DoubleTable&) = default;
};

struct DoubleHeader {
  bool set = false;
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend bool operator==(const DoubleHeader&, const DoubleHeader&) = default;
};

/// Stretch-2 routing on double histograms with coordinate labels,
/// dominator tables and a one-vertex header.
class DoubleScheme {
 public:
  using Label = DoubleLabel;
  using Table = DoubleTable;
  using Header = DoubleHeader;
  using Step = StepResult<Label, Header>;

  enum Rule : std::uint8_t { Direct, HeaderHop, FarDominator, NearDominator, ExtendLeft, ExtendRight, Dominator, Detour };

  static constexpr double kStretchBound = 2.0;

  /// Requires a normalized double histogram.
  static DoubleScheme build(const VisibilityGraph& g);

  DoubleScheme(std::vector<Label> labels, std::vector<Table> tables, std::vector<std::vector<int>> closed_neighbors);

  static Step step(const LinkTable<Label>& links, const Table& table, const Label& target, const Header& header);

  // The quantities the step function derives from the link table alone.
  struct BaseDominators {
    Label bd;
    Label td;
  };
  static BaseDominators local_base_dominators(const LinkTable<Label>& links);
  struct Sequences {
    std::vector<Label> a;
    std::vector<Label> b;
  };
  static Sequences local_sequences(const LinkTable<Label>& links);

  int size() const { return static_cast<int>(labels_.size()); }
  int width() const { return width_; }
  const Label& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const Table& table(int v) const { return tables_[static_cast<std::size_t>(v)]; }
  LinkTable<Label> link_table(int v) const;
  std::span<const int> link_ids(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }

  static Header empty_header() { return {}; }
  std::size_t header_bits(const Header& h) const { return encode_header(h).size(); }

  std::string encode_label(const Label& l) const;
  Label decode_label(const std::string& bits) const;
  std::string encode_table(const Table& t) const;
  Table decode_table(const std::string& bits) const;
  std::string encode_header(const Header& h) const;
  Header decode_header(const std::string& bits) const;

  std::size_t label_bits(int v) const { return encode_label(label(v)).size(); }
  std::size_t table_bits(int v) const { return encode_table(table(v)).size(); }
  /// Largest header the scheme can emit.
  std::size_t max_header_bits() const;
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
