#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace histroute {

/// Everything a step function may look at about the current vertex: the
/// labels of its closed neighborhood and which entry is its own.
template <class Label>
struct LinkTable {
  std::span<const Label> entries;
  std::size_t self_index = 0;

  const Label& self() const { return entries[self_index]; }
};

template <class Label, class Header>
struct StepResult {
  Label next;
  Header header;
  // Which branch of the routing function fired; diagnostics only.
  std::uint8_t rule = 0;
};

/// Raised by a step function when its inputs break the scheme's protocol,
/// e.g. a header naming a vertex that is not in the link table.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NoHeader {
  friend bool operator==(const NoHeader&, const NoHeader&) = default;
};

}  // namespace histroute
