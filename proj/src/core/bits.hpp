#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace histroute {

/// Smallest w with 2^w >= n; 0 for n <= 1.
inline int ceil_log2(std::uint64_t n) {
  int w = 0;
  while (w < 64 && (std::uint64_t{1} << w) < n) ++w;
  return w;
}

class BitWriter {
 public:
  void put(std::uint64_t value, int width) {
    if (width < 64 && (value >> width) != 0)
      throw std::out_of_range("value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
    for (int i = width - 1; i >= 0; --i) bits_.push_back(((value >> i) & 1U) != 0);
  }
  void put_signed(std::int64_t value, int magnitude_width) {
    put(value < 0 ? 1 : 0, 1);
    put(static_cast<std::uint64_t>(value < 0 ? -value : value), magnitude_width);
  }
  void put_bit(bool b) { bits_.push_back(b); }

  std::size_t size() const { return bits_.size(); }
  const std::vector<bool>& bits() const { return bits_; }
  std::string str() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

 private:
  std::vector<bool> bits_;
};

class BitReader {
 public:
  explicit BitReader(std::vector<bool> bits) : bits_(std::move(bits)) {}
  explicit BitReader(const std::string& text) {
    for (char c : text) {
      if (c != '0' && c != '1') throw std::invalid_argument("bit string contains '" + std::string(1, c) + "'");
      bits_.push_back(c == '1');
    }
  }

  std::uint64_t get(int width) {
    if (pos_ + static_cast<std::size_t>(width) > bits_.size()) throw std::out_of_range("bit string too short");
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | (bits_[pos_++] ? 1U : 0U);
    return v;
  }
  std::int64_t get_signed(int magnitude_width) {
    const bool negative = get(1) != 0;
    const auto m = static_cast<std::int64_t>(get(magnitude_width));
    return negative ? -m : m;
  }
  bool get_bit() { return get(1) != 0; }

  std::size_t remaining() const { return bits_.size() - pos_; }

 private:
  std::vector<bool> bits_;
  std::size_t pos_ = 0;
};

}  // namespace histroute
