#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbc {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

/// Binary sequence with positional time indexing.  Time is 1-based
/// (x(1)..x(n)); plain operator[] is 0-based like any container.
class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::vector<uint8_t> bits);
  static BitSequence from_string(std::string_view zeros_ones);

  size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  uint8_t operator[](size_t idx0) const { return bits_[idx0]; }

  /// 1-based time accessor, bounds-checked.
  uint8_t at_time(size_t i) const;

  /// Subsequence [begin0, begin0+len), 0-based.
  BitSequence slice(size_t begin0, size_t len) const;

  void push_back(uint8_t bit);

  std::string to_string() const;
  /// ASCII '0'/'1' bytes (the raw-bit-bytes form used by the block predictor
  /// and the bit-file format).
  Bytes to_ascii() const;

  const std::vector<uint8_t>& bits() const { return bits_; }
  bool operator==(const BitSequence&) const = default;

 private:
  std::vector<uint8_t> bits_;
};

/// Reads the bit-file format: ASCII '0'/'1', no separators, one optional
/// trailing newline.  Anything else is a DataError.
BitSequence read_bit_file(const std::string& path);
void write_bit_file(const std::string& path, const BitSequence& bits);

}  // namespace pbc
