#include "pbc/bitseq.hpp"

#include <fstream>

#include "pbc/errors.hpp"

namespace pbc {

BitSequence::BitSequence(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
  for (uint8_t b : bits_) {
    if (b > 1) throw ParamError("BitSequence values must be 0 or 1");
  }
}

BitSequence BitSequence::from_string(std::string_view zeros_ones) {
  std::vector<uint8_t> bits;
  bits.reserve(zeros_ones.size());
  for (char c : zeros_ones) {
    if (c != '0' && c != '1') throw ParamError("bit string may contain only '0' and '1'");
    bits.push_back(static_cast<uint8_t>(c - '0'));
  }
  return BitSequence(std::move(bits));
}

uint8_t BitSequence::at_time(size_t i) const {
  if (i < 1 || i > bits_.size()) {
    throw ParamError("time index " + std::to_string(i) + " outside [1," +
                     std::to_string(bits_.size()) + "]");
  }
  return bits_[i - 1];
}

BitSequence BitSequence::slice(size_t begin0, size_t len) const {
  if (begin0 + len > bits_.size()) throw ParamError("slice out of range");
  BitSequence out;
  out.bits_.assign(bits_.begin() + static_cast<ptrdiff_t>(begin0),
                   bits_.begin() + static_cast<ptrdiff_t>(begin0 + len));
  return out;
}

void BitSequence::push_back(uint8_t bit) {
  if (bit > 1) throw ParamError("bit must be 0 or 1");
  bits_.push_back(bit);
}

std::string BitSequence::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Bytes BitSequence::to_ascii() const {
  Bytes out;
  out.reserve(bits_.size());
  for (uint8_t b : bits_) out.push_back(static_cast<uint8_t>('0' + b));
  return out;
}

BitSequence read_bit_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open bit file: " + path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!content.empty() && content.back() == '\n') content.pop_back();
  for (char c : content) {
    if (c != '0' && c != '1') {
      throw DataError("bit file " + path + " contains a byte other than '0'/'1'");
    }
  }
  return BitSequence::from_string(content);
}

void write_bit_file(const std::string& path, const BitSequence& bits) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open for writing: " + path);
  out << bits.to_string() << '\n';
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace pbc
