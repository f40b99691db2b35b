#ifndef ADAV_IO_UTIL_HPP
#define ADAV_IO_UTIL_HPP

#include <cstdint>
#include <string>

#include "adav/errors.hpp"

namespace adav {

// Little-endian buffer builder for the binary artifact formats.
struct ByteWriter {
  std::string buf;

  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void f32(float v) {
    uint32_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    __builtin_memcpy(&bits, &v, 4);
    u32(bits);
  }
  void magic(const char* m) { buf.append(m, 8); }
};

struct ByteReader {
  const std::string& buf;
  size_t pos = 0;

  explicit ByteReader(const std::string& b) : buf(b) {}

  void need(size_t n) const {
    if (pos + n > buf.size()) throw FormatError("truncated file");
  }
  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<uint32_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 4;
    return v;
  }
  float f32() {
    uint32_t bits = u32();
    float v;
    __builtin_memcpy(&v, &bits, 4);
    return v;
  }
  void expect_magic(const char* m) {
    need(8);
    if (buf.compare(pos, 8, m, 8) != 0)
      throw FormatError(std::string("bad magic, expected ") + m);
    pos += 8;
  }
  bool at_end() const { return pos == buf.size(); }
};

std::string read_file(const std::string& path);
// Writes to a temporary file in the same directory, then renames into place.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace adav

#endif
