#ifndef PALMDIV_SERIALIZE_HPP
#define PALMDIV_SERIALIZE_HPP

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace palmdiv {

// Little-endian byte stream helpers used by the container format and Fid
// serialization.

class ByteWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u16(uint16_t v) { le(v, 2); }
  void u32(uint32_t v) { le(v, 4); }
  void u64(uint64_t v) { le(v, 8); }
  void i32(int32_t v) { u32(static_cast<uint32_t>(v)); }
  void bytes(const void* p, size_t n) {
    buf_.append(static_cast<const char*>(p), n);
  }
  void str(const std::string& s) {
    u64(s.size());
    buf_.append(s);
  }
  template <typename T>
  void vec_u32(const std::vector<T>& v) {
    u64(v.size());
    for (const auto& x : v) u32(static_cast<uint32_t>(x));
  }
  const std::string& data() const { return buf_; }
  std::string take() { return std::move(buf_); }

 private:
  void le(uint64_t v, int n) {
    for (int i = 0; i < n; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string buf_;
};

class ByteReader {
 public:
  ByteReader(const char* p, size_t n) : p_(p), n_(n) {}
  explicit ByteReader(const std::string& s) : p_(s.data()), n_(s.size()) {}

  uint8_t u8() { return static_cast<uint8_t>(take(1)); }
  uint16_t u16() { return static_cast<uint16_t>(take(2)); }
  uint32_t u32() { return static_cast<uint32_t>(take(4)); }
  uint64_t u64() { return take(8); }
  int32_t i32() { return static_cast<int32_t>(u32()); }
  std::string str() {
    uint64_t len = u64();
    need(len);
    std::string s(p_ + pos_, len);
    pos_ += len;
    return s;
  }
  template <typename T>
  std::vector<T> vec_u32() {
    uint64_t len = u64();
    std::vector<T> v;
    v.reserve(len);
    for (uint64_t i = 0; i < len; ++i) v.push_back(static_cast<T>(u32()));
    return v;
  }
  size_t pos() const { return pos_; }
  size_t remaining() const { return n_ - pos_; }
  bool done() const { return pos_ == n_; }

 private:
  uint64_t take(int n) {
    need(n);
    uint64_t v = 0;
    for (int i = 0; i < n; ++i)
      v |= static_cast<uint64_t>(static_cast<uint8_t>(p_[pos_ + i])) << (8 * i);
    pos_ += n;
    return v;
  }
  void need(uint64_t n) {
    if (pos_ + n > n_) throw std::runtime_error("byte stream truncated");
  }
  const char* p_;
  size_t n_;
  size_t pos_ = 0;
};

// FNV-1a over a byte range; the container uses it as an integrity check.
inline uint64_t fnv1a(const char* p, size_t n) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= static_cast<uint8_t>(p[i]);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace palmdiv

#endif
