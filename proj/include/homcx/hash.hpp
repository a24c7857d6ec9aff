#ifndef HOMCX_HASH_HPP
#define HOMCX_HASH_HPP

#include <cstdint>
#include <string>

namespace homcx {

// FNV-1a over a canonical serialization; stable across runs and platforms,
// used to key enumeration caches and to stamp reports.
class Fnv64 {
public:
  void feed(const std::string& s) {
    for (unsigned char c : s) feed_byte(c);
    feed_byte(0xffu); // field separator
  }
  void feed(std::int64_t v) { feed(std::to_string(v)); }
  void feed_byte(unsigned char c) {
    state_ ^= c;
    state_ *= 0x100000001b3ull;
  }
  std::uint64_t value() const { return state_; }
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = state_;
    for (int i = 15; i >= 0; --i) {
      out[i] = digits[v & 0xf];
      v >>= 4;
    }
    return out;
  }

private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

} // namespace homcx

#endif
