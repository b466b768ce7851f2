#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catwords {

// All counting and series arithmetic in this library is exact. Silent
// wraparound is never acceptable, so every add/mul that could overflow
// goes through one of these helpers.

using int128 = __int128;

class overflow_error : public std::overflow_error {
 public:
  explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("u64 add overflow");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("u64 mul overflow");
  return r;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int128 add overflow");
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("int128 sub overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int128 mul overflow");
  return r;
}

std::string to_string(int128 v);

inline std::uint64_t to_u64(int128 v) {
  if (v < 0 || v > int128(UINT64_MAX)) throw overflow_error("int128 does not fit u64");
  return static_cast<std::uint64_t>(v);
}

}  // namespace catwords
