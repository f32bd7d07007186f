#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mdlab/seq_window.hpp"

namespace mdlab {

/// Function tags of the on-disk window format.
enum class FunctionTag : std::uint8_t { mobius = 0, mobius_squared = 1, power_free = 2, liouville = 3 };

struct CachedFunction {
  FunctionTag tag = FunctionTag::mobius;
  std::uint8_t r = 0;  // only meaningful for power_free

  std::string label() const;
  bool operator==(const CachedFunction&) const = default;
};

/// Sieves the tagged function on [start, start + length).
SeqWindow sieve_function(CachedFunction fn, std::uint64_t start, std::uint64_t length);

/// Byte layout:
///   "MDL1" | u8 tag | [u8 r, power_free only] | u64 LE start | u64 LE length | length x i8
std::vector<std::uint8_t> encode_window(CachedFunction fn, const SeqWindow& window);

struct DecodedWindow {
  CachedFunction function;
  SeqWindow window;
};
/// Throws std::runtime_error on a malformed buffer.
DecodedWindow decode_window(std::span<const std::uint8_t> bytes);

void write_window(std::ostream& out, CachedFunction fn, const SeqWindow& window);
DecodedWindow read_window(std::istream& in);

/// Content-addressed store of sieved windows keyed by (function, start, length).
class SieveCache {
 public:
  explicit SieveCache(std::filesystem::path dir);

  SeqWindow get(CachedFunction fn, std::uint64_t start, std::uint64_t length);
  std::filesystem::path path_for(CachedFunction fn, std::uint64_t start, std::uint64_t length) const;

  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

} // namespace mdlab
