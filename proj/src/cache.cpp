#include "mdlab/cache.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "mdlab/sieve.hpp"

namespace mdlab {

namespace {

constexpr std::uint8_t magic[4] = {'M', 'D', 'L', '1'};

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{in[at + i]} << (8 * i);
  return v;
}

} // namespace

std::string CachedFunction::label() const {
  switch (tag) {
    case FunctionTag::mobius: return "mu";
    case FunctionTag::mobius_squared: return "mu2";
    case FunctionTag::power_free: return "mu_r" + std::to_string(r);
    case FunctionTag::liouville: return "lambda";
  }
  return "unknown";
}

SeqWindow sieve_function(CachedFunction fn, std::uint64_t start, std::uint64_t length) {
  switch (fn.tag) {
    case FunctionTag::mobius: return mobius_sieve(start, length);
    case FunctionTag::mobius_squared: return power_free_sieve(start, length, 2);
    case FunctionTag::power_free: return power_free_sieve(start, length, fn.r);
    case FunctionTag::liouville: return liouville_sieve(start, length);
  }
  throw std::invalid_argument("sieve_function: unknown tag");
}

std::vector<std::uint8_t> encode_window(CachedFunction fn, const SeqWindow& window) {
  auto values = window.small();
  std::vector<std::uint8_t> out;
  const std::size_t header = 4 + 1 + (fn.tag == FunctionTag::power_free ? 1 : 0);
  out.reserve(header + 16 + values.size());
  for (auto c : magic) out.push_back(static_cast<std::uint8_t>(c));
  out.push_back(static_cast<std::uint8_t>(fn.tag));
  if (fn.tag == FunctionTag::power_free) out.push_back(fn.r);
  put_u64(out, window.start());
  put_u64(out, values.size());
  out.resize(out.size() + values.size());
  std::memcpy(out.data() + out.size() - values.size(), values.data(), values.size());
  return out;
}

DecodedWindow decode_window(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 5 || !std::equal(std::begin(magic), std::end(magic), bytes.begin()))
    throw std::runtime_error("decode_window: bad magic");
  CachedFunction fn;
  std::uint8_t tag = bytes[4];
  if (tag > 3) throw std::runtime_error("decode_window: unknown function tag " + std::to_string(tag));
  fn.tag = static_cast<FunctionTag>(tag);
  std::size_t at = 5;
  if (fn.tag == FunctionTag::power_free) {
    if (bytes.size() < 6) throw std::runtime_error("decode_window: truncated header");
    fn.r = bytes[at++];
    if (fn.r < 2) throw std::runtime_error("decode_window: power_free r < 2");
  }
  if (bytes.size() < at + 16) throw std::runtime_error("decode_window: truncated header");
  std::uint64_t start = get_u64(bytes, at);
  std::uint64_t length = get_u64(bytes, at + 8);
  at += 16;
  if (bytes.size() - at != length)
    throw std::runtime_error("decode_window: payload size " + std::to_string(bytes.size() - at) +
                             " != declared length " + std::to_string(length));
  std::vector<std::int8_t> values(length);
  for (std::size_t i = 0; i < length; ++i) values[i] = static_cast<std::int8_t>(bytes[at + i]);
  return {fn, SeqWindow::from_small(start, std::move(values))};
}

void write_window(std::ostream& out, CachedFunction fn, const SeqWindow& window) {
  auto bytes = encode_window(fn, window);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write_window: stream write failed");
}

DecodedWindow read_window(std::istream& in) {
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_window(bytes);
}

SieveCache::SieveCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path SieveCache::path_for(CachedFunction fn, std::uint64_t start,
                                           std::uint64_t length) const {
  return dir_ / (fn.label() + "_" + std::to_string(start) + "_" + std::to_string(length) + ".mdl");
}

SeqWindow SieveCache::get(CachedFunction fn, std::uint64_t start, std::uint64_t length) {
  auto path = path_for(fn, start, length);
  if (std::ifstream in{path, std::ios::binary}) {
    auto decoded = read_window(in);
    if (decoded.function == fn && decoded.window.start() == start && decoded.window.size() == length) {
      ++hits_;
      return decoded.window;
    }
  }
  ++misses_;
  auto window = sieve_function(fn, start, length);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
    write_window(out, fn, window);
  }
  std::filesystem::rename(tmp, path);
  return window;
}

} // namespace mdlab
