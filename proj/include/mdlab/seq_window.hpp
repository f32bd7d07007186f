#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace mdlab {

/// Values of an arithmetic function on the contiguous range
/// [start, start + size()), indexed so that element i holds f(start + i).
///
/// {-1,0,1}-valued functions are kept as signed bytes; everything else as
/// complex doubles. Storage is shared and immutable, so copies, shifts and
/// slices are O(1) and windows may be read from any number of threads.
class SeqWindow {
 public:
  using complex = std::complex<double>;

  /// Takes ownership of small integer values. bound is max |value|.
  static SeqWindow from_small(std::uint64_t start, std::vector<std::int8_t> values);
  /// Takes ownership of complex values; bound is computed as max |value|.
  static SeqWindow from_complex(std::uint64_t start, std::vector<complex> values);
  /// As above with a caller-supplied sup-norm certificate, validated here.
  static SeqWindow from_complex(std::uint64_t start, std::vector<complex> values, double bound);

  std::uint64_t start() const { return start_; }
  std::size_t size() const { return length_; }
  /// One past the last covered index.
  std::uint64_t end() const { return start_ + length_; }
  double bound() const { return bound_; }
  bool is_small() const { return static_cast<bool>(small_); }

  /// Raw signed-byte view; throws std::logic_error on a complex window.
  std::span<const std::int8_t> small() const;
  /// Raw complex view; throws std::logic_error on a small window.
  std::span<const complex> complex_values() const;

  /// Value at offset i (no bounds check beyond debug assertions).
  complex operator[](std::size_t i) const {
    return small_ ? complex((*small_)[offset_ + i], 0.0) : (*complex_)[offset_ + i];
  }
  /// Value f(n); throws std::out_of_range if n is not covered.
  complex at(std::uint64_t n) const;
  bool covers(std::uint64_t first, std::uint64_t last) const {
    return first >= start_ && last < end() && first <= last;
  }

  /// The sub-window [first, first + length). Shares storage.
  SeqWindow slice(std::uint64_t first, std::size_t length) const;
  /// The shift A^m: result(n) = f(n + m) on [start, end - m). The start
  /// index is kept. Shares storage.
  SeqWindow drop_front(std::size_t m) const;
  /// Copy of the values as complex numbers (for mixing representations).
  std::vector<complex> to_complex() const;

  bool operator==(const SeqWindow& other) const;

 private:
  SeqWindow() = default;

  std::shared_ptr<const std::vector<std::int8_t>> small_;
  std::shared_ptr<const std::vector<complex>> complex_;
  std::size_t offset_ = 0;
  std::size_t length_ = 0;
  std::uint64_t start_ = 1;
  double bound_ = 0.0;
};

/// Concatenates windows that tile a contiguous range. All parts must share
/// one representation.
SeqWindow concatenate(std::span<const SeqWindow> parts);

} // namespace mdlab
