#include "mdlab/seq_window.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mdlab {

SeqWindow SeqWindow::from_small(std::uint64_t start, std::vector<std::int8_t> values) {
  if (start < 1) throw std::invalid_argument("SeqWindow: start must be >= 1");
  if (values.empty()) throw std::invalid_argument("SeqWindow: length must be >= 1");
  SeqWindow w;
  int bound = 0;
  for (auto v : values) bound = std::max(bound, std::abs(static_cast<int>(v)));
  w.start_ = start;
  w.length_ = values.size();
  w.bound_ = bound;
  w.small_ = std::make_shared<const std::vector<std::int8_t>>(std::move(values));
  return w;
}

SeqWindow SeqWindow::from_complex(std::uint64_t start, std::vector<complex> values) {
  double bound = 0.0;
  for (const auto& v : values) bound = std::max(bound, std::abs(v));
  return from_complex(start, std::move(values), bound);
}

SeqWindow SeqWindow::from_complex(std::uint64_t start, std::vector<complex> values, double bound) {
  if (start < 1) throw std::invalid_argument("SeqWindow: start must be >= 1");
  if (values.empty()) throw std::invalid_argument("SeqWindow: length must be >= 1");
  if (!(bound >= 0.0)) throw std::invalid_argument("SeqWindow: bound must be >= 0");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) > bound * (1.0 + 1e-12))
      throw std::invalid_argument("SeqWindow: |value| exceeds bound at n=" +
                                  std::to_string(start + i));
  }
  SeqWindow w;
  w.start_ = start;
  w.length_ = values.size();
  w.bound_ = bound;
  w.complex_ = std::make_shared<const std::vector<complex>>(std::move(values));
  return w;
}

std::span<const std::int8_t> SeqWindow::small() const {
  if (!small_) throw std::logic_error("SeqWindow: not a small-integer window");
  return std::span<const std::int8_t>(small_->data() + offset_, length_);
}

std::span<const SeqWindow::complex> SeqWindow::complex_values() const {
  if (!complex_) throw std::logic_error("SeqWindow: not a complex window");
  return std::span<const complex>(complex_->data() + offset_, length_);
}

SeqWindow::complex SeqWindow::at(std::uint64_t n) const {
  if (n < start_ || n >= end())
    throw std::out_of_range("SeqWindow: index " + std::to_string(n) + " outside [" +
                            std::to_string(start_) + ", " + std::to_string(end()) + ")");
  return (*this)[n - start_];
}

SeqWindow SeqWindow::slice(std::uint64_t first, std::size_t length) const {
  if (length == 0) throw std::invalid_argument("SeqWindow::slice: zero length");
  if (first < start_ || first + length > end())
    throw std::invalid_argument("SeqWindow::slice: [" + std::to_string(first) + ", " +
                                std::to_string(first + length) + ") not covered");
  SeqWindow w = *this;
  w.offset_ = offset_ + (first - start_);
  w.length_ = length;
  w.start_ = first;
  return w;
}

SeqWindow SeqWindow::drop_front(std::size_t m) const {
  if (m >= length_)
    throw std::invalid_argument("shift: m=" + std::to_string(m) + " >= window length " +
                                std::to_string(length_));
  SeqWindow w = slice(start_ + m, length_ - m);
  w.start_ = start_;
  return w;
}

std::vector<SeqWindow::complex> SeqWindow::to_complex() const {
  std::vector<complex> out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = (*this)[i];
  return out;
}

bool SeqWindow::operator==(const SeqWindow& other) const {
  if (start_ != other.start_ || length_ != other.length_) return false;
  if (is_small() && other.is_small()) {
    auto a = small(), b = other.small();
    return std::equal(a.begin(), a.end(), b.begin());
  }
  for (std::size_t i = 0; i < length_; ++i)
    if ((*this)[i] != other[i]) return false;
  return true;
}

SeqWindow concatenate(std::span<const SeqWindow> parts) {
  if (parts.empty()) throw std::invalid_argument("concatenate: no parts");
  bool small = parts.front().is_small();
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_small() != small)
      throw std::invalid_argument("concatenate: mixed representations");
    if (i > 0 && parts[i].start() != parts[i - 1].end())
      throw std::invalid_argument("concatenate: parts are not contiguous");
    total += parts[i].size();
  }
  if (small) {
    std::vector<std::int8_t> out;
    out.reserve(total);
    for (const auto& p : parts) out.insert(out.end(), p.small().begin(), p.small().end());
    return SeqWindow::from_small(parts.front().start(), std::move(out));
  }
  std::vector<SeqWindow::complex> out;
  out.reserve(total);
  double bound = 0.0;
  for (const auto& p : parts) {
    out.insert(out.end(), p.complex_values().begin(), p.complex_values().end());
    bound = std::max(bound, p.bound());
  }
  return SeqWindow::from_complex(parts.front().start(), std::move(out), bound);
}

} // namespace mdlab
