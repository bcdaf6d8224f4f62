// Copyright 2026 The CompLog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMPLOG_BITS_HPP
#define COMPLOG_BITS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace complog {

/// An exact amount of complexity, in bits.
///
/// Stored as a signed count of micro-bits so that decimal weights with up to
/// six fractional digits add up without drift. Signed because unexpectedness
/// (a difference of two complexities) can be negative.
class Bits {
 public:
  static constexpr std::int64_t kScale = 1'000'000;
  static constexpr int kMaxDecimals = 6;
  /// Largest magnitude accepted by parse(), in whole bits.
  static constexpr std::int64_t kMaxWhole = 1'000'000'000;

  constexpr Bits() = default;

  static constexpr Bits from_micro(std::int64_t micro) { return Bits(micro); }
  static constexpr Bits whole(std::int64_t bits) { return Bits(bits * kScale); }

  /// Parses an unsigned decimal literal such as "4", "0.25" or "12.000001".
  /// Returns nullopt on malformed input, more than six decimals, or a value
  /// above kMaxWhole.
  static std::optional<Bits> parse(std::string_view text);

  constexpr std::int64_t micro() const { return micro_; }
  double to_double() const { return static_cast<double>(micro_) / kScale; }

  /// Shortest exact decimal form: "4", "-1", "0.25".
  std::string str() const;

  /// Number of fractional decimal digits str() prints (0..6).
  int decimals() const;

  constexpr Bits operator+(Bits o) const { return Bits(micro_ + o.micro_); }
  constexpr Bits operator-(Bits o) const { return Bits(micro_ - o.micro_); }
  constexpr Bits operator-() const { return Bits(-micro_); }
  constexpr Bits& operator+=(Bits o) {
    micro_ += o.micro_;
    return *this;
  }
  constexpr auto operator<=>(const Bits&) const = default;

 private:
  constexpr explicit Bits(std::int64_t micro) : micro_(micro) {}
  std::int64_t micro_ = 0;
};

/// A complexity that may be unattainable.
///
/// Infinity is a distinct state, never a large number: arithmetic involving
/// an infinite operand yields infinity and nothing else.
class Cost {
 public:
  constexpr Cost() = default;  // infinite
  constexpr Cost(Bits b) : value_(b) {}  // NOLINT(google-explicit-constructor)

  static constexpr Cost infinite() { return Cost(); }

  constexpr bool finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: finite().
  constexpr Bits bits() const { return *value_; }

  double to_double() const;
  /// "inf" when infinite, otherwise Bits::str().
  std::string str() const;

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (!a.finite() || !b.finite()) return Cost();
    return Cost(a.bits() + b.bits());
  }

  friend constexpr bool operator==(const Cost& a, const Cost& b) {
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(const Cost& a,
                                                    const Cost& b) {
    if (a.finite() && b.finite()) return a.bits() <=> b.bits();
    if (a.finite()) return std::strong_ordering::less;
    if (b.finite()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::optional<Bits> value_;
};

/// Formats a double with at most `decimals` fractional digits, trailing zeros
/// trimmed; "inf" / "-inf" for infinities.
std::string format_double(double v, int decimals);

/// Full round-trip precision ("%.17g"), "inf" for infinities.
std::string format_double_exact(double v);

}  // namespace complog

#endif  // COMPLOG_BITS_HPP
