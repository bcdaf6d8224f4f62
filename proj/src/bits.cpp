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

#include "complog/bits.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace complog {

std::optional<Bits> Bits::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::int64_t whole = 0;
  std::size_t i = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
    whole = whole * 10 + (text[i] - '0');
    any_digit = true;
    if (whole > kMaxWhole) return std::nullopt;
  }
  if (!any_digit) return std::nullopt;
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size()) {
    if (text[i] != '.') return std::nullopt;
    ++i;
    if (i == text.size()) return std::nullopt;
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') return std::nullopt;
      if (frac_digits == kMaxDecimals) {
        // Extra digits are only tolerated when they are zeros.
        if (text[i] != '0') return std::nullopt;
        continue;
      }
      frac = frac * 10 + (text[i] - '0');
      ++frac_digits;
    }
  }
  for (int d = frac_digits; d < kMaxDecimals; ++d) frac *= 10;
  std::int64_t micro = whole * kScale + frac;
  if (micro > kMaxWhole * kScale) return std::nullopt;
  return Bits(micro);
}

std::string Bits::str() const {
  const bool neg = micro_ < 0;
  const std::uint64_t mag =
      neg ? static_cast<std::uint64_t>(-(micro_ + 1)) + 1
          : static_cast<std::uint64_t>(micro_);
  std::string out = neg ? "-" : "";
  out += std::to_string(mag / kScale);
  std::uint64_t frac = mag % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, kMaxDecimals - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

int Bits::decimals() const {
  std::int64_t frac = micro_ % kScale;
  if (frac < 0) frac = -frac;
  if (frac == 0) return 0;
  int d = kMaxDecimals;
  while (frac % 10 == 0) {
    frac /= 10;
    --d;
  }
  return d;
}

double Cost::to_double() const {
  return finite() ? bits().to_double() : INFINITY;
}

std::string Cost::str() const { return finite() ? bits().str() : "inf"; }

std::string format_double(double v, int decimals) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_double_exact(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace complog
