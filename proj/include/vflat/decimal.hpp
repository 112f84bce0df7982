// Copyright 2026 The vflat Authors
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

#ifndef VFLAT_DECIMAL_HPP_
#define VFLAT_DECIMAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vflat/error.hpp"

namespace vflat {

// Exact base-10 number mantissa * 10^-scale. Right-hand sides given as
// decimal text are floored through this type so that "2.0000000000000004"
// floors to 2 and "1.9999999999999999" floors to 1.
class Decimal {
 public:
  static constexpr int kMaxScale = 18;

  constexpr Decimal() = default;
  constexpr Decimal(std::int64_t integer) : mantissa_(integer), scale_(0) {}  // NOLINT

  static Decimal Parse(std::string_view text) {
    auto fail = [&]() -> Error {
      return Error(ErrorKind::kInvalidInput,
                   "not a decimal number: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    __int128 mantissa = 0;
    int scale = 0;
    int digits = 0;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
      const char ch = text[pos];
      if (ch == '.') {
        if (seen_point) throw fail();
        seen_point = true;
        continue;
      }
      if (ch < '0' || ch > '9') throw fail();
      ++digits;
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_point) ++scale;
      if (mantissa > INT64_MAX || scale > kMaxScale) {
        throw Error(ErrorKind::kInvalidInput,
                    "decimal exceeds 18 significant digits: '" +
                        std::string(text) + "'");
      }
    }
    if (digits == 0) throw fail();
    Decimal result;
    result.mantissa_ = static_cast<std::int64_t>(negative ? -mantissa : mantissa);
    result.scale_ = scale;
    result.Normalize();
    return result;
  }

  // Largest integer not exceeding the value.
  constexpr std::int64_t Floor() const {
    if (scale_ == 0) return mantissa_;
    const std::int64_t unit = Pow10(scale_);
    std::int64_t q = mantissa_ / unit;
    if (mantissa_ % unit != 0 && mantissa_ < 0) --q;
    return q;
  }

  constexpr bool IsInteger() const { return scale_ == 0; }

  std::string ToString() const {
    if (scale_ == 0) return std::to_string(mantissa_);
    const bool negative = mantissa_ < 0;
    const auto raw = static_cast<unsigned long long>(mantissa_);
    std::string digits = std::to_string(negative ? 0ULL - raw : raw);
    if (static_cast<int>(digits.size()) <= scale_) {
      digits.insert(0, static_cast<std::size_t>(scale_) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale_), ".");
    return negative ? "-" + digits : digits;
  }

  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    const int scale = a.scale_ > b.scale_ ? a.scale_ : b.scale_;
    const __int128 lhs = static_cast<__int128>(a.mantissa_) * Pow10(scale - a.scale_);
    const __int128 rhs = static_cast<__int128>(b.mantissa_) * Pow10(scale - b.scale_);
    return lhs <=> rhs;
  }
  friend bool operator==(const Decimal& a, const Decimal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  static constexpr std::int64_t Pow10(int exponent) {
    std::int64_t p = 1;
    for (int i = 0; i < exponent; ++i) p *= 10;
    return p;
  }

  void Normalize() {
    while (scale_ > 0 && mantissa_ % 10 == 0) {
      mantissa_ /= 10;
      --scale_;
    }
  }

  std::int64_t mantissa_ = 0;
  int scale_ = 0;
};

using DecimalPoint = std::vector<Decimal>;

inline DecimalPoint ParseDecimalPoint(const std::vector<std::string>& texts) {
  DecimalPoint point;
  point.reserve(texts.size());
  for (const auto& t : texts) point.push_back(Decimal::Parse(t));
  return point;
}

inline std::string FormatDecimalPoint(const DecimalPoint& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) out += ",";
    out += point[i].ToString();
  }
  return out + ")";
}

}  // namespace vflat

#endif  // VFLAT_DECIMAL_HPP_
