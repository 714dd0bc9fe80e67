// Copyright 2026 The gimpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GIMPL_EXT_VALUE_H_
#define GIMPL_EXT_VALUE_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gimpl {

using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0). The result is in lowest terms.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// An exact rational, or +infinity. Used for utilities, payment promises,
// budgets and costs. Infinity absorbs addition and compares above every
// finite value; two infinities compare equal.
class ExtValue {
 public:
  ExtValue() = default;
  ExtValue(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtValue(std::int64_t value) : value_(value) {}         // NOLINT
  ExtValue(int value) : value_(value) {}                  // NOLINT

  static ExtValue infinity() {
    ExtValue v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }
  bool is_negative() const { return !infinite_ && value_ < 0; }

  // Throws Error when infinite.
  const Rational& value() const;

  ExtValue& operator+=(const ExtValue& other);
  friend ExtValue operator+(ExtValue a, const ExtValue& b) { return a += b; }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtValue& a,
                                          const ExtValue& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "inf", "p" or "p/q".
  std::string to_string() const;
  // Accepts everything to_string produces.
  static ExtValue parse(std::string_view text);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtValue& v);

}  // namespace gimpl

#endif  // GIMPL_EXT_VALUE_H_
