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

#include "gimpl/ext_value.h"

#include <cctype>
#include <string>

#include "gimpl/error.h"

namespace gimpl {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  cpp_int p(std::string{num});
  cpp_int q(std::string{den});
  if (q == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& r) {
  const auto& q = boost::multiprecision::denominator(r);
  std::string out = boost::multiprecision::numerator(r).str();
  if (q != 1) out += "/" + q.str();
  return out;
}

const Rational& ExtValue::value() const {
  if (infinite_) throw Error("value() of an infinite ExtValue");
  return value_;
}

ExtValue& ExtValue::operator+=(const ExtValue& other) {
  if (infinite_) return *this;
  if (other.infinite_) {
    *this = infinity();
    return *this;
  }
  value_ += other.value_;
  return *this;
}

std::string ExtValue::to_string() const {
  return infinite_ ? std::string("inf") : gimpl::to_string(value_);
}

ExtValue ExtValue::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ExtValue(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtValue& v) {
  return os << v.to_string();
}

}  // namespace gimpl
